use hume::logic::classify::{classify_absorbing, profile};
use hume::logic::schema::{instantiate_choice, instantiate_comprehension, instantiate_delta11};
use hume::logic::subst::nnf;
use hume::logic::*;
use proptest::prelude::*;

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["x", "y", "z"]).prop_map(var),
        (0u64..5).prop_map(Term::Num),
        prop::sample::select(vec!["X", "Y"]).prop_map(hash),
        Just(ext("X")),
        Just(Term::Abs(AbsOp::Hash, SetTerm::Empty)),
    ];
    leaf.prop_recursive(3, 12, 2, |t| {
        prop_oneof![
            t.clone().prop_map(succ),
            (t.clone(), t.clone()).prop_map(|(a, b)| add(a, b)),
            (t.clone(), t.clone()).prop_map(|(a, b)| mul(a, b)),
            t.prop_map(|a| Term::Neg(Box::new(a))),
        ]
    })
}

fn atom() -> impl Strategy<Value = Formula> {
    prop_oneof![
        Just(Formula::True),
        Just(Formula::False),
        (term(), prop::sample::select(vec!["X", "Y"])).prop_map(|(t, s)| in_set(t, s)),
        (term(), term()).prop_map(|(a, b)| mem(vec![a, b], "R")),
        (term(), term()).prop_map(|(a, b)| eq(a, b)),
        (term(), term()).prop_map(|(a, b)| le(a, b)),
    ]
}

/// Depth at most 6 counting connectives and quantifiers.
fn formula() -> impl Strategy<Value = Formula> {
    atom().prop_recursive(6, 48, 2, |f| {
        let name = prop::sample::select(vec!["x", "y", "z"]);
        let set = prop::sample::select(vec!["X", "Y"]);
        prop_oneof![
            f.clone().prop_map(not),
            (f.clone(), f.clone()).prop_map(|(a, b)| and(a, b)),
            (f.clone(), f.clone()).prop_map(|(a, b)| or(a, b)),
            (f.clone(), f.clone()).prop_map(|(a, b)| implies(a, b)),
            (f.clone(), f.clone()).prop_map(|(a, b)| iff(a, b)),
            (name.clone(), f.clone()).prop_map(|(x, b)| forall(x, b)),
            (name, f.clone()).prop_map(|(x, b)| exists(x, b)),
            (set.clone(), f.clone()).prop_map(|(x, b)| forall_rel(x, 1, b)),
            (set, f.clone()).prop_map(|(x, b)| exists_rel(x, 1, b)),
            f.prop_map(|b| forall_rel("R", 2, b)),
        ]
    })
}

/// Relation quantifiers and connectives only, so no object quantifier can be
/// promoted by a new outer block.
fn rel_only() -> impl Strategy<Value = Formula> {
    atom().prop_recursive(5, 32, 2, |f| {
        let set = prop::sample::select(vec!["X", "Y"]);
        prop_oneof![
            f.clone().prop_map(not),
            (f.clone(), f.clone()).prop_map(|(a, b)| and(a, b)),
            (f.clone(), f.clone()).prop_map(|(a, b)| implies(a, b)),
            (set.clone(), f.clone()).prop_map(|(x, b)| forall_rel(x, 1, b)),
            (set, f).prop_map(|(x, b)| exists_rel(x, 1, b)),
        ]
    })
}

fn open_arith() -> impl Strategy<Value = Formula> {
    let a = prop_oneof![
        Just(in_set(var("x"), "A")),
        Just(eq(var("x"), succ(var("y")))),
        Just(le(var("y"), var("x"))),
        Just(in_set(var("y"), "A")),
    ];
    a.prop_recursive(3, 8, 2, |f| {
        prop_oneof![
            f.clone().prop_map(not),
            (f.clone(), f.clone()).prop_map(|(a, b)| and(a, b)),
            (f.clone(), f).prop_map(|(a, b)| or(a, b)),
        ]
    })
    .prop_map(|f| and(in_set(var("x"), "A"), f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(f in formula()) {
        let text = print_formula(&f);
        prop_assert_eq!(parse_formula(&text).unwrap(), f, "{}", text);
    }

    #[test]
    fn negation_dualizes(f in formula()) {
        prop_assert_eq!(classify(&nnf(&not(f.clone()))), classify(&f).dual());
    }

    #[test]
    fn json_round_trip(f in formula()) {
        prop_assert_eq!(json::from_json(&json::to_json(&f)).unwrap(), f);
    }

    #[test]
    fn same_polarity_prefix_is_absorbed(f in rel_only()) {
        let p = profile(&f);
        prop_assume!(p.sigma != p.pi || !p.has_rel);
        match classify(&f) {
            Level::Arithmetical => {
                prop_assert_eq!(classify(&exists_rel("Z", 1, f.clone())), Level::Sigma(1));
                prop_assert_eq!(classify(&forall_rel("Z", 1, f)), Level::Pi(1));
            }
            Level::Sigma(n) => {
                prop_assert_eq!(classify(&exists_rel("Z", 1, f.clone())), Level::Sigma(n));
                prop_assert_eq!(classify(&forall_rel("Z", 1, f)), Level::Pi(n + 1));
            }
            Level::Pi(n) => {
                prop_assert_eq!(classify(&forall_rel("Z", 1, f.clone())), Level::Pi(n));
                prop_assert_eq!(classify(&exists_rel("Z", 1, f)), Level::Sigma(n + 1));
            }
        }
    }

    #[test]
    fn schema_instances_reparse(phi in open_arith(), psi in open_arith()) {
        let sigma = exists_rel("A", 1, phi.clone());
        let pi = forall_rel("A", 1, psi);

        let c = instantiate_comprehension(&sigma, "R", 1).unwrap();
        prop_assert_eq!(parse_formula(&print_formula(&c)).unwrap(), c.clone());
        prop_assert!(classify(&c).fits_within(Level::Sigma(3)));

        let d = instantiate_delta11(&sigma, &pi, "R", 1).unwrap();
        prop_assert_eq!(parse_formula(&print_formula(&d)).unwrap(), d.clone());
        prop_assert!(classify_absorbing(&d).n() <= 2, "{}", classify_absorbing(&d));

        let ch = instantiate_choice(&phi, "A", "R").unwrap();
        prop_assert_eq!(parse_formula(&print_formula(&ch)).unwrap(), ch.clone());
        prop_assert!(classify(&ch).fits_within(Level::Sigma(2)), "{}", classify(&ch));
    }
}
