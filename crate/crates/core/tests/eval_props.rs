use hume::eval::{eval, full_family, russell_set, FiniteStructure, Relation, Env, Verdict};
use hume::gen;
use hume::logic::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeMap;

/// Plain recursion over the definition of satisfaction; environments are
/// association lists searched from the innermost binding outwards.
fn reference(
    s: &FiniteStructure,
    f: &Formula,
    objs: &mut Vec<(String, usize)>,
    rels: &mut Vec<(String, Relation)>,
) -> bool {
    fn obj(objs: &[(String, usize)], x: &str) -> usize {
        objs.iter().rev().find(|(n, _)| n == x).map(|(_, a)| *a).unwrap()
    }
    fn rel<'a>(rels: &'a [(String, Relation)], r: &str) -> &'a Relation {
        rels.iter().rev().find(|(n, _)| n == r).map(|(_, v)| v).unwrap()
    }
    fn term(s: &FiniteStructure, t: &Term, objs: &[(String, usize)], rels: &[(String, Relation)]) -> usize {
        match t {
            Term::Var(x) => obj(objs, x),
            Term::Abs(_, SetTerm::Var(x)) => {
                let i = s.sets().iter().position(|r| r == rel(rels, x)).unwrap();
                s.abstract_of(i).unwrap()
            }
            other => panic!("outside the test language: {other:?}"),
        }
    }
    match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Mem(args, r) => {
            let t: Vec<usize> = args.iter().map(|a| term(s, a, objs, rels)).collect();
            rel(rels, r).contains(&t)
        }
        Formula::Eq(a, b) => term(s, a, objs, rels) == term(s, b, objs, rels),
        Formula::Not(a) => !reference(s, a, objs, rels),
        Formula::And(a, b) => reference(s, a, objs, rels) && reference(s, b, objs, rels),
        Formula::Or(a, b) => reference(s, a, objs, rels) || reference(s, b, objs, rels),
        Formula::Implies(a, b) => !reference(s, a, objs, rels) || reference(s, b, objs, rels),
        Formula::Iff(a, b) => reference(s, a, objs, rels) == reference(s, b, objs, rels),
        Formula::ForallObj(x, b) | Formula::ExistsObj(x, b) => {
            let all = matches!(f, Formula::ForallObj(..));
            let mut results = Vec::new();
            for a in 0..s.size() {
                objs.push((x.clone(), a));
                results.push(reference(s, b, objs, rels));
                objs.pop();
            }
            if all {
                results.iter().all(|&v| v)
            } else {
                results.iter().any(|&v| v)
            }
        }
        Formula::ForallRel(x, k, b) | Formula::ExistsRel(x, k, b) => {
            let all = matches!(f, Formula::ForallRel(..));
            let mut results = Vec::new();
            for r in s.family(*k) {
                rels.push((x.clone(), r.clone()));
                results.push(reference(s, b, objs, rels));
                rels.pop();
            }
            if all {
                results.iter().all(|&v| v)
            } else {
                results.iter().any(|&v| v)
            }
        }
        other => panic!("outside the test language: {other:?}"),
    }
}

fn term() -> impl Strategy<Value = Term> {
    prop_oneof![
        3 => prop::sample::select(vec!["x", "y"]).prop_map(var),
        1 => prop::sample::select(vec!["X", "Y"]).prop_map(hash),
    ]
}

/// Depth at most 5.
fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (term(), prop::sample::select(vec!["X", "Y"])).prop_map(|(t, x)| in_set(t, x)),
        (term(), term()).prop_map(|(a, b)| mem(vec![a, b], "R")),
        (term(), term()).prop_map(|(a, b)| eq(a, b)),
    ];
    atom.prop_recursive(5, 24, 2, |f| {
        let x = prop::sample::select(vec!["x", "y"]);
        let big = prop::sample::select(vec!["X", "Y"]);
        prop_oneof![
            f.clone().prop_map(not),
            (f.clone(), f.clone()).prop_map(|(a, b)| and(a, b)),
            (f.clone(), f.clone()).prop_map(|(a, b)| or(a, b)),
            (f.clone(), f.clone()).prop_map(|(a, b)| iff(a, b)),
            (x.clone(), f.clone()).prop_map(|(x, b)| forall(x, b)),
            (x, f.clone()).prop_map(|(x, b)| exists(x, b)),
            (big.clone(), f.clone()).prop_map(|(x, b)| forall_rel(x, 1, b)),
            (big, f.clone()).prop_map(|(x, b)| exists_rel(x, 1, b)),
            f.prop_map(|b| exists_rel("R", 2, b)),
        ]
    })
}

/// Full unary family, four random binary relations and a total `#`.
fn structure(seed: u64, size: usize) -> FiniteStructure {
    let mut r = gen::rng(seed);
    let binary: Vec<Relation> = (0..4)
        .map(|_| {
            let mut rel = Relation::empty(size, 2);
            for a in 0..size {
                for b in 0..size {
                    if r.gen_bool(0.4) {
                        rel.insert(&[a, b]);
                    }
                }
            }
            rel
        })
        .collect();
    let mut fam = BTreeMap::new();
    fam.insert(1, full_family(size, 1).unwrap());
    fam.insert(2, binary);
    let s = FiniteStructure::new(size, fam);
    let pairs: Vec<(usize, usize)> = (0..s.sets().len()).map(|i| (i, r.gen_range(0..size))).collect();
    s.with_abstraction(AbsOp::Hash, &pairs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn agrees_with_reference(seed in any::<u64>(), size in 1usize..=3, f in formula()) {
        let s = structure(seed, size);
        let (x, y) = (s.sets()[1].clone(), s.sets()[s.sets().len() - 1].clone());
        let r = s.family(2)[0].clone();
        let env = Env::new()
            .object("x", 0)
            .object("y", size - 1)
            .relation("X", x.clone())
            .relation("Y", y.clone())
            .relation("R", r.clone());
        let mut objs = vec![("x".to_string(), 0), ("y".to_string(), size - 1)];
        let mut rels = vec![("X".to_string(), x), ("Y".to_string(), y), ("R".to_string(), r)];
        let want = reference(&s, &f, &mut objs, &mut rels);
        prop_assert_eq!(eval(&s, &f, &env).unwrap(), want, "{}", print_formula(&f));
    }

    #[test]
    fn russell_verdict_survives_permutation(seed in any::<u64>(), size in 0usize..=4) {
        let mut r = gen::rng(seed);
        let s = gen::ext_structure(&mut r, size);
        let range = s.range();
        let a = Relation::from_set(size, range.iter().copied().filter(|_| r.gen_bool(0.5)));
        let a_index = s.set_index(&a).unwrap();
        let report = russell_set(&s, a_index).unwrap();
        prop_assert_eq!(&russell_set(&s, a_index).unwrap(), &report);

        let mut perm: Vec<usize> = (0..size).collect();
        perm.shuffle(&mut r);
        let t = s.permuted(&perm);
        let pa = t.set_index(&a.permuted(&perm)).unwrap();
        let moved = russell_set(&t, pa).unwrap();
        prop_assert_eq!(
            std::mem::discriminant(&moved.verdict),
            std::mem::discriminant(&report.verdict)
        );
        let mut b: Vec<i64> = report.b.iter().map(|&x| perm[x as usize] as i64).collect();
        b.sort_unstable();
        prop_assert_eq!(&moved.b, &b);
        if let (Verdict::WitnessFound { extension: e1 }, Verdict::WitnessFound { extension: e2 }) =
            (&report.verdict, &moved.verdict)
        {
            prop_assert_eq!(perm[*e1 as usize] as i64, *e2);
        }
    }
}
