use hume::gen;
use hume::poly::{qf, AlgReal, Poly};
use hume::rcf::{rcf_build_bijection, rcf_decompose, rcf_from_sign_condition, Cell1, Piece, RcfSet, Rel, SignCond};
use proptest::prelude::*;
use rand::Rng;

/// Up to 20 points of `x`: one per cell, then grid rationals in `[-6, 6]`.
fn samples(x: &RcfSet) -> Vec<AlgReal> {
    let mut out: Vec<AlgReal> = x.cells().iter().map(Cell1::sample).collect();
    let grid: Vec<AlgReal> = (-48..=48)
        .map(|n| qf(n, 8))
        .filter(|a| x.contains_q(a))
        .map(AlgReal::from_rational)
        .collect();
    let step = (grid.len() / 20).max(1);
    out.extend(grid.into_iter().step_by(step));
    out.sort();
    out.dedup();
    out.truncate(20);
    out
}

fn same_piece(p: &Piece, a: &AlgReal, b: &AlgReal) -> bool {
    match p {
        Piece::Interval { from, .. } => from.contains(a) && from.contains(b),
        Piece::Point { .. } => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn euler_survives_refinement(seed in any::<u64>()) {
        let mut r = gen::rng(seed);
        let x = gen::rcf_set(&mut r);
        let extra: Vec<AlgReal> = (0..r.gen_range(1..=4))
            .map(|_| AlgReal::from_rational(qf(r.gen_range(-40..=40), r.gen_range(1..=7))))
            .collect();
        let d = rcf_decompose(std::slice::from_ref(&x));
        let fine = d.refine(&extra);
        prop_assert!(fine.verify());
        prop_assert_eq!(fine.invariant_of(0), x.invariant());
        prop_assert_eq!(d.invariant_of(0), x.invariant());
    }

    #[test]
    fn additive_on_disjoint_sets(seed in any::<u64>()) {
        let mut r = gen::rng(seed);
        let x = gen::rcf_set(&mut r);
        let y = gen::rcf_set(&mut r).difference(&x);
        prop_assert!(x.intersect(&y).is_empty());
        let (ex, ey) = (x.invariant().euler, y.invariant().euler);
        prop_assert_eq!(x.union(&y).invariant().euler, ex + ey);
    }

    #[test]
    fn bijection_lands_and_inverts(seed in any::<u64>()) {
        let mut r = gen::rng(seed);
        let x = gen::rcf_set(&mut r);
        let Some(y) = (0..400).map(|_| gen::rcf_set(&mut r)).find(|y| y.invariant() == x.invariant()) else {
            return Ok(());
        };
        let f = rcf_build_bijection(&x, &y).unwrap();
        let back = f.inverse();
        let pts = samples(&x);
        let images: Vec<AlgReal> = pts.iter().map(|a| f.apply(a).expect("defined on X")).collect();
        for (a, b) in pts.iter().zip(&images) {
            prop_assert!(y.contains(b), "{} -> {} outside Y", a, b);
            prop_assert_eq!(&back.apply(b).unwrap(), a);
        }
        for p in &f.pieces {
            let mut dir = None;
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    if same_piece(p, &pts[i], &pts[j]) {
                        let up = images[i] < images[j];
                        prop_assert_eq!(*dir.get_or_insert(up), up);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_sets_count_real_roots(cs in prop::collection::vec(-5i64..=5, 2..=6)) {
        let p = Poly::from_ints(&cs);
        prop_assume!(!p.is_zero());
        let z = rcf_from_sign_condition(&[SignCond::new(p.clone(), Rel::Eq)]).unwrap();
        let inv = z.invariant();
        let roots = p.squarefree_part().unwrap().real_roots().unwrap();
        prop_assert!(inv.dim <= 0);
        prop_assert_eq!(inv.euler, roots.len() as i64);
        for a in &roots {
            prop_assert!(z.contains(a));
        }
    }
}

#[test]
fn hume_equivalence_is_equality_of_numbers() {
    let pool: Vec<RcfSet> = (0..60).map(|s| gen::rcf_set(&mut gen::rng(s))).collect();
    for x in &pool {
        for y in &pool {
            assert_eq!(x.hume_equiv(y), x.number() == y.number(), "{x} vs {y}");
        }
    }
}
