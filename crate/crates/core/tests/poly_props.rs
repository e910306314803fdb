use hume::poly::{collision_witness, qf, Poly};
use proptest::prelude::*;

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, 1i64..=3), 1..=max_deg + 1)
        .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| qf(n, d)).collect()))
}

fn nonzero(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gcd_divides_both(p in poly(8), q in poly(8)) {
        prop_assume!(!(p.is_zero() && q.is_zero()));
        let g = p.gcd(&q);
        prop_assert!(p.rem(&g).is_zero());
        prop_assert!(q.rem(&g).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distinct_roots_of_a_product(p in nonzero(5), q in nonzero(5)) {
        let pq = &p * &q;
        let n = pq.distinct_root_count().unwrap();
        prop_assert_eq!(n, pq.squarefree_part().unwrap().deg());
        let shared = p.gcd(&q).distinct_root_count().unwrap();
        prop_assert_eq!(
            n,
            p.distinct_root_count().unwrap() + q.distinct_root_count().unwrap() - shared
        );
        prop_assert!(pq.squarefree_part().unwrap().is_squarefree());
    }

    #[test]
    fn real_roots_are_roots(p in nonzero(6)) {
        let roots = p.real_roots().unwrap();
        prop_assert!(roots.len() <= p.distinct_root_count().unwrap());
        prop_assert_eq!(roots.len(), p.count_real_roots().unwrap());
        for w in roots.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for r in &roots {
            prop_assert_eq!(r.sign_of(&p), 0);
        }
    }

    #[test]
    fn rational_linear_products_split(rs in prop::collection::btree_set((-12i64..=12, 1i64..=4), 1..=6)) {
        let mut pts: Vec<_> = rs.into_iter().map(|(n, d)| qf(n, d)).collect();
        pts.sort();
        pts.dedup();
        let p = Poly::from_roots(&pts);
        let roots = p.real_roots().unwrap();
        prop_assert_eq!(roots.len(), p.distinct_root_count().unwrap());
        let got: Vec<_> = roots.iter().map(|r| r.as_rational().unwrap()).collect();
        prop_assert_eq!(got, pts);
    }

    #[test]
    fn collisions_exactly_above_degree_one(p in nonzero(6)) {
        prop_assume!(p.deg() >= 1);
        let w = collision_witness(&p).unwrap();
        prop_assert_eq!(w.is_none(), p.deg() == 1);
        if let Some(c) = w {
            prop_assert!(c.verify(&p));
        }
    }
}
