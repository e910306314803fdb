use hume::acf::{acf_successor_p, acf_theta_prime, successors_of, AcfSet, CardClass};
use hume::gen;
use hume::poly::{q, qf, Q};
use proptest::prelude::*;

fn pool(n: u64) -> Vec<AcfSet> {
    (0..n).map(|seed| gen::acf_set(&mut gen::rng(seed))).collect()
}

fn probes() -> Vec<Q> {
    (-12..=12).map(|n| qf(n, 2)).collect()
}

#[test]
fn boolean_laws_over_twelve_sets() {
    let sets = pool(12);
    let pts = probes();
    for x in &sets {
        assert_eq!(&x.complement().complement(), x);
        for y in &sets {
            assert_eq!(x.union(y), y.union(x));
            assert_eq!(x.intersect(y), y.intersect(x));
            assert_eq!(x.union(y).complement(), x.complement().intersect(&y.complement()));
            assert_eq!(x.intersect(y).complement(), x.complement().union(&y.complement()));
            assert_eq!(x.difference(y), x.intersect(&y.complement()));
            for a in &pts {
                assert_eq!(x.union(y).contains(a), x.contains(a) || y.contains(a));
                assert_eq!(x.intersect(y).contains(a), x.contains(a) && y.contains(a));
            }
            for z in &sets {
                assert_eq!(x.union(y).union(z), x.union(&y.union(z)));
                assert_eq!(x.intersect(y).intersect(z), x.intersect(&y.intersect(z)));
            }
        }
    }
}

#[test]
fn hume_equivalence_is_equality_of_numbers() {
    let sets = pool(60);
    for x in &sets {
        for y in &sets {
            assert_eq!(x.hume_equiv(y), x.number() == y.number(), "{x} vs {y}");
        }
    }
}

#[test]
fn numbers_separate_finite_from_cofinite() {
    let mut window: Vec<Q> = (-40..=40).map(q).chain(probes()).collect();
    window.sort();
    window.dedup();
    for x in pool(60) {
        let n = x.number();
        let members = window.iter().filter(|a| x.contains(a)).count() as i64;
        match x.card() {
            CardClass::FiniteCard(k) => {
                assert_eq!(n, k as i64);
                assert!(members <= n);
            }
            CardClass::CofiniteCard(k) => {
                assert_eq!(n, -(k as i64) - 1);
                assert!(window.len() as i64 - members <= -n - 1);
            }
        }
    }
}

#[test]
fn successor_matches_closed_form() {
    for n in -20..=20i64 {
        let found = successors_of(n);
        for m in -20..=20i64 {
            let closed = (n >= 0 || n <= -2) && m == n + 1;
            assert_eq!(found.contains(&m), closed, "P({n}, {m})");
        }
        assert_eq!(acf_successor_p(n, n + 1), n != -1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn theta_prime_picks_out_the_number(seed in any::<u64>()) {
        let mut r = gen::rng(seed);
        let fam = gen::acf_descriptors(&mut r, 1).pop().unwrap();
        let tp = acf_theta_prime(&fam);
        for i in 0..50i64 {
            let args: Vec<Q> = fam.params().iter().map(|_| qf(i % 11 - 5, 1 + i / 11)).collect();
            let want = fam.instance(&args).unwrap().number();
            let sol = tp.solutions(&args).unwrap();
            prop_assert_eq!(sol.integers, vec![want]);
            prop_assert!(!sol.generic);
        }
    }
}
