use hume::gen;
use hume::hmodel::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use std::collections::{BTreeMap, BTreeSet};

/// Finite sets are equinumerous exactly when they have as many members; every
/// cofinite subset of `ω+κ+1` is countably infinite.
fn equinumerous(x: &HSet, y: &HSet) -> bool {
    match (x.mode, y.mode) {
        (HMode::Finite, HMode::Finite) => x.exceptions.len() == y.exceptions.len(),
        (HMode::Cofinite, HMode::Cofinite) => true,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn card_decides_equinumerosity(seed in any::<u64>(), kappa in 0u32..=6) {
        let mut r = gen::rng(seed);
        let pool: Vec<HSet> = (0..24).map(|_| gen::hset(&mut r, kappa)).collect();
        for x in &pool {
            prop_assert!(x.in_universe(kappa));
            for y in &pool {
                prop_assert_eq!(h_card(kappa, x) == h_card(kappa, y), equinumerous(x, y));
            }
        }
    }

    #[test]
    fn gamma_recovers_a_permutation_of_the_range(seed in any::<u64>(), kappa in 0u32..=3) {
        let mut r = gen::rng(seed);
        let family = h_pool(kappa, 3);
        let sharp1 = card_table(kappa, &family);
        let values: Vec<OrdElem> = sharp1.values().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut shuffled = values.clone();
        shuffled.shuffle(&mut r);
        let perm: BTreeMap<OrdElem, OrdElem> = values.iter().copied().zip(shuffled).collect();
        let sharp2: BTreeMap<HSet, OrdElem> = sharp1.iter().map(|(x, v)| (x.clone(), perm[v])).collect();
        let report = h_gamma_iso(kappa, &family, &sharp1, &sharp2).unwrap();
        prop_assert!(report.well_defined && report.bijective && report.commutes);
        prop_assert_eq!(report.mapping, perm.into_iter().collect::<Vec<_>>());
    }
}

#[test]
fn range_complement_is_omega_plus_one_to_kappa() {
    for kappa in 0..=10 {
        let want: Vec<OrdElem> = (1..=kappa).map(OrdElem::OmegaPlus).collect();
        assert_eq!(h_range_complement(kappa).unwrap(), want, "kappa {kappa}");
    }
}

#[test]
fn swaps_outside_the_range_are_automorphisms() {
    for kappa in 0..=5 {
        let pool = h_pool(kappa, 4);
        let outside = h_range_complement(kappa).unwrap();
        for &beta in &outside {
            for &gamma in &outside {
                let report = h_swap_check(kappa, beta, gamma, &pool).unwrap();
                assert!(report.passed, "kappa {kappa}: {beta} <-> {gamma} fails on {:?}", report.failures);
                assert_eq!(report.checked, pool.len());
            }
        }
    }
}
