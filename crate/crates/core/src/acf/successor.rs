//! The relation `P(n, m) ⟺ ∃X,Y (#X = n ∧ #Y = m ∧ ∃y ∈ Y. X = Y − {y})`,
//! decided by exhibiting witness sets, and the failure of the successor axiom.

use super::AcfSet;
use crate::poly::{q, qf, Poly, Q};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuccessorWitness {
    pub x: AcfSet,
    pub y: AcfSet,
    pub point: String,
}

/// Sets with `#X = n`. Several shapes per value so the search is not tied to a
/// single representative; every `n` has at least one member.
pub fn witness_pool(n: i64) -> Vec<AcfSet> {
    let c = if n >= 0 { n } else { -n - 1 } as usize;
    let ints: Vec<Q> = (0..c as i64).map(q).collect();
    let halves: Vec<Q> = (0..c as i64).map(|i| qf(2 * i + 1, 2)).collect();
    let mut bases = vec![Poly::from_roots(&ints), Poly::from_roots(&halves)];
    if c > 0 {
        let mut cs = vec![Q::from_integer(0.into()); c + 1];
        cs[0] = q(-2);
        cs[c] = q(1);
        bases.push(Poly::new(cs));
    }
    bases
        .iter()
        .map(|b| if n >= 0 { AcfSet::roots(b) } else { AcfSet::co_roots(b) })
        .collect()
}

/// Points tried as the removed element `y`.
fn candidates(n: i64) -> Vec<Q> {
    let k = n.abs() + 3;
    let mut out: Vec<Q> = (-k..=k).map(q).collect();
    out.push(qf(1, 3));
    out
}

fn witnesses(n: i64) -> impl Iterator<Item = SuccessorWitness> {
    witness_pool(n).into_iter().flat_map(move |x| {
        candidates(n).into_iter().filter_map(move |pt| {
            let single = AcfSet::of_points(std::slice::from_ref(&pt));
            if !single.intersect(&x).is_empty() {
                return None;
            }
            let y = x.union(&single);
            // y ∈ Y and X = Y − {y}
            (y.contains(&pt) && y.difference(&single) == x).then(|| SuccessorWitness {
                x: x.clone(),
                y,
                point: pt.to_string(),
            })
        })
    })
}

pub fn successor_witness(n: i64, m: i64) -> Option<SuccessorWitness> {
    witnesses(n).find(|w| w.x.number() == n && w.y.number() == m)
}

/// Every `m` reached from `n` by some witness.
pub fn successors_of(n: i64) -> BTreeSet<i64> {
    witnesses(n).map(|w| w.y.number()).collect()
}

pub fn acf_successor_p(n: i64, m: i64) -> bool {
    successor_witness(n, m).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FCheck {
    pub set: AcfSet,
    pub closed: bool,
    pub hereditary: bool,
    /// A pair with `F(n)`, `P(n, m)` and `¬F(m)`.
    pub escape: Option<(i64, i64)>,
    /// Contains every `±1..±B`.
    pub contains_nonzero_integers: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaReport {
    pub bound: i64,
    /// `F` is checked on integers in `[-window, window]`.
    pub window: i64,
    /// `#k`.
    pub witness: i64,
    pub witness_successors: Vec<i64>,
    pub scanned_m: (i64, i64),
    pub checks: Vec<FCheck>,
    /// Every sampled hereditary closed `F` contains `ℤ − {0}` up to the bound.
    pub verified: bool,
    pub note: String,
}

fn sample_family() -> Vec<AcfSet> {
    let x = Poly::x();
    vec![
        AcfSet::co_roots(&x),
        AcfSet::full(),
        AcfSet::co_roots(&Poly::from_roots(&[qf(1, 2)])),
        AcfSet::co_roots(&Poly::from_ints(&[1, 0, 1])),
        AcfSet::roots(&Poly::from_roots(&[q(1), q(2), q(3)])),
        AcfSet::co_roots(&Poly::from_roots(&[q(-1)])),
        AcfSet::co_roots(&Poly::from_roots(&[q(-4), q(0)])),
        AcfSet::empty(),
    ]
}

fn integer_roots(s: &AcfSet) -> i64 {
    s.base()
        .rational_roots()
        .iter()
        .filter(|r| r.is_integer())
        .filter_map(|r| r.to_integer().to_i64())
        .map(i64::abs)
        .max()
        .unwrap_or(0)
}

fn check(f: &AcfSet, bound: i64, window: i64, succ: &dyn Fn(i64) -> BTreeSet<i64>) -> FCheck {
    let has = |n: i64| f.contains(&q(n));
    let closed = succ(0).iter().all(|&m| has(m));
    let mut escape = None;
    'scan: for n in -window..=window {
        if !has(n) {
            continue;
        }
        for m in succ(n) {
            if m.abs() <= window && !has(m) {
                escape = Some((n, m));
                break 'scan;
            }
        }
    }
    FCheck {
        set: f.clone(),
        closed,
        hereditary: escape.is_none(),
        escape,
        contains_nonzero_integers: (1..=bound).all(|i| has(i) && has(-i)),
    }
}

pub fn acf_sa_report(bound: u32) -> SaReport {
    let bound = i64::from(bound.max(1));
    let family = sample_family();
    let window = family.iter().map(integer_roots).max().unwrap_or(0).max(bound) + 1;
    let table: Vec<BTreeSet<i64>> = (-window..=window).map(successors_of).collect();
    let succ = |n: i64| table[(n + window) as usize].clone();
    let checks: Vec<FCheck> = family.iter().map(|f| check(f, bound, window, &succ)).collect();
    let verified = checks
        .iter()
        .filter(|c| c.closed && c.hereditary)
        .all(|c| c.contains_nonzero_integers);
    let witness = AcfSet::full().number();
    let scan = 2 * bound + 2;
    let witness_successors: Vec<i64> = successors_of(witness).into_iter().filter(|m| m.abs() <= scan).collect();
    SaReport {
        bound,
        window,
        witness,
        witness_successors,
        scanned_m: (-scan, scan),
        checks,
        verified,
        note: format!(
            "only the {} listed sets F are checked, on integers in [-{window}, {window}]",
            family.len()
        ),
    }
}
