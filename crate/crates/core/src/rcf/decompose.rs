//! Cell decompositions of the line adapted to finitely many sets, and the
//! definable-choice contrast between the real and the complex case.

use super::{merge_breaks, piece_cells, Cell1, Invariant, RcfSet};
use crate::acf::AcfSet;
use crate::poly::{q, AlgReal, Poly};
use serde::Serialize;

/// A partition of the line into cells such that every target is a union of
/// cells; `certificates[i]` lists the cells making up target `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub breakpoints: Vec<AlgReal>,
    pub cells: Vec<Cell1>,
    pub certificates: Vec<Vec<usize>>,
    #[serde(skip)]
    targets: Vec<RcfSet>,
}

pub fn rcf_decompose(targets: &[RcfSet]) -> Decomposition {
    let breaks = targets.iter().fold(Vec::new(), |acc, t| merge_breaks(&acc, t.breakpoints()));
    Decomposition::over(breaks, targets.to_vec())
}

impl Decomposition {
    fn over(breaks: Vec<AlgReal>, targets: Vec<RcfSet>) -> Decomposition {
        let certificates = targets
            .iter()
            .map(|t| {
                t.bits_over(&breaks)
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Decomposition {
            cells: piece_cells(&breaks),
            breakpoints: breaks,
            certificates,
            targets,
        }
    }

    /// The same targets over a finer partition.
    pub fn refine(&self, extra: &[AlgReal]) -> Decomposition {
        let mut extra = extra.to_vec();
        extra.sort();
        extra.dedup();
        Decomposition::over(merge_breaks(&self.breakpoints, &extra), self.targets.clone())
    }

    /// `(dim, E)` of target `i` counted from its certificate cells.
    pub fn invariant_of(&self, i: usize) -> Invariant {
        let cells = &self.certificates[i];
        let points = cells.iter().filter(|&&c| self.cells[c].dim() == 0).count() as i64;
        let intervals = cells.len() as i64 - points;
        let dim = if intervals > 0 {
            1
        } else if points > 0 {
            0
        } else {
            -1
        };
        Invariant {
            dim,
            euler: points - intervals,
        }
    }

    /// Every target equals the union of its certificate cells.
    pub fn verify(&self) -> bool {
        self.targets.iter().zip(&self.certificates).all(|(t, cert)| {
            let cells: Vec<Cell1> = cert.iter().map(|&i| self.cells[i].clone()).collect();
            RcfSet::from_cells(&cells) == *t
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkolemReport {
    /// `{x : x ≥ 0}`, picking one square root of each positive number.
    pub rcf_choice_set: RcfSet,
    pub rcf_cells: Vec<Cell1>,
    pub rcf_invariant: Invariant,
    /// For `a = 1..=scan`, exactly one root of `x² − a` lies in the choice set.
    pub rcf_picks_one_root: bool,
    pub scan: i64,
    /// `|C_n|` for the finite sets `C_n = {1, …, n}` choosing `+k` for `a = k²`.
    pub acf_finite_choice_sizes: Vec<usize>,
    /// A cofinite set avoiding `−1, …, −n` still holds both roots of `x² − (n+1)²`.
    pub acf_cofinite_contains_both: bool,
    pub acf_infinite_coinfinite_representable: bool,
    pub note: String,
}

pub fn rcf_skolem_demo() -> SkolemReport {
    let zero = AlgReal::from_int(0);
    let choice = RcfSet::point(zero.clone()).union(&RcfSet::from_cells(&[Cell1::Interval {
        lo: Some(zero),
        hi: None,
    }]));
    let scan = 10i64;
    let picks_one = (1..=scan).all(|a| {
        let roots = Poly::from_ints(&[-a, 0, 1]).real_roots().expect("nonzero");
        roots.iter().filter(|r| choice.contains(r)).count() == 1
    });
    let sizes = (1..=scan)
        .map(|n| {
            let roots: Vec<_> = (1..=n).map(q).collect();
            match AcfSet::of_points(&roots).card() {
                crate::acf::CardClass::FiniteCard(c) => c,
                crate::acf::CardClass::CofiniteCard(_) => unreachable!("finite by construction"),
            }
        })
        .collect();
    let both = (1..=scan).all(|n| {
        let avoid: Vec<_> = (1..=n).map(|k| q(-k)).collect();
        let c = AcfSet::of_points(&avoid).complement();
        c.contains(&q(n + 1)) && c.contains(&q(-(n + 1)))
    });
    SkolemReport {
        rcf_cells: choice.cells(),
        rcf_invariant: choice.invariant(),
        rcf_choice_set: choice,
        rcf_picks_one_root: picks_one,
        scan,
        acf_finite_choice_sizes: sizes,
        acf_cofinite_contains_both: both,
        acf_infinite_coinfinite_representable: false,
        note: "a set in the complex case is a root set or its complement, so a choice of one root of \
               each x^2 - a is finite (missing all but finitely many a) or cofinite (holding both roots \
               of all but finitely many)"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> RcfSet {
        t.parse().unwrap()
    }

    #[test]
    fn worked_x_decomposition() {
        let d = rcf_decompose(&[s("(-2, -1) U {0} U (1, 2)")]);
        let bs: Vec<String> = d.breakpoints.iter().map(|b| b.to_string()).collect();
        assert_eq!(bs, ["-2", "-1", "0", "1", "2"]);
        assert_eq!(d.certificates[0].len(), 3);
        assert!(d.verify());
    }

    #[test]
    fn trivial_and_two_targets() {
        let d = rcf_decompose(&[]);
        assert_eq!(d.cells.len(), 1);
        let d = rcf_decompose(&[s("{0}"), RcfSet::open(-1, 1)]);
        assert_eq!(d.breakpoints.len(), 3);
        assert_eq!(d.certificates, vec![vec![3], vec![2, 3, 4]]);
        assert!(d.verify());
    }

    #[test]
    fn refinement_keeps_invariant() {
        let d = rcf_decompose(&[s("(-2, -1) U {0} U (1, 2)")]);
        let r = d.refine(&[AlgReal::from_int(5), AlgReal::from_rational(q(3) / q(2)), AlgReal::from_int(-2)]);
        assert!(r.cells.len() > d.cells.len());
        assert_eq!(r.invariant_of(0), d.invariant_of(0));
        assert!(r.verify());
    }

    #[test]
    fn skolem_report() {
        let r = rcf_skolem_demo();
        assert_eq!(r.rcf_cells.len(), 2);
        assert_eq!(r.rcf_invariant, Invariant { dim: 1, euler: 0 });
        assert!(r.rcf_picks_one_root);
        assert_eq!(r.acf_finite_choice_sizes, (1..=10).collect::<Vec<_>>());
        assert!(r.acf_cofinite_contains_both);
        assert!(!r.acf_infinite_coinfinite_representable);
    }
}
