//! The generalized Russell construction and the pigeonhole obstruction to an
//! injective extension map on a full powerset.

use super::{FiniteStructure, Relation};
use serde::Serialize;

pub const MAX_SEARCH_UNIVERSE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureReason {
    /// `B` is not a member of `S₁`.
    NotInFamily,
    /// `B ∈ S₁` but the extension map is undefined on it.
    OutsideDomain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// `∂B ∈ rng ∂ − A`.
    WitnessFound { extension: i64 },
    ClosureFailure { reason: ClosureReason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RussellReport {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RussellError {
    #[error("structure has no extension map")]
    NoAbstraction,
    #[error("extension map is not injective")]
    NotInjective,
    #[error("set index {0} is not a member of S1")]
    NotInFamily(usize),
    #[error("A is not contained in the range of the extension map (atom {0})")]
    NotInRange(i64),
    #[error("extension of B lies in A, so the extension map is not injective")]
    Inconsistent,
}

/// `B = {x ∈ A : ∃X ∈ dom ∂ (∂X = x ∧ x ∉ X)}` and where `∂B` lands.
pub fn russell_set(s: &FiniteStructure, a_index: usize) -> Result<RussellReport, RussellError> {
    let abs = s.abstraction.as_ref().ok_or(RussellError::NoAbstraction)?;
    if !s.is_injective() {
        return Err(RussellError::NotInjective);
    }
    let a = s.sets().get(a_index).ok_or(RussellError::NotInFamily(a_index))?;
    let range = s.range();
    if let Some(&x) = a.atoms().iter().find(|x| !range.contains(x)) {
        return Err(RussellError::NotInRange(s.labels[x]));
    }
    let b_atoms: Vec<usize> = a
        .atoms()
        .into_iter()
        .filter(|&x| {
            abs.values
                .iter()
                .enumerate()
                .any(|(i, v)| *v == Some(x) && !s.sets()[i].contains(&[x]))
        })
        .collect();
    let b = Relation::from_set(s.size(), b_atoms.iter().copied());
    let label = |xs: &[usize]| xs.iter().map(|&x| s.labels[x]).collect::<Vec<_>>();
    let verdict = match s.set_index(&b) {
        None => Verdict::ClosureFailure {
            reason: ClosureReason::NotInFamily,
        },
        Some(i) => match s.abstract_of(i) {
            None => Verdict::ClosureFailure {
                reason: ClosureReason::OutsideDomain,
            },
            Some(e) if a.contains(&[e]) => return Err(RussellError::Inconsistent),
            Some(e) => Verdict::WitnessFound {
                extension: s.labels[e],
            },
        },
    };
    Ok(RussellReport {
        a: label(&a.atoms()),
        b: label(&b_atoms),
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum BlvSearch {
    /// `assignment[i]` is the atom given to `family[i]`.
    Injection { assignment: Vec<usize> },
    /// More sets than atoms.
    Pigeonhole { sets: usize, atoms: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("universe size {0} exceeds the exhaustive limit {MAX_SEARCH_UNIVERSE}")]
    SizeLimit(usize),
    #[error("set {0} contains an atom outside the universe")]
    OutOfUniverse(usize),
}

/// Backtracking search for an injective assignment of the family into `{0..m-1}`.
pub fn blv_injection_search(m: usize, family: &[Vec<usize>]) -> Result<BlvSearch, SearchError> {
    if m > MAX_SEARCH_UNIVERSE {
        return Err(SearchError::SizeLimit(m));
    }
    if let Some(i) = family.iter().position(|s| s.iter().any(|&a| a >= m)) {
        return Err(SearchError::OutOfUniverse(i));
    }
    if family.len() > m {
        return Ok(BlvSearch::Pigeonhole {
            sets: family.len(),
            atoms: m,
        });
    }
    fn extend(m: usize, n: usize, used: &mut [bool], out: &mut Vec<usize>) -> bool {
        if out.len() == n {
            return true;
        }
        for a in 0..m {
            if !used[a] {
                used[a] = true;
                out.push(a);
                if extend(m, n, used, out) {
                    return true;
                }
                out.pop();
                used[a] = false;
            }
        }
        false
    }
    let mut used = vec![false; m];
    let mut out = Vec::new();
    let found = extend(m, family.len(), &mut used, &mut out);
    debug_assert!(found, "|family| <= m always admits an injection");
    Ok(BlvSearch::Injection { assignment: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::AbsOp;
    use std::collections::BTreeMap;

    fn example() -> FiniteStructure {
        let sets = vec![
            Relation::from_set(3, []),
            Relation::from_set(3, [0]),
            Relation::from_set(3, [1]),
            Relation::from_set(3, [0, 1]),
        ];
        FiniteStructure::new(3, BTreeMap::from([(1, sets)]))
            .with_abstraction(AbsOp::Ext, &[(0, 0), (1, 1), (2, 2)])
            .unwrap()
    }

    #[test]
    fn singleton_a_finds_witness() {
        let r = russell_set(&example(), 1).unwrap();
        assert_eq!(r.b, vec![0]);
        assert_eq!(r.verdict, Verdict::WitnessFound { extension: 1 });
    }

    #[test]
    fn pair_a_hits_undefined_extension() {
        let r = russell_set(&example(), 3).unwrap();
        assert_eq!(r.b, vec![0, 1]);
        assert_eq!(
            r.verdict,
            Verdict::ClosureFailure {
                reason: ClosureReason::OutsideDomain
            }
        );
    }

    #[test]
    fn empty_a() {
        let r = russell_set(&example(), 0).unwrap();
        assert!(r.b.is_empty());
        assert_eq!(r.verdict, Verdict::WitnessFound { extension: 0 });
    }

    #[test]
    fn pigeonhole() {
        let power2 = vec![vec![], vec![0], vec![1], vec![0, 1]];
        assert_eq!(
            blv_injection_search(2, &power2).unwrap(),
            BlvSearch::Pigeonhole { sets: 4, atoms: 2 }
        );
        let fam = vec![vec![], vec![0], vec![1]];
        assert!(matches!(
            blv_injection_search(3, &fam).unwrap(),
            BlvSearch::Injection { .. }
        ));
        assert_eq!(blv_injection_search(7, &[]), Err(SearchError::SizeLimit(7)));
    }
}
