//! Explicit definable bijections between sets with equal `(dim, E)`.
//!
//! Splitting an interval `(a, b)` at an interior point into `(a,c), {c}, (c,b)`
//! adds one point and one interval and keeps `E`. After enough splits on the
//! side with fewer cells both sides have the same numbers of points and of
//! intervals, and cells are matched in order. Each interval is sent to `(0,1)`
//! by a monotone map and back out of it, which is affine between bounded
//! intervals.

use super::{Cell1, Invariant, RcfSet};
use crate::poly::{q, rational_between, AlgReal};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenInterval {
    pub lo: Option<AlgReal>,
    pub hi: Option<AlgReal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Piece {
    Point { from: AlgReal, to: AlgReal },
    Interval { from: OpenInterval, to: OpenInterval },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bijection {
    pub pieces: Vec<Piece>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("invariants differ: (dim {}, E {}) vs (dim {}, E {})", .0.dim, .0.euler, .1.dim, .1.euler)]
    InvariantMismatch(Invariant, Invariant),
}

impl OpenInterval {
    pub fn contains(&self, x: &AlgReal) -> bool {
        self.lo.as_ref().is_none_or(|a| a < x) && self.hi.as_ref().is_none_or(|b| x < b)
    }

    /// Increasing map onto `(0, 1)`.
    fn to_unit(&self, x: &AlgReal) -> AlgReal {
        let one = AlgReal::from_int(1);
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => x.sub(a).div(&b.sub(a)).expect("a < b"),
            // (x - a) / (x - a + 1)
            (Some(a), None) => {
                let d = x.sub(a);
                d.div(&d.add(&one)).expect("positive")
            }
            // 1 / (b - x + 1)
            (None, Some(b)) => one.div(&b.sub(x).add(&one)).expect("positive"),
            // 1/2 + x / (2 (1 + |x|))
            (None, None) => {
                let ax = if x.signum() < 0 { x.neg() } else { x.clone() };
                let half = AlgReal::from_rational(q(1) / q(2));
                half.add(&x.div(&ax.add(&one).mul(&AlgReal::from_int(2))).expect("positive"))
            }
        }
    }

    /// Inverse of [`OpenInterval::to_unit`] on `(0, 1)`.
    fn from_unit(&self, t: &AlgReal) -> AlgReal {
        let one = AlgReal::from_int(1);
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => a.add(&t.mul(&b.sub(a))),
            (Some(a), None) => a.add(&t.div(&one.sub(t)).expect("t < 1")),
            (None, Some(b)) => b.add(&one).sub(&one.div(t).expect("t > 0")),
            (None, None) => {
                let s = t.mul(&AlgReal::from_int(2)).sub(&one);
                let abs = if s.signum() < 0 { s.neg() } else { s.clone() };
                s.div(&one.sub(&abs)).expect("|s| < 1")
            }
        }
    }

    fn bounded(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }
}

impl fmt::Display for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.lo.as_ref().map_or("-inf".to_string(), |a| a.to_string());
        let hi = self.hi.as_ref().map_or("inf".to_string(), |b| b.to_string());
        write!(f, "({lo}, {hi})")
    }
}

impl Piece {
    pub fn apply(&self, x: &AlgReal) -> Option<AlgReal> {
        match self {
            Piece::Point { from, to } => (from == x).then(|| to.clone()),
            Piece::Interval { from, to } => {
                if !from.contains(x) {
                    return None;
                }
                if from == to {
                    return Some(x.clone());
                }
                if from.bounded() && to.bounded() {
                    let (a, b) = (from.lo.as_ref()?, from.hi.as_ref()?);
                    let (c, d) = (to.lo.as_ref()?, to.hi.as_ref()?);
                    let slope = d.sub(c).div(&b.sub(a)).ok()?;
                    return Some(c.add(&x.sub(a).mul(&slope)));
                }
                Some(to.from_unit(&from.to_unit(x)))
            }
        }
    }

    pub fn inverse(&self) -> Piece {
        match self {
            Piece::Point { from, to } => Piece::Point {
                from: to.clone(),
                to: from.clone(),
            },
            Piece::Interval { from, to } => Piece::Interval {
                from: to.clone(),
                to: from.clone(),
            },
        }
    }

    fn domain(&self) -> RcfSet {
        match self {
            Piece::Point { from, .. } => RcfSet::point(from.clone()),
            Piece::Interval { from, .. } => RcfSet::from_cells(&[Cell1::Interval {
                lo: from.lo.clone(),
                hi: from.hi.clone(),
            }]),
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Point { from, to } => write!(f, "{from} -> {to}"),
            Piece::Interval { from, to } => write!(f, "{from} -> {to}"),
        }
    }
}

impl Bijection {
    pub fn apply(&self, x: &AlgReal) -> Option<AlgReal> {
        self.pieces.iter().find_map(|p| p.apply(x))
    }

    pub fn inverse(&self) -> Bijection {
        Bijection {
            pieces: self.pieces.iter().map(Piece::inverse).collect(),
        }
    }

    /// Pieces are pairwise disjoint and their union is `x`, and likewise for
    /// the targets and `y`. With each piece a bijection this makes the whole
    /// map one.
    pub fn covers(&self, x: &RcfSet, y: &RcfSet) -> bool {
        fn exact(parts: Vec<RcfSet>, whole: &RcfSet) -> bool {
            let mut acc = RcfSet::empty();
            for p in parts {
                if !acc.intersect(&p).is_empty() {
                    return false;
                }
                acc = acc.union(&p);
            }
            acc == *whole
        }
        exact(self.pieces.iter().map(Piece::domain).collect(), x)
            && exact(self.inverse().pieces.iter().map(Piece::domain).collect(), y)
    }
}

fn split_cells(cells: &[Cell1], mut extra: usize) -> Vec<Cell1> {
    let mut out = cells.to_vec();
    while extra > 0 {
        let i = out
            .iter()
            .position(|c| matches!(c, Cell1::Interval { .. }))
            .expect("a set of dim 1 has an interval");
        let Cell1::Interval { lo, hi } = out[i].clone() else {
            unreachable!()
        };
        let c = AlgReal::from_rational(rational_between(lo.as_ref(), hi.as_ref()));
        out.splice(
            i..=i,
            [
                Cell1::Interval { lo, hi: Some(c.clone()) },
                Cell1::Point { at: c.clone() },
                Cell1::Interval { lo: Some(c), hi },
            ],
        );
        extra -= 1;
    }
    out
}

pub fn rcf_build_bijection(x: &RcfSet, y: &RcfSet) -> Result<Bijection, BijectionError> {
    let (ix, iy) = (x.invariant(), y.invariant());
    if ix != iy {
        return Err(BijectionError::InvariantMismatch(ix, iy));
    }
    let (cx, cy) = (x.cells(), y.cells());
    let (nx, ny) = (cx.len(), cy.len());
    // Cell counts differ by an even number since E agrees.
    let cx = split_cells(&cx, ny.saturating_sub(nx) / 2);
    let cy = split_cells(&cy, nx.saturating_sub(ny) / 2);
    let points = |cs: &[Cell1]| -> Vec<AlgReal> {
        cs.iter()
            .filter_map(|c| match c {
                Cell1::Point { at } => Some(at.clone()),
                _ => None,
            })
            .collect()
    };
    let intervals = |cs: &[Cell1]| -> Vec<OpenInterval> {
        cs.iter()
            .filter_map(|c| match c {
                Cell1::Interval { lo, hi } => Some(OpenInterval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                }),
                _ => None,
            })
            .collect()
    };
    let mut py = points(&cy).into_iter();
    let mut iy_ = intervals(&cy).into_iter();
    let pieces = cx
        .iter()
        .map(|c| match c {
            Cell1::Point { at } => Piece::Point {
                from: at.clone(),
                to: py.next().expect("equal point counts"),
            },
            Cell1::Interval { lo, hi } => Piece::Interval {
                from: OpenInterval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                },
                to: iy_.next().expect("equal interval counts"),
            },
        })
        .collect();
    Ok(Bijection { pieces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{qf, Q};

    fn s(t: &str) -> RcfSet {
        t.parse().unwrap()
    }

    fn a(n: i64) -> AlgReal {
        AlgReal::from_int(n)
    }

    fn r(v: Q) -> AlgReal {
        AlgReal::from_rational(v)
    }

    #[test]
    fn three_piece_map() {
        let x = s("(-2, -1) U {0} U (1, 2)");
        let y = RcfSet::open(-1, 1);
        let f = rcf_build_bijection(&x, &y).unwrap();
        assert_eq!(f.pieces.len(), 3);
        assert_eq!(f.pieces[0].to_string(), "(-2, -1) -> (-1, 0)");
        assert_eq!(f.pieces[1].to_string(), "0 -> 0");
        assert_eq!(f.pieces[2].to_string(), "(1, 2) -> (0, 1)");
        assert_eq!(f.apply(&r(qf(-3, 2))), Some(r(qf(-1, 2))));
        assert_eq!(f.apply(&r(qf(3, 2))), Some(r(qf(1, 2))));
        assert!(f.covers(&x, &y));
    }

    #[test]
    fn identity_and_points() {
        let x = s("(-2, -1) U {0}");
        let f = rcf_build_bijection(&x, &x).unwrap();
        assert_eq!(f.apply(&r(qf(-7, 4))), Some(r(qf(-7, 4))));
        let g = rcf_build_bijection(&s("{0, 1}"), &s("{5, 7}")).unwrap();
        assert_eq!(g.apply(&a(1)), Some(a(7)));
        assert_eq!(g.apply(&a(2)), None);
    }

    #[test]
    fn unbounded_pieces_invert() {
        let x = s("(-inf, inf)");
        let y = s("(0, 1)");
        let f = rcf_build_bijection(&x, &y).unwrap();
        let inv = f.inverse();
        for v in [qf(-5, 1), qf(0, 1), qf(3, 7), qf(100, 1)] {
            let img = f.apply(&r(v.clone())).unwrap();
            assert!(y.contains(&img));
            assert_eq!(inv.apply(&img), Some(r(v)));
        }
        let h = rcf_build_bijection(&s("(3, inf)"), &s("(-inf, -2)")).unwrap();
        let img = h.apply(&a(4)).unwrap();
        assert!(img < a(-2));
        assert_eq!(h.inverse().apply(&img), Some(a(4)));
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(matches!(
            rcf_build_bijection(&s("{0}"), &s("(0, 1)")),
            Err(BijectionError::InvariantMismatch(..))
        ));
    }
}
