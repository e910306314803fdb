//! Definable subsets of the real algebraic numbers in one variable.
//!
//! A set is stored as its sorted breakpoints `b₁ < … < b_k` and a membership
//! bit for each of the `2k + 1` pieces `(−∞,b₁), {b₁}, (b₁,b₂), …, (b_k,∞)`.
//! A breakpoint is kept only if the bits of its point and its two flanking
//! intervals are not all equal, so equal sets have equal representations.

mod bijection;
mod decompose;
mod sign;

pub use bijection::{rcf_build_bijection, Bijection, BijectionError, OpenInterval, Piece};
pub use decompose::{rcf_decompose, rcf_skolem_demo, Decomposition, SkolemReport};
pub use sign::{rcf_from_sign_condition, RcfTheta, Rel, SignCond, SignFormula};

use crate::interp::pairing_int;
use crate::poly::{parse_rational, rational_between, AlgReal, PolyError, Q};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cell1 {
    Point { at: AlgReal },
    /// Open; `None` is an infinite end.
    Interval { lo: Option<AlgReal>, hi: Option<AlgReal> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcfSet {
    breaks: Vec<AlgReal>,
    bits: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Invariant {
    /// `-1` only for the empty set.
    pub dim: i32,
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RcfError {
    #[error("{0}")]
    Poly(#[from] PolyError),
    #[error("sign condition on the zero polynomial")]
    ZeroPolynomial,
    #[error("interval ({0}, {1}) is empty")]
    EmptyInterval(String, String),
    #[error("cannot parse '{0}'")]
    Syntax(String),
}

impl Cell1 {
    pub fn point(at: AlgReal) -> Cell1 {
        Cell1::Point { at }
    }

    pub fn interval(lo: Option<AlgReal>, hi: Option<AlgReal>) -> Result<Cell1, RcfError> {
        if let (Some(a), Some(b)) = (&lo, &hi) {
            if a >= b {
                return Err(RcfError::EmptyInterval(a.to_string(), b.to_string()));
            }
        }
        Ok(Cell1::Interval { lo, hi })
    }

    pub fn dim(&self) -> i32 {
        match self {
            Cell1::Point { .. } => 0,
            Cell1::Interval { .. } => 1,
        }
    }

    /// A point of the cell, rational when the cell is an interval.
    pub fn sample(&self) -> AlgReal {
        match self {
            Cell1::Point { at } => at.clone(),
            Cell1::Interval { lo, hi } => AlgReal::from_rational(rational_between(lo.as_ref(), hi.as_ref())),
        }
    }
}

fn bound(b: &Option<AlgReal>, neg: bool) -> String {
    match (b, neg) {
        (Some(a), _) => a.to_string(),
        (None, true) => "-inf".into(),
        (None, false) => "inf".into(),
    }
}

impl fmt::Display for Cell1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell1::Point { at } => write!(f, "{{{at}}}"),
            Cell1::Interval { lo, hi } => write!(f, "({}, {})", bound(lo, true), bound(hi, false)),
        }
    }
}

/// Sorted union of two sorted breakpoint lists.
pub(crate) fn merge_breaks(a: &[AlgReal], b: &[AlgReal]) -> Vec<AlgReal> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl RcfSet {
    /// `bits.len() == 2 * breaks.len() + 1`, breaks strictly increasing.
    pub(crate) fn from_pieces(breaks: Vec<AlgReal>, bits: Vec<bool>) -> RcfSet {
        debug_assert_eq!(bits.len(), 2 * breaks.len() + 1);
        debug_assert!(breaks.windows(2).all(|w| w[0] < w[1]));
        let mut nb = Vec::new();
        let mut nbits = vec![bits[0]];
        for (i, b) in breaks.into_iter().enumerate() {
            let (pt, next) = (bits[2 * i + 1], bits[2 * i + 2]);
            let prev = *nbits.last().expect("nonempty");
            if prev == pt && pt == next {
                continue;
            }
            nb.push(b);
            nbits.push(pt);
            nbits.push(next);
        }
        RcfSet { breaks: nb, bits: nbits }
    }

    pub fn empty() -> RcfSet {
        RcfSet {
            breaks: vec![],
            bits: vec![false],
        }
    }

    pub fn line() -> RcfSet {
        RcfSet {
            breaks: vec![],
            bits: vec![true],
        }
    }

    pub fn point(a: AlgReal) -> RcfSet {
        RcfSet {
            breaks: vec![a],
            bits: vec![false, true, false],
        }
    }

    pub fn points(ps: impl IntoIterator<Item = AlgReal>) -> RcfSet {
        ps.into_iter().fold(RcfSet::empty(), |s, p| s.union(&RcfSet::point(p)))
    }

    pub fn interval(lo: Option<AlgReal>, hi: Option<AlgReal>) -> Result<RcfSet, RcfError> {
        Ok(RcfSet::from_cells(&[Cell1::interval(lo, hi)?]))
    }

    /// Open interval with rational ends.
    pub fn open(lo: i64, hi: i64) -> RcfSet {
        RcfSet::interval(Some(AlgReal::from_int(lo)), Some(AlgReal::from_int(hi))).expect("lo < hi")
    }

    pub fn from_cells(cells: &[Cell1]) -> RcfSet {
        cells.iter().fold(RcfSet::empty(), |acc, c| {
            let s = match c {
                Cell1::Point { at } => RcfSet::point(at.clone()),
                Cell1::Interval { lo, hi } => {
                    let mut breaks = Vec::new();
                    let mut bits = vec![lo.is_none()];
                    if let Some(a) = lo {
                        breaks.push(a.clone());
                        bits.extend([false, true]);
                    }
                    if let Some(b) = hi {
                        breaks.push(b.clone());
                        bits.extend([false, false]);
                    }
                    RcfSet::from_pieces(breaks, bits)
                }
            };
            acc.union(&s)
        })
    }

    pub fn breakpoints(&self) -> &[AlgReal] {
        &self.breaks
    }

    /// Membership bits of the pieces over `all`, a sorted superset of the breakpoints.
    pub(crate) fn bits_over(&self, all: &[AlgReal]) -> Vec<bool> {
        let mut out = Vec::with_capacity(2 * all.len() + 1);
        let mut j = 0;
        for b in all {
            out.push(self.bits[2 * j]);
            if j < self.breaks.len() && self.breaks[j] == *b {
                out.push(self.bits[2 * j + 1]);
                j += 1;
            } else {
                out.push(self.bits[2 * j]);
            }
        }
        out.push(self.bits[2 * j]);
        out
    }

    fn combine(&self, other: &RcfSet, op: impl Fn(bool, bool) -> bool) -> RcfSet {
        let all = merge_breaks(&self.breaks, &other.breaks);
        let (a, b) = (self.bits_over(&all), other.bits_over(&all));
        RcfSet::from_pieces(all, a.iter().zip(&b).map(|(&x, &y)| op(x, y)).collect())
    }

    pub fn union(&self, other: &RcfSet) -> RcfSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &RcfSet) -> RcfSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &RcfSet) -> RcfSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> RcfSet {
        RcfSet {
            breaks: self.breaks.clone(),
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bits == [false]
    }

    pub fn contains(&self, x: &AlgReal) -> bool {
        let j = self.breaks.partition_point(|b| b < x);
        if j < self.breaks.len() && self.breaks[j] == *x {
            self.bits[2 * j + 1]
        } else {
            self.bits[2 * j]
        }
    }

    pub fn contains_q(&self, x: &Q) -> bool {
        self.contains(&AlgReal::from_rational(x.clone()))
    }

    /// The pieces of the canonical decomposition lying in the set, in order.
    pub fn cells(&self) -> Vec<Cell1> {
        piece_cells(&self.breaks)
            .into_iter()
            .zip(&self.bits)
            .filter(|(_, &b)| b)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn invariant(&self) -> Invariant {
        let (mut points, mut intervals) = (0i64, 0i64);
        for (i, &b) in self.bits.iter().enumerate() {
            if b {
                if i % 2 == 1 {
                    points += 1;
                } else {
                    intervals += 1;
                }
            }
        }
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

    /// `⟨dim, E⟩` under the fixed integer pairing.
    pub fn number(&self) -> i64 {
        let inv = self.invariant();
        pairing_int(i64::from(inv.dim), inv.euler)
    }

    pub fn hume_equiv(&self, other: &RcfSet) -> bool {
        self.invariant() == other.invariant()
    }
}

/// Every piece cut out by the breakpoints, in order.
pub(crate) fn piece_cells(breaks: &[AlgReal]) -> Vec<Cell1> {
    let mut out = Vec::with_capacity(2 * breaks.len() + 1);
    let mut lo: Option<AlgReal> = None;
    for b in breaks {
        out.push(Cell1::Interval {
            lo: lo.clone(),
            hi: Some(b.clone()),
        });
        out.push(Cell1::Point { at: b.clone() });
        lo = Some(b.clone());
    }
    out.push(Cell1::Interval { lo, hi: None });
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcfOp {
    Union,
    Intersect,
    Complement,
    Difference,
}

/// `y` is ignored for `Complement` and read as empty when absent otherwise.
pub fn rcf_algebra(op: RcfOp, x: &RcfSet, y: Option<&RcfSet>) -> RcfSet {
    let empty = RcfSet::empty();
    let y = y.unwrap_or(&empty);
    match op {
        RcfOp::Union => x.union(y),
        RcfOp::Intersect => x.intersect(y),
        RcfOp::Difference => x.difference(y),
        RcfOp::Complement => x.complement(),
    }
}

impl fmt::Display for RcfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.cells();
        if cells.is_empty() {
            return f.write_str("empty");
        }
        let parts: Vec<String> = cells.iter().map(Cell1::to_string).collect();
        f.write_str(&parts.join(" U "))
    }
}

fn parse_end(s: &str) -> Result<Option<AlgReal>, RcfError> {
    match s.trim() {
        "-inf" | "inf" | "+inf" => Ok(None),
        t => parse_rational(t)
            .map(|r| Some(AlgReal::from_rational(r)))
            .ok_or_else(|| RcfError::Syntax(t.to_string())),
    }
}

fn parse_cell_set(text: &str) -> Result<RcfSet, RcfError> {
    let mut acc = RcfSet::empty();
    for part in text.split(['U', '∪']) {
        let t = part.trim();
        let err = || RcfError::Syntax(t.to_string());
        if t == "empty" {
            continue;
        }
        if t == "R" {
            acc = acc.union(&RcfSet::line());
            continue;
        }
        let (open, close) = (t.chars().next().ok_or_else(err)?, t.chars().last().ok_or_else(err)?);
        let inner = &t[open.len_utf8()..t.len() - close.len_utf8()];
        if open == '{' && close == '}' {
            for p in inner.split(',').filter(|p| !p.trim().is_empty()) {
                let a = parse_end(p)?.ok_or_else(err)?;
                acc = acc.union(&RcfSet::point(a));
            }
            continue;
        }
        let (l, r) = inner.split_once(',').ok_or_else(err)?;
        let (lo, hi) = (parse_end(l)?, parse_end(r)?);
        if (open == '[' && lo.is_none()) || (close == ']' && hi.is_none()) {
            return Err(err());
        }
        let mut s = RcfSet::interval(lo.clone(), hi.clone())?;
        match (open, close) {
            ('(', ')') => {}
            ('[', ')') | ('(', ']') | ('[', ']') => {
                if open == '[' {
                    s = s.union(&RcfSet::point(lo.expect("checked")));
                }
                if close == ']' {
                    s = s.union(&RcfSet::point(hi.expect("checked")));
                }
            }
            _ => return Err(err()),
        }
        acc = acc.union(&s);
    }
    Ok(acc)
}

impl FromStr for RcfSet {
    type Err = RcfError;

    /// Cell notation `(-2, -1) U {0} U [1, inf)` with rational ends, or a
    /// sign-condition formula such as `x^2-2 < 0 & x > -3 | x = 5`.
    fn from_str(s: &str) -> Result<RcfSet, RcfError> {
        let t = s.trim();
        if t == "empty" || t == "R" || t.starts_with(['(', '[', '{']) && !t.contains(['<', '>', '=']) {
            parse_cell_set(t)
        } else {
            Ok(t.parse::<SignFormula>()?.set()?)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RcfSetJson {
    cells: Vec<Cell1>,
}

impl Serialize for RcfSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RcfSetJson { cells: self.cells() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RcfSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<RcfSet, D::Error> {
        let j = RcfSetJson::deserialize(d)?;
        for c in &j.cells {
            if let Cell1::Interval { lo: Some(a), hi: Some(b) } = c {
                if a >= b {
                    return Err(serde::de::Error::custom("empty interval"));
                }
            }
        }
        Ok(RcfSet::from_cells(&j.cells))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> RcfSet {
        t.parse().unwrap()
    }

    fn worked_x() -> RcfSet {
        s("(-2, -1) U {0} U (1, 2)")
    }

    #[test]
    fn euler_example() {
        assert_eq!(worked_x().invariant(), Invariant { dim: 1, euler: -1 });
        assert_eq!(RcfSet::open(-1, 1).invariant(), Invariant { dim: 1, euler: -1 });
        assert!(worked_x().hume_equiv(&RcfSet::open(-1, 1)));
        assert_eq!(worked_x().number(), 7);
        assert_eq!(s("{0, 1}").invariant(), Invariant { dim: 0, euler: 2 });
    }

    #[test]
    fn algebra_examples() {
        assert_eq!(RcfSet::empty().complement(), RcfSet::line());
        assert_eq!(RcfSet::open(-1, 1).intersect(&RcfSet::open(0, 2)), RcfSet::open(0, 1));
        let x = RcfSet::open(-2, -1)
            .union(&RcfSet::point(AlgReal::from_int(0)))
            .union(&RcfSet::open(1, 2));
        assert_eq!(x, worked_x());
    }

    #[test]
    fn canonical_merging() {
        let glued = s("(-1, 0) U {0} U (0, 1)");
        assert_eq!(glued, RcfSet::open(-1, 1));
        assert_eq!(glued.breakpoints().len(), 2);
        assert_eq!(s("[0, inf)").cells().len(), 2);
        assert_eq!(s("(-inf, 0] U (0, inf)"), RcfSet::line());
    }

    #[test]
    fn hume_examples() {
        assert!(!s("{0}").hume_equiv(&RcfSet::open(0, 1)));
        assert!(!RcfSet::open(0, 1).hume_equiv(&s("(0, 1) U (2, 3)")));
        assert_eq!(s("{0, 1}").number(), s("{5, 7}").number());
        assert_eq!(RcfSet::empty().number(), pairing_int(-1, 0));
    }

    #[test]
    fn json_round_trip() {
        let x = worked_x();
        let j = serde_json::to_string(&x).unwrap();
        assert!(j.contains(r#""kind":"interval""#));
        let back: RcfSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn text_round_trip() {
        for t in ["(-2, -1) U {0} U (1, 2)", "empty", "(-inf, inf)", "{1/2} U (3, inf)"] {
            let x = s(t);
            assert_eq!(s(&x.to_string()), x, "{t}");
        }
    }
}
