//! Definable subsets of an algebraically closed field of characteristic 0 in
//! one variable with rational parameters.
//!
//! Such a set is finite or cofinite, so it is fixed by a monic squarefree
//! polynomial `base` and a mode: the roots of `base`, or their complement.

mod successor;
mod theta;

pub use successor::{
    acf_sa_report, acf_successor_p, successors_of, successor_witness, witness_pool, FCheck, SaReport,
    SuccessorWitness,
};
pub use theta::{acf_theta_prime, eval_field, FieldEvalError, ThetaError, ThetaFamily, ThetaPrime, ThetaSolutions};
pub(crate) use theta::field_poly;

use crate::poly::{Poly, PolyError, Q};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Finite,
    Cofinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcfSet {
    base: Poly,
    mode: Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum CardClass {
    FiniteCard(usize),
    /// Size of the complement.
    CofiniteCard(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersect,
    Complement,
    Difference,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AcfError {
    #[error("{0}")]
    Poly(#[from] PolyError),
    #[error("cannot parse set '{0}': expected roots(p) or co-roots(p)")]
    Syntax(String),
    #[error("operation needs a second operand")]
    MissingOperand,
}

impl AcfSet {
    /// Roots of `p`; the zero polynomial vanishes everywhere.
    pub fn roots(p: &Poly) -> AcfSet {
        if p.is_zero() {
            return AcfSet::full();
        }
        AcfSet {
            base: p.squarefree_part().expect("nonzero"),
            mode: Mode::Finite,
        }
    }

    pub fn co_roots(p: &Poly) -> AcfSet {
        AcfSet::roots(p).complement()
    }

    pub fn empty() -> AcfSet {
        AcfSet {
            base: Poly::one(),
            mode: Mode::Finite,
        }
    }

    pub fn full() -> AcfSet {
        AcfSet {
            base: Poly::one(),
            mode: Mode::Cofinite,
        }
    }

    /// A finite set of rationals.
    pub fn of_points(points: &[Q]) -> AcfSet {
        AcfSet::roots(&Poly::from_roots(points))
    }

    pub fn base(&self) -> &Poly {
        &self.base
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn contains(&self, a: &Q) -> bool {
        let root = self.base.eval(a) == Q::from_integer(0.into());
        root == (self.mode == Mode::Finite)
    }

    pub fn complement(&self) -> AcfSet {
        AcfSet {
            base: self.base.clone(),
            mode: match self.mode {
                Mode::Finite => Mode::Cofinite,
                Mode::Cofinite => Mode::Finite,
            },
        }
    }

    pub fn union(&self, other: &AcfSet) -> AcfSet {
        use Mode::*;
        let (a, b) = (&self.base, &other.base);
        match (self.mode, other.mode) {
            (Finite, Finite) => AcfSet { base: a.lcm(b), mode: Finite },
            (Cofinite, Cofinite) => AcfSet { base: a.gcd(b), mode: Cofinite },
            (Finite, Cofinite) => AcfSet { base: b.div_rem(&a.gcd(b)).0.monic(), mode: Cofinite },
            (Cofinite, Finite) => other.union(self),
        }
    }

    pub fn intersect(&self, other: &AcfSet) -> AcfSet {
        self.complement().union(&other.complement()).complement()
    }

    pub fn difference(&self, other: &AcfSet) -> AcfSet {
        self.intersect(&other.complement())
    }

    pub fn card(&self) -> CardClass {
        match self.mode {
            Mode::Finite => CardClass::FiniteCard(self.base.deg()),
            Mode::Cofinite => CardClass::CofiniteCard(self.base.deg()),
        }
    }

    /// `|X|` for finite `X`, `-(|k − X| + 1)` for cofinite `X`.
    pub fn number(&self) -> i64 {
        card_number(self.card())
    }

    pub fn hume_equiv(&self, other: &AcfSet) -> bool {
        self.card() == other.card()
    }

    pub fn is_empty(&self) -> bool {
        self.mode == Mode::Finite && self.base.deg() == 0
    }
}

fn compact(p: &Poly) -> String {
    p.to_string().replace(' ', "")
}

pub fn card_number(c: CardClass) -> i64 {
    match c {
        CardClass::FiniteCard(n) => n as i64,
        CardClass::CofiniteCard(n) => -(n as i64 + 1),
    }
}

pub fn acf_algebra(op: SetOp, x: &AcfSet, y: Option<&AcfSet>) -> Result<AcfSet, AcfError> {
    let y = || y.ok_or(AcfError::MissingOperand);
    Ok(match op {
        SetOp::Complement => x.complement(),
        SetOp::Union => x.union(y()?),
        SetOp::Intersect => x.intersect(y()?),
        SetOp::Difference => x.difference(y()?),
    })
}

impl fmt::Display for AcfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            Mode::Finite => write!(f, "roots({})", compact(&self.base)),
            Mode::Cofinite => write!(f, "co-roots({})", compact(&self.base)),
        }
    }
}

impl FromStr for AcfSet {
    type Err = AcfError;

    /// `roots(p)`, `co-roots(p)`, `empty` or `k`.
    fn from_str(s: &str) -> Result<AcfSet, AcfError> {
        let t = s.trim();
        match t {
            "empty" => return Ok(AcfSet::empty()),
            "k" => return Ok(AcfSet::full()),
            _ => {}
        }
        let inner = |prefix: &str| t.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        if let Some(p) = inner("co-roots(") {
            return Ok(AcfSet::co_roots(&Poly::parse(p)?));
        }
        if let Some(p) = inner("roots(") {
            return Ok(AcfSet::roots(&Poly::parse(p)?));
        }
        Err(AcfError::Syntax(s.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct AcfSetJson {
    base: String,
    mode: Mode,
}

impl Serialize for AcfSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AcfSetJson {
            base: compact(&self.base),
            mode: self.mode,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AcfSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<AcfSet, D::Error> {
        let j = AcfSetJson::deserialize(d)?;
        let p = Poly::parse(&j.base).map_err(serde::de::Error::custom)?;
        let set = AcfSet::roots(&p);
        Ok(if j.mode == Mode::Cofinite { set.complement() } else { set })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> AcfSet {
        t.parse().unwrap()
    }

    #[test]
    fn algebra_examples() {
        assert_eq!(s("roots(x^2+1)").complement(), s("co-roots(x^2+1)"));
        assert_eq!(s("roots(x-1)").union(&s("roots(x-1)")), s("roots(x-1)"));
        assert_eq!(
            s("roots((x-1)*(x-2))").intersect(&s("roots((x-2)*(x-3))")),
            s("roots(x-2)")
        );
        assert_eq!(s("roots(x)").union(&s("co-roots(x*(x-1))")), s("co-roots(x-1)"));
        assert_eq!(s("co-roots(x)").difference(&s("roots(x-1)")), s("co-roots(x^2-x)"));
    }

    #[test]
    fn numbers_match_worked_values() {
        assert_eq!(s("co-roots(x^2+1)").number(), -3);
        assert_eq!(AcfSet::full().number(), -1);
        assert_eq!(AcfSet::empty().number(), 0);
    }

    #[test]
    fn cards_and_hume() {
        assert_eq!(s("roots(x^2+1)").card(), CardClass::FiniteCard(2));
        assert_eq!(s("co-roots(x^2+1)").card(), CardClass::CofiniteCard(2));
        assert_eq!(AcfSet::full().card(), CardClass::CofiniteCard(0));
        assert!(s("roots(x^2+1)").hume_equiv(&s("roots(x^2-2)")));
        assert!(!AcfSet::full().hume_equiv(&s("co-roots(x)")));
    }

    #[test]
    fn squarefree_normalisation() {
        assert_eq!(s("roots((x-1)^2*(x+2))"), s("roots(x^2+x-2)"));
        assert_eq!(AcfSet::roots(&Poly::zero()), AcfSet::full());
    }

    #[test]
    fn json_form() {
        let j = serde_json::to_string(&s("roots(x^2+1)")).unwrap();
        assert_eq!(j, r#"{"base":"x^2+1","mode":"finite"}"#);
        let back: AcfSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s("roots(x^2+1)"));
    }
}
