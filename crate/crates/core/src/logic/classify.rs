//! Position of a formula in the analytical hierarchy.
//!
//! Every node gets a profile `(s, p, lean)`: `s` is the least `n` for which the
//! node is provably Σ¹ₙ by the closure rules and `p` the least for Π¹ₙ. The two
//! never differ by more than one. When they tie the node is Δ at that level,
//! and `lean` picks the reported side.
//!
//! An object quantifier counts as a relation quantifier of the same polarity
//! when it sits below some relation quantifier and above another one; anywhere
//! else it is transparent.

use super::ast::Formula;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "level", content = "n")]
pub enum Level {
    Arithmetical,
    Sigma(u32),
    Pi(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lean {
    Sigma,
    Pi,
}

impl Lean {
    fn flip(self) -> Lean {
        match self {
            Lean::Sigma => Lean::Pi,
            Lean::Pi => Lean::Sigma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Profile {
    pub sigma: u32,
    pub pi: u32,
    pub lean: Lean,
    pub has_rel: bool,
}

impl Profile {
    const ATOM: Profile = Profile {
        sigma: 0,
        pi: 0,
        lean: Lean::Sigma,
        has_rel: false,
    };

    fn negated(self) -> Profile {
        Profile {
            sigma: self.pi,
            pi: self.sigma,
            lean: self.lean.flip(),
            has_rel: self.has_rel,
        }
    }

    fn exists(self) -> Profile {
        let sigma = self.sigma.max(1);
        Profile {
            sigma,
            pi: sigma + 1,
            lean: Lean::Sigma,
            has_rel: true,
        }
    }

    fn forall(self) -> Profile {
        self.negated().exists().negated()
    }

    pub fn level(self) -> Level {
        if !self.has_rel {
            return Level::Arithmetical;
        }
        match self.sigma.cmp(&self.pi) {
            Ordering::Less => Level::Sigma(self.sigma),
            Ordering::Greater => Level::Pi(self.pi),
            Ordering::Equal => match self.lean {
                Lean::Sigma => Level::Sigma(self.sigma),
                Lean::Pi => Level::Pi(self.pi),
            },
        }
    }
}

fn join(a: Profile, b: Profile) -> Profile {
    Profile {
        sigma: a.sigma.max(b.sigma),
        pi: a.pi.max(b.pi),
        lean: if a.has_rel { a.lean } else { b.lean },
        has_rel: a.has_rel || b.has_rel,
    }
}

pub fn classify(f: &Formula) -> Level {
    profile(f).level()
}

pub fn profile(f: &Formula) -> Profile {
    go(f, false, true)
}

/// Classification with every object quantifier transparent, i.e. treating
/// number quantifiers as absorbed into adjacent relation blocks. Never above
/// [`classify`].
pub fn classify_absorbing(f: &Formula) -> Level {
    go(f, false, false).level()
}

fn go(f: &Formula, under_rel: bool, promote: bool) -> Profile {
    use Formula::*;
    match f {
        True | False | Mem(..) | Eq(..) | Le(..) => Profile::ATOM,
        Not(a) => go(a, under_rel, promote).negated(),
        And(a, b) | Or(a, b) => join(go(a, under_rel, promote), go(b, under_rel, promote)),
        Implies(a, b) => join(go(a, under_rel, promote).negated(), go(b, under_rel, promote)),
        Iff(a, b) => {
            let (pa, pb) = (go(a, under_rel, promote), go(b, under_rel, promote));
            let fwd = join(pa.negated(), pb);
            let top = fwd.sigma.max(fwd.pi);
            Profile {
                sigma: top,
                pi: top,
                ..fwd
            }
        }
        ForallObj(_, b) | ExistsObj(_, b) => {
            let inner = go(b, under_rel, promote);
            if promote && under_rel && b.has_rel_quantifier() {
                if matches!(f, ForallObj(..)) {
                    inner.forall()
                } else {
                    inner.exists()
                }
            } else {
                inner
            }
        }
        ForallRel(_, _, b) => go(b, true, promote).forall(),
        ExistsRel(_, _, b) => go(b, true, promote).exists(),
    }
}

impl Level {
    pub fn dual(self) -> Level {
        match self {
            Level::Arithmetical => Level::Arithmetical,
            Level::Sigma(n) => Level::Pi(n),
            Level::Pi(n) => Level::Sigma(n),
        }
    }

    pub fn n(self) -> u32 {
        match self {
            Level::Arithmetical => 0,
            Level::Sigma(n) | Level::Pi(n) => n,
        }
    }

    /// Inclusion of the classes: Arithmetical ⊆ Σ¹ₙ ∩ Π¹ₙ and Σ¹ₙ ∪ Π¹ₙ ⊆ Σ¹ₙ₊₁ ∩ Π¹ₙ₊₁.
    pub fn fits_within(self, bound: Level) -> bool {
        match (self, bound) {
            (Level::Arithmetical, _) => true,
            (_, Level::Arithmetical) => false,
            (Level::Sigma(a), Level::Sigma(b)) | (Level::Pi(a), Level::Pi(b)) => a <= b,
            (Level::Sigma(a), Level::Pi(b)) | (Level::Pi(a), Level::Sigma(b)) => a < b,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Arithmetical => write!(f, "Arithmetical"),
            Level::Sigma(n) => write!(f, "Sigma({n})"),
            Level::Pi(n) => write!(f, "Pi({n})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse::parse_formula;

    fn c(s: &str) -> Level {
        classify(&parse_formula(s).unwrap())
    }

    #[test]
    fn golden_examples() {
        assert_eq!(c("exists X. forall x. R(x, #X)"), Level::Sigma(1));
        assert_eq!(
            c("forall R. forall X. exists y. (forall x. R(x,y)) -> y = ext(X)"),
            Level::Pi(1)
        );
        assert_eq!(c("exists X. forall R. (exists x. R(x,x)) -> R(#X, #X)"), Level::Sigma(2));
        assert_eq!(
            c("forall R. exists X. exists S. forall y. (forall x. (x in X <-> not S(x,y))) -> R(ext(X), y)"),
            Level::Pi(2)
        );
        assert_eq!(c("forall X. exists y. forall Z. (R(#X,#Z) -> R(y,#Z))"), Level::Pi(3));
    }

    #[test]
    fn arithmetical_iff_no_relation_binder() {
        assert_eq!(c("forall x. exists y. x = #Y"), Level::Arithmetical);
        assert_eq!(c("exists X. true"), Level::Sigma(1));
    }

    #[test]
    fn hume_sentence_is_pi_two() {
        assert_eq!(
            c("forall X. forall Y. (#X = #Y <-> exists2 f. bijection(f, X, Y))"),
            Level::Pi(2)
        );
    }

    #[test]
    fn outer_object_quantifier_is_transparent() {
        assert_eq!(c("forall x. exists X. x in X"), Level::Sigma(1));
        assert_eq!(c("exists X. forall R. exists y. R(y) and y in X"), Level::Sigma(2));
    }

    #[test]
    fn level_serializes_with_tag() {
        let j = serde_json::to_string(&Level::Sigma(1)).unwrap();
        assert_eq!(j, r#"{"level":"Sigma","n":1}"#);
        assert_eq!(
            serde_json::to_string(&Level::Arithmetical).unwrap(),
            r#"{"level":"Arithmetical"}"#
        );
    }

    #[test]
    fn containment() {
        assert!(Level::Sigma(1).fits_within(Level::Pi(2)));
        assert!(!Level::Sigma(2).fits_within(Level::Pi(2)));
        assert!(Level::Arithmetical.fits_within(Level::Sigma(1)));
        assert!(!Level::Pi(1).fits_within(Level::Arithmetical));
    }
}
