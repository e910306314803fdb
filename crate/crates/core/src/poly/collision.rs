//! Non-injectivity certificates for polynomial self-maps.
//!
//! A collision is a value `c` together with `g = squarefree(p - c)` and two
//! distinct roots of `g`. Real roots carry an isolating interval. Non-real
//! roots are named by index: the roots of `g` are ordered with the real roots
//! first (ascending) and the non-real roots after them in lexicographic order
//! of (real part, imaginary part); only the existence of the indexed root is
//! certified, by counting.

use super::{AlgReal, Poly, PolyError, Q};
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootRef {
    Real { root: AlgReal },
    NonReal { index: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct Collision {
    #[serde(serialize_with = "ser_q")]
    pub value: Q,
    #[serde(serialize_with = "ser_poly")]
    pub defining: Poly,
    pub a: RootRef,
    pub b: RootRef,
}

fn ser_q<S: serde::Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&super::parse::format_rational(v))
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl Collision {
    /// Exact check that `a != b` are roots of `defining` and `p = value` on every such root.
    pub fn verify(&self, p: &Poly) -> bool {
        let g = &self.defining;
        let shifted = p - &Poly::constant(self.value.clone());
        if g.deg() < 2 || !g.is_squarefree() {
            return false;
        }
        // g | p - c, so p - c vanishes on every root of g.
        if !g.divides(&shifted) || !g.resultant(&shifted).is_zero() {
            return false;
        }
        let Ok(real) = g.count_real_roots() else {
            return false;
        };
        let check = |r: &RootRef| match r {
            RootRef::Real { root } => root.sign_of(g) == 0 && root.sign_of(&shifted) == 0,
            RootRef::NonReal { index } => *index >= real && *index < g.deg(),
        };
        check(&self.a) && check(&self.b) && self.a != self.b
    }
}

/// Two distinct points with the same image, or `None` when `p` is linear.
pub fn collision_witness(p: &Poly) -> Result<Option<Collision>, PolyError> {
    let d = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if d == 0 {
        return Err(PolyError::ConstantPolynomial);
    }
    if d == 1 {
        return Ok(None);
    }
    let dp = p.derivative();
    let mut candidates: Vec<Q> = vec![Q::zero()];
    for k in 1..8i64 {
        candidates.push(super::q(k));
        candidates.push(super::q(-k));
    }
    // Points close to critical points sit where p folds over.
    for c in dp.real_roots()? {
        let near = c.refined(&(Q::one() / super::q(64)));
        candidates.push(near.lo().clone());
        candidates.push(near.hi().clone());
    }
    let mut fallback: Option<Collision> = None;
    let mut extra = 8i64;
    let mut i = 0;
    // p has finitely many critical values, so the scan terminates.
    while i < candidates.len() || fallback.is_none() {
        let t = match candidates.get(i) {
            Some(t) => t.clone(),
            None => {
                extra += 1;
                super::q(extra)
            }
        };
        i += 1;
        if dp.eval(&t).is_zero() {
            continue;
        }
        let c = p.eval(&t);
        let g = (p - &Poly::constant(c.clone())).squarefree_part()?;
        if g.deg() != d {
            continue;
        }
        let roots = g.real_roots()?;
        let a = AlgReal::from_rational(t);
        if roots.len() >= 2 {
            let pos = roots.iter().position(|r| *r == a).expect("t is a root of p - p(t)");
            let other = if pos + 1 < roots.len() { pos + 1 } else { pos - 1 };
            return Ok(Some(Collision {
                value: c,
                defining: g,
                a: RootRef::Real { root: a },
                b: RootRef::Real {
                    root: roots[other].clone(),
                },
            }));
        }
        if fallback.is_none() {
            // One real root: the partner is non-real.
            fallback = Some(Collision {
                value: c,
                defining: g,
                a: RootRef::Real { root: a },
                b: RootRef::NonReal { index: roots.len() },
            });
        }
    }
    Ok(fallback)
}
