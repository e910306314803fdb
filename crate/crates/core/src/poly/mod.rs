//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first and are always trimmed, so a
//! nonzero polynomial has a nonzero last coefficient.

mod algreal;
mod collision;
mod parse;

pub use algreal::{parse_rational, rational_between, AlgReal};
pub use parse::format_rational;
pub use collision::{collision_witness, Collision, RootRef};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Exact rational scalar.
pub type Q = BigRational;

/// Bisection budget used when the caller does not pass one.
pub const DEFAULT_ITERATION_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("iteration cap of {0} bisections exceeded")]
    IterationCap(usize),
    #[error("polynomial syntax error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("algebraic number is zero")]
    DivisionByZero,
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn x() -> Poly {
        Poly::new(vec![Q::zero(), Q::one()])
    }

    pub fn constant(c: Q) -> Poly {
        Poly::new(vec![c])
    }

    /// Builds from coefficients, lowest degree first.
    pub fn new(mut coeffs: Vec<Q>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| q(c)).collect())
    }

    /// `x - r`.
    pub fn linear_root(r: &Q) -> Poly {
        Poly::new(vec![-r.clone(), Q::one()])
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots(roots: &[Q]) -> Poly {
        roots
            .iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::linear_root(r))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.lead();
        self.scale(&(Q::one() / l))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Q) -> i32 {
        sign(&self.eval(x))
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `x^deg * p(1/x)`.
    pub fn reverse(&self) -> Poly {
        let mut cs = self.coeffs.clone();
        cs.reverse();
        Poly::new(cs)
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &Q) -> Poly {
        let mut acc = Poly::zero();
        let lin = Poly::new(vec![a.clone(), Q::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let dl = d.lead();
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = &r[i + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            quo[i] = c;
        }
        r.truncate(dd);
        (Poly::new(quo), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &Poly) -> Poly {
        let g = self.gcd(other);
        (self * other).div_rem(&g).0.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Poly::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g).0.monic())
    }

    /// Number of distinct roots in the algebraic closure.
    pub fn distinct_root_count(&self) -> Result<usize, PolyError> {
        Ok(self.squarefree_part()?.deg())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Resultant of two polynomials, computed by the Euclidean recurrence.
    pub fn resultant(&self, other: &Poly) -> Q {
        if self.is_zero() || other.is_zero() {
            return Q::zero();
        }
        let mut f = self.clone();
        let mut g = other.clone();
        let mut acc = Q::one();
        loop {
            let m = f.deg();
            let n = g.deg();
            if n == 0 {
                return acc * pow_q(&g.lead(), m);
            }
            if m == 0 {
                return acc * pow_q(&f.lead(), n);
            }
            let r = f.rem(&g);
            if r.is_zero() {
                return Q::zero();
            }
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            acc *= pow_q(&g.lead(), m - r.deg());
            f = g;
            g = r;
        }
    }

    /// Sturm sequence of the polynomial itself.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone()];
        if self.is_constant() {
            return chain;
        }
        chain.push(self.derivative());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        chain
    }

    /// Cauchy bound: every complex root has modulus strictly below it.
    pub fn root_bound(&self) -> Q {
        let l = self.lead().abs();
        let m = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| c.abs() / &l)
            .max()
            .unwrap_or_else(Q::zero);
        Q::one() + m
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_roots_in(&self, a: &Q, b: &Q) -> usize {
        let chain = self.squarefree_part().map(|s| s.sturm_chain());
        match chain {
            Ok(ch) => sturm_count(&ch, a, b),
            Err(_) => 0,
        }
    }

    /// Distinct real roots on the whole line.
    pub fn count_real_roots(&self) -> Result<usize, PolyError> {
        let s = self.squarefree_part()?;
        let ch = s.sturm_chain();
        let at = |neg: bool| {
            let signs: Vec<i32> = ch
                .iter()
                .map(|p| {
                    let s = sign(&p.lead());
                    if neg && p.deg() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                })
                .collect();
            variations(&signs)
        };
        Ok(at(true) - at(false))
    }

    /// All real roots, ascending.
    pub fn real_roots(&self) -> Result<Vec<AlgReal>, PolyError> {
        self.real_roots_with_cap(DEFAULT_ITERATION_CAP)
    }

    pub fn real_roots_with_cap(&self, cap: usize) -> Result<Vec<AlgReal>, PolyError> {
        let s = self.squarefree_part()?;
        algreal::isolate(&s, cap)
    }

    /// Exact rational roots, ascending, found by the rational root test.
    pub fn rational_roots(&self) -> Vec<Q> {
        if self.is_constant() {
            return Vec::new();
        }
        let ints = self.integer_coeffs();
        let mut out = Vec::new();
        if ints[0].is_zero() {
            out.push(Q::zero());
        }
        let lowest = ints.iter().find(|c| !c.is_zero()).cloned().unwrap();
        let high = ints.last().unwrap().clone();
        let (Some(ps), Some(qs)) = (small_divisors(&lowest), small_divisors(&high)) else {
            return out;
        };
        for p in &ps {
            for d in &qs {
                for r in [Q::new(p.clone(), d.clone()), Q::new(-p.clone(), d.clone())] {
                    if !out.contains(&r) && self.eval(&r).is_zero() {
                        out.push(r);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Primitive-free integer scaling: coefficients times the lcm of denominators.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        self.coeffs
            .iter()
            .map(|c| (c * Q::from_integer(l.clone())).to_integer())
            .collect()
    }

    pub fn parse(text: &str) -> Result<Poly, PolyError> {
        parse::parse_poly(text, "x")
    }

    pub fn parse_in(text: &str, var: &str) -> Result<Poly, PolyError> {
        parse::parse_poly(text, var)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        parse::format_poly(self, var)
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let v: u64 = u64::try_from(&n).ok().filter(|&v| v <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= v {
        if v % i == 0 {
            out.push(BigInt::from(i));
            if i * i != v {
                out.push(BigInt::from(v / i));
            }
        }
        i += 1;
    }
    Some(out)
}

pub(crate) fn pow_q(b: &Q, e: usize) -> Q {
    let mut acc = Q::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

pub fn sign(c: &Q) -> i32 {
    match c.cmp(&Q::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn variations(signs: &[i32]) -> usize {
    let mut last = 0;
    let mut n = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Roots of the (squarefree) chain head in `(a, b]`.
pub(crate) fn sturm_count(chain: &[Poly], a: &Q, b: &Q) -> usize {
    let va = variations(&chain.iter().map(|p| p.sign_at(a)).collect::<Vec<_>>());
    let vb = variations(&chain.iter().map(|p| p.sign_at(b)).collect::<Vec<_>>());
    va.saturating_sub(vb)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_poly(self, "x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Serialized as its text form.
impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Poly, D::Error> {
        let t = String::deserialize(d)?;
        Poly::parse(&t).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Poly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Poly, PolyError> {
        Poly::parse(s)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

/// Interpolates the unique polynomial of degree `< xs.len()` through the points.
pub fn interpolate(xs: &[Q], ys: &[Q]) -> Poly {
    let n = xs.len();
    let mut dd: Vec<Q> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &Poly::linear_root(&xs[i])) + &Poly::constant(dd[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p("(x-1)^2*(x+2)").squarefree_part().unwrap(), p("x^2 + x - 2"));
        assert_eq!(p("x^2+1").squarefree_part().unwrap(), p("x^2+1"));
        assert_eq!(p("x^3").squarefree_part().unwrap(), p("x"));
        assert_eq!(Poly::zero().squarefree_part(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn distinct_roots() {
        assert_eq!(p("x^2+1").distinct_root_count().unwrap(), 2);
        assert_eq!(p("(x-1)^2*(x+2)").distinct_root_count().unwrap(), 2);
        assert_eq!(p("5").distinct_root_count().unwrap(), 0);
    }

    #[test]
    fn resultant_matches_root_products() {
        // res((x-1)(x-2), x-3) = (1-3)(2-3)
        let a = Poly::from_roots(&[q(1), q(2)]);
        let b = Poly::from_roots(&[q(3)]);
        assert_eq!(a.resultant(&b), q(2));
        assert_eq!(a.resultant(&Poly::from_roots(&[q(2)])), q(0));
        assert_eq!(p("x^2+1").resultant(&p("x^2-2")), q(9));
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(p("x^2-2").count_real_roots().unwrap(), 2);
        assert_eq!(p("x^2+1").count_real_roots().unwrap(), 0);
        assert_eq!(p("x^3-x").count_roots_in(&q(-1), &q(1)), 2);
    }

    #[test]
    fn interpolation_recovers() {
        let f = p("3*x^3 - x + 1/2");
        let xs: Vec<Q> = (0..4).map(q).collect();
        let ys: Vec<Q> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), f);
    }

    #[test]
    fn rational_root_test() {
        assert_eq!(p("2*x^2 - 3*x + 1").rational_roots(), vec![qf(1, 2), q(1)]);
        assert!(p("x^2-2").rational_roots().is_empty());
    }

    #[test]
    fn shift_and_reflect() {
        assert_eq!(p("x^2").shift(&q(1)), p("x^2 + 2*x + 1"));
        assert_eq!(p("x^3 + x^2").reflect(), p("-x^3 + x^2"));
    }
}
