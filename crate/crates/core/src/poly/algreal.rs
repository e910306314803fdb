//! Real algebraic numbers as (squarefree defining polynomial, isolating interval).
//!
//! Invariant: the defining polynomial is monic and squarefree, has exactly one
//! root in the open interval `(lo, hi)`, and vanishes at neither endpoint.
//! Rational numbers are always stored with a degree-one polynomial.

use super::{interpolate, q, sturm_count, Poly, PolyError, Q};
use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone)]
pub struct AlgReal {
    poly: Poly,
    lo: Q,
    hi: Q,
}

pub(super) fn isolate(s: &Poly, cap: usize) -> Result<Vec<AlgReal>, PolyError> {
    let mut out: Vec<AlgReal> = Vec::new();
    let mut rest = s.clone();
    for r in s.rational_roots() {
        out.push(AlgReal::from_rational(r.clone()));
        rest = rest.div_rem(&Poly::linear_root(&r)).0;
    }
    if rest.deg() >= 1 {
        let rest = rest.monic();
        let chain = rest.sturm_chain();
        let b = rest.root_bound();
        let mut stack = vec![(-b.clone(), b)];
        let mut steps = 0usize;
        while let Some((lo, hi)) = stack.pop() {
            let n = sturm_count(&chain, &lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(AlgReal::from_parts(rest.clone(), lo, hi));
                continue;
            }
            steps += 1;
            if steps > cap {
                return Err(PolyError::IterationCap(cap));
            }
            let mid = split_point(&rest, &lo, &hi);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort();
    Ok(out)
}

/// A point strictly inside `(lo, hi)` where `p` does not vanish.
fn split_point(p: &Poly, lo: &Q, hi: &Q) -> Q {
    let w = hi - lo;
    let mut k = 2i64;
    loop {
        let m = lo + &w / q(k);
        if !p.eval(&m).is_zero() {
            return m;
        }
        k += 1;
    }
}

impl AlgReal {
    pub fn from_rational(r: Q) -> AlgReal {
        AlgReal {
            poly: Poly::linear_root(&r),
            lo: &r - Q::one(),
            hi: &r + Q::one(),
        }
    }

    pub fn from_int(n: i64) -> AlgReal {
        AlgReal::from_rational(q(n))
    }

    /// Trusts the isolation invariant; rational roots are collapsed to degree one.
    pub(crate) fn from_parts(poly: Poly, lo: Q, hi: Q) -> AlgReal {
        let a = AlgReal { poly, lo, hi };
        a.normalized()
    }

    /// Validating constructor: `poly` must have exactly one root in `(lo, hi)`.
    pub fn new(poly: &Poly, lo: Q, hi: Q) -> Result<AlgReal, String> {
        let s = poly.squarefree_part().map_err(|e| e.to_string())?;
        if lo >= hi {
            return Err("empty isolating interval".into());
        }
        if s.eval(&lo).is_zero() || s.eval(&hi).is_zero() {
            return Err("interval endpoint is a root".into());
        }
        if s.count_roots_in(&lo, &hi) != 1 {
            return Err("interval does not isolate exactly one root".into());
        }
        Ok(AlgReal::from_parts(s, lo, hi))
    }

    /// Replaces the defining polynomial by its irreducible factor with the
    /// root in `(lo, hi)`, so arithmetic does not compound degrees.
    fn normalized(self) -> AlgReal {
        if self.poly.deg() <= 1 {
            return self;
        }
        let factors = Polynomial::<BigInt>::from(self.poly.integer_coeffs()).factor();
        for f in factors.polynomial_factors {
            let p = Poly::new(f.polynomial.into_coefficients().into_iter().map(Q::from_integer).collect());
            if p.count_roots_in(&self.lo, &self.hi) == 1 {
                if let Some(r) = (p.deg() == 1).then(|| -p.coeff(0) / p.coeff(1)) {
                    return AlgReal::from_rational(r);
                }
                return AlgReal {
                    poly: p.monic(),
                    ..self
                };
            }
        }
        unreachable!("exactly one root of a squarefree polynomial lies in the interval")
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lo(&self) -> &Q {
        &self.lo
    }

    pub fn hi(&self) -> &Q {
        &self.hi
    }

    pub fn as_rational(&self) -> Option<Q> {
        (self.poly.deg() == 1).then(|| -self.poly.coeff(0) / self.poly.coeff(1))
    }

    pub fn is_rational(&self) -> bool {
        self.poly.deg() == 1
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        if let Some(r) = self.as_rational() {
            let w = (&self.hi - &self.lo) / q(4);
            self.lo = &r - &w;
            self.hi = &r + &w;
            return;
        }
        let chain = self.poly.sturm_chain();
        let mid = split_point(&self.poly, &self.lo, &self.hi);
        if sturm_count(&chain, &self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// A copy whose interval is narrower than `width`.
    pub fn refined(&self, width: &Q) -> AlgReal {
        let mut a = self.clone();
        while &(&a.hi - &a.lo) >= width {
            a.refine();
        }
        a
    }

    /// Sign of `p` at this number, decided exactly.
    pub fn sign_of(&self, p: &Poly) -> i32 {
        if let Some(r) = self.as_rational() {
            return p.sign_at(&r);
        }
        if p.is_zero() {
            return 0;
        }
        let g = self.poly.gcd(p);
        if g.deg() >= 1 && g.count_roots_in(&self.lo, &self.hi) >= 1 {
            return 0;
        }
        let mut a = self.clone();
        loop {
            if p.count_roots_in(&a.lo, &a.hi) == 0 && !p.eval(&a.hi).is_zero() {
                return p.sign_at(&a.hi);
            }
            a.refine();
        }
    }

    pub fn signum(&self) -> i32 {
        self.cmp_q(&Q::zero()) as i32
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    /// Compares with a rational.
    pub fn cmp_q(&self, r: &Q) -> Ordering {
        if let Some(s) = self.as_rational() {
            return s.cmp(r);
        }
        if self.poly.eval(r).is_zero() && r > &self.lo && r < &self.hi {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        loop {
            if r <= &a.lo {
                return Ordering::Greater;
            }
            if r >= &a.hi {
                return Ordering::Less;
            }
            a.refine();
        }
    }

    fn cmp_alg(&self, other: &AlgReal) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_q(&r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_q(&r).reverse();
        }
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        if lo < hi {
            let g = self.poly.gcd(&other.poly);
            if g.deg() >= 1 && g.count_roots_in(lo, hi) >= 1 {
                return Ordering::Equal;
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
    }

    pub fn neg(&self) -> AlgReal {
        if let Some(r) = self.as_rational() {
            return AlgReal::from_rational(-r);
        }
        AlgReal {
            poly: self.poly.reflect().monic(),
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, other: &AlgReal) -> AlgReal {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => AlgReal::from_rational(a + b),
            (Some(a), None) => other.add_q(&a),
            (None, Some(b)) => self.add_q(&b),
            (None, None) => {
                let d = self.poly.deg() * other.poly.deg();
                let refl = other.poly.reflect();
                let xs: Vec<Q> = (0..=d as i64).map(q).collect();
                let ys: Vec<Q> = xs
                    .iter()
                    .map(|x0| self.poly.resultant(&refl.shift(&-x0.clone())))
                    .collect();
                let r = interpolate(&xs, &ys);
                self.combine(other, r, |a, b| (&a.lo + &b.lo, &a.hi + &b.hi))
            }
        }
    }

    fn add_q(&self, r: &Q) -> AlgReal {
        AlgReal {
            poly: self.poly.shift(&-r.clone()),
            lo: &self.lo + r,
            hi: &self.hi + r,
        }
    }

    pub fn sub(&self, other: &AlgReal) -> AlgReal {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &AlgReal) -> AlgReal {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => AlgReal::from_rational(a * b),
            (Some(a), None) => other.mul_q(&a),
            (None, Some(b)) => self.mul_q(&b),
            (None, None) => {
                let db = other.poly.deg();
                let d = self.poly.deg() * db;
                let xs: Vec<Q> = (0..=d as i64).map(q).collect();
                let ys: Vec<Q> = xs
                    .iter()
                    .map(|x0| {
                        // y^db * p_b(x0 / y)
                        let mut cs = vec![Q::zero(); db + 1];
                        let mut xp = Q::one();
                        for i in 0..=db {
                            cs[db - i] = other.poly.coeff(i) * &xp;
                            xp *= x0;
                        }
                        self.poly.resultant(&Poly::new(cs))
                    })
                    .collect();
                let r = interpolate(&xs, &ys);
                self.combine(other, r, |a, b| {
                    let c = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
                    let lo = c.iter().min().unwrap().clone();
                    let hi = c.iter().max().unwrap().clone();
                    (lo, hi)
                })
            }
        }
    }

    fn mul_q(&self, r: &Q) -> AlgReal {
        if r.is_zero() {
            return AlgReal::from_int(0);
        }
        let inv = Q::one() / r;
        let mut f = Q::one();
        let mut cs = Vec::new();
        for c in self.poly.coeffs() {
            cs.push(c * &f);
            f *= &inv;
        }
        let (lo, hi) = if r.is_positive() {
            (&self.lo * r, &self.hi * r)
        } else {
            (&self.hi * r, &self.lo * r)
        };
        AlgReal {
            poly: Poly::new(cs).monic(),
            lo,
            hi,
        }
    }

    pub fn inv(&self) -> Result<AlgReal, PolyError> {
        if let Some(r) = self.as_rational() {
            if r.is_zero() {
                return Err(PolyError::DivisionByZero);
            }
            return Ok(AlgReal::from_rational(Q::one() / r));
        }
        let mut a = self.clone();
        while !(a.lo.is_positive() || a.hi.is_negative()) {
            a.refine();
        }
        Ok(AlgReal {
            poly: a.poly.reverse().monic(),
            lo: Q::one() / &a.hi,
            hi: Q::one() / &a.lo,
        })
    }

    pub fn div(&self, other: &AlgReal) -> Result<AlgReal, PolyError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Isolates the root of `r` that the interval map `f` brackets.
    fn combine(
        &self,
        other: &AlgReal,
        r: Poly,
        f: impl Fn(&AlgReal, &AlgReal) -> (Q, Q),
    ) -> AlgReal {
        let s = r.squarefree_part().expect("resultant of nonzero polynomials");
        let chain = s.sturm_chain();
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let (lo, hi) = f(&a, &b);
            if lo < hi
                && !s.eval(&lo).is_zero()
                && !s.eval(&hi).is_zero()
                && sturm_count(&chain, &lo, &hi) == 1
            {
                return AlgReal::from_parts(s.monic(), lo, hi);
            }
            a.refine();
            b.refine();
        }
    }

    /// Decimal expansion truncated toward negative infinity, for display only.
    pub fn decimal(&self, digits: u32) -> String {
        let scale = Q::from_integer(num_bigint::BigInt::from(10u32).pow(digits));
        let a = self.refined(&(Q::one() / (&scale * q(10))));
        let v = (&a.lo * &scale).floor() / &scale;
        let neg = v.is_negative();
        let abs = v.abs();
        let int = abs.trunc().to_integer();
        let frac = ((abs - Q::from_integer(int.clone())) * &scale).to_integer();
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int}");
        }
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits as usize)
    }
}

/// A simple rational strictly between two reals (`a < b`); `None` bounds are infinite.
pub fn rational_between(a: Option<&AlgReal>, b: Option<&AlgReal>) -> Q {
    match (a, b) {
        (None, None) => Q::zero(),
        (Some(a), None) => {
            if a.signum() < 0 {
                Q::zero()
            } else {
                a.floor() + Q::one()
            }
        }
        (None, Some(b)) => {
            if b.signum() > 0 {
                Q::zero()
            } else {
                -(b.neg().floor() + Q::one())
            }
        }
        (Some(a), Some(b)) => {
            let mut a = a.clone();
            let mut b = b.clone();
            while a.upper_bound() >= b.lower_bound() {
                a.refine();
                b.refine();
            }
            simplest_in_open(&a.upper_bound(), &b.lower_bound())
        }
    }
}

impl AlgReal {
    /// Greatest integer not above this number.
    pub fn floor(&self) -> Q {
        if let Some(r) = self.as_rational() {
            return r.floor();
        }
        let mut a = self.clone();
        while a.lo.floor() != a.hi.floor() {
            a.refine();
        }
        a.lo.floor()
    }

    /// A rational `>=` this number.
    pub fn upper_bound(&self) -> Q {
        self.as_rational().unwrap_or_else(|| self.hi.clone())
    }

    /// A rational `<=` this number.
    pub fn lower_bound(&self) -> Q {
        self.as_rational().unwrap_or_else(|| self.lo.clone())
    }
}

/// Zero if it lies in `(lo, hi)`, else the integer nearest zero there, else the midpoint.
fn simplest_in_open(lo: &Q, hi: &Q) -> Q {
    if lo.is_negative() && hi.is_positive() {
        return Q::zero();
    }
    if !lo.is_negative() {
        let c = lo.floor() + Q::one();
        if &c < hi {
            return c;
        }
    } else {
        let c = hi.ceil() - Q::one();
        if &c > lo {
            return c;
        }
    }
    (lo + hi) / q(2)
}

impl PartialEq for AlgReal {
    fn eq(&self, other: &AlgReal) -> bool {
        self.cmp_alg(other) == Ordering::Equal
    }
}

impl Eq for AlgReal {}

impl PartialOrd for AlgReal {
    fn partial_cmp(&self, other: &AlgReal) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgReal {
    fn cmp(&self, other: &AlgReal) -> Ordering {
        self.cmp_alg(other)
    }
}

impl fmt::Display for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => f.write_str(&super::parse::format_rational(&r)),
            None => write!(
                f,
                "root({}, {}, {})",
                self.poly,
                super::parse::format_rational(&self.lo),
                super::parse::format_rational(&self.hi)
            ),
        }
    }
}

impl fmt::Debug for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct AlgRealJson {
    poly: String,
    lo: String,
    hi: String,
}

pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

impl Serialize for AlgReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AlgRealJson {
            poly: self.poly.to_string(),
            lo: super::parse::format_rational(&self.lo),
            hi: super::parse::format_rational(&self.hi),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<AlgReal, D::Error> {
        use serde::de::Error;
        let j = AlgRealJson::deserialize(d)?;
        let p = Poly::parse(&j.poly).map_err(D::Error::custom)?;
        let lo = parse_rational(&j.lo).ok_or_else(|| D::Error::custom("bad rational lo"))?;
        let hi = parse_rational(&j.hi).ok_or_else(|| D::Error::custom("bad rational hi"))?;
        AlgReal::new(&p, lo, hi).map_err(D::Error::custom)
    }
}
