//! Sets cut out by sign conditions, read off a sign table over the isolated
//! real roots of the polynomials involved.

use super::{merge_breaks, piece_cells, Cell1, RcfError, RcfSet};
use crate::acf::field_poly;
use crate::logic::{parse_formula, Formula, Term};
use crate::poly::{AlgReal, Poly, Q};
use std::collections::BTreeMap;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rel {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Rel {
    pub fn holds(self, sign: i32) -> bool {
        match self {
            Rel::Lt => sign < 0,
            Rel::Le => sign <= 0,
            Rel::Eq => sign == 0,
            Rel::Ne => sign != 0,
            Rel::Ge => sign >= 0,
            Rel::Gt => sign > 0,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        }
    }
}

/// `poly rel 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCond {
    pub poly: Poly,
    pub rel: Rel,
}

/// A disjunction of conjunctions of sign conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignFormula {
    pub clauses: Vec<Vec<SignCond>>,
}

impl SignCond {
    pub fn new(poly: Poly, rel: Rel) -> SignCond {
        SignCond { poly, rel }
    }
}

/// `{x : every condition holds}` in canonical form.
pub fn rcf_from_sign_condition(conds: &[SignCond]) -> Result<RcfSet, RcfError> {
    let mut breaks: Vec<AlgReal> = Vec::new();
    for c in conds {
        if c.poly.is_zero() {
            return Err(RcfError::ZeroPolynomial);
        }
        if c.poly.deg() > 0 {
            breaks = merge_breaks(&breaks, &c.poly.real_roots()?);
        }
    }
    let bits = piece_cells(&breaks)
        .iter()
        .map(|cell| {
            conds.iter().all(|c| {
                let s = match cell {
                    Cell1::Point { at } => at.sign_of(&c.poly),
                    _ => {
                        let at = cell.sample();
                        c.poly.sign_at(&at.as_rational().expect("interval samples are rational"))
                    }
                };
                c.rel.holds(s)
            })
        })
        .collect();
    Ok(RcfSet::from_pieces(breaks, bits))
}

impl SignFormula {
    pub fn set(&self) -> Result<RcfSet, RcfError> {
        self.clauses.iter().try_fold(RcfSet::empty(), |acc, c| {
            Ok(acc.union(&rcf_from_sign_condition(c)?))
        })
    }

    /// `1 + Σ deg`, a bound on `|dim|` and `|E|` of every set the formula
    /// defines as its coefficients vary.
    pub fn bound(&self) -> usize {
        1 + self.clauses.iter().flatten().map(|c| c.poly.deg()).sum::<usize>()
    }
}

const RELS: [(&str, Rel); 6] = [
    ("<=", Rel::Le),
    (">=", Rel::Ge),
    ("!=", Rel::Ne),
    ("<", Rel::Lt),
    (">", Rel::Gt),
    ("=", Rel::Eq),
];

fn parse_cond(text: &str) -> Result<SignCond, RcfError> {
    for (sym, rel) in RELS {
        if let Some((l, r)) = text.split_once(sym) {
            let p = &Poly::parse(l)? - &Poly::parse(r)?;
            if p.is_zero() {
                return Err(RcfError::ZeroPolynomial);
            }
            return Ok(SignCond::new(p, rel));
        }
    }
    Err(RcfError::Syntax(text.trim().to_string()))
}

impl FromStr for SignFormula {
    type Err = RcfError;

    /// `&` binds tighter than `|`.
    fn from_str(s: &str) -> Result<SignFormula, RcfError> {
        let clauses = s
            .split('|')
            .map(|c| c.split('&').map(parse_cond).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SignFormula { clauses })
    }
}

impl fmt::Display for SignFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|s| format!("{} {} 0", s.poly, s.rel.symbol()))
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect();
        f.write_str(&cs.join(" | "))
    }
}

/// A quantifier-free Boolean combination of `=` and `<=` between polynomial
/// terms in `x` and rational parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcfTheta {
    descriptor: Formula,
    params: Vec<String>,
}

impl RcfTheta {
    pub fn new(descriptor: Formula) -> Result<RcfTheta, RcfError> {
        check_shape(&descriptor)?;
        let params = descriptor.free_obj_vars_ordered().into_iter().filter(|v| v != "x").collect();
        Ok(RcfTheta { descriptor, params })
    }

    pub fn parse(text: &str) -> Result<RcfTheta, RcfError> {
        RcfTheta::new(parse_formula(text).map_err(|e| RcfError::Syntax(e.to_string()))?)
    }

    pub fn descriptor(&self) -> &Formula {
        &self.descriptor
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn instance(&self, args: &[Q]) -> Result<RcfSet, RcfError> {
        if args.len() != self.params.len() {
            return Err(RcfError::Syntax(format!(
                "{} parameters expected, {} given",
                self.params.len(),
                args.len()
            )));
        }
        let env: BTreeMap<&str, Q> = self.params.iter().map(String::as_str).zip(args.iter().cloned()).collect();
        set_of(&self.descriptor, &env)
    }
}

fn check_term(t: &Term) -> Result<(), RcfError> {
    match t {
        Term::Var(_) | Term::Num(_) => Ok(()),
        Term::Succ(a) | Term::Neg(a) => check_term(a),
        Term::Add(a, b) | Term::Mul(a, b) => check_term(a).and(check_term(b)),
        other => Err(RcfError::Syntax(other.to_string())),
    }
}

fn check_shape(f: &Formula) -> Result<(), RcfError> {
    match f {
        Formula::True | Formula::False => Ok(()),
        Formula::Eq(a, b) | Formula::Le(a, b) => check_term(a).and(check_term(b)),
        Formula::Not(a) => check_shape(a),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            check_shape(a).and(check_shape(b))
        }
        other => Err(RcfError::Syntax(other.to_string())),
    }
}

/// `p rel 0`, where the zero polynomial holds everywhere or nowhere.
fn atom_set(p: Poly, rel: Rel) -> Result<RcfSet, RcfError> {
    if p.is_zero() {
        return Ok(if rel.holds(0) { RcfSet::line() } else { RcfSet::empty() });
    }
    rcf_from_sign_condition(&[SignCond::new(p, rel)])
}

fn set_of(f: &Formula, env: &BTreeMap<&str, Q>) -> Result<RcfSet, RcfError> {
    use Formula::*;
    let diff = |a: &Term, b: &Term| &field_poly(a, "x", env) - &field_poly(b, "x", env);
    Ok(match f {
        True => RcfSet::line(),
        False => RcfSet::empty(),
        Eq(a, b) => atom_set(diff(a, b), Rel::Eq)?,
        Le(a, b) => atom_set(diff(a, b), Rel::Le)?,
        Not(a) => set_of(a, env)?.complement(),
        And(a, b) => set_of(a, env)?.intersect(&set_of(b, env)?),
        Or(a, b) => set_of(a, env)?.union(&set_of(b, env)?),
        Implies(a, b) => set_of(a, env)?.complement().union(&set_of(b, env)?),
        Iff(a, b) => {
            let (x, y) = (set_of(a, env)?, set_of(b, env)?);
            x.intersect(&y).union(&x.complement().intersect(&y.complement()))
        }
        _ => unreachable!("shape checked on construction"),
    })
}
