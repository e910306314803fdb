//! Second-order evaluation over explicit finite structures, with relation
//! quantifiers ranging over the given families only.

mod russell;
mod structure;

pub use russell::{
    blv_injection_search, russell_set, BlvSearch, ClosureReason, RussellError, RussellReport, SearchError, Verdict,
    MAX_SEARCH_UNIVERSE,
};
pub use structure::{full_family, Abstraction, FiniteStructure, Relation, StructureError};

use crate::logic::{Formula, SetTerm, Term};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unassigned variable '{0}'")]
    UnassignedVariable(String),
    #[error("abstraction undefined on {0}")]
    AbstractionUndefined(String),
    #[error("relation '{name}' has arity {arity} but is applied to {found} terms")]
    ArityMismatch {
        name: String,
        arity: usize,
        found: usize,
    },
    #[error("'{0}' is not interpreted in a finite structure")]
    Unsupported(String),
}

/// Assignment for the free variables of a formula.
#[derive(Debug, Clone, Default)]
pub struct Env {
    pub objects: BTreeMap<String, usize>,
    pub relations: BTreeMap<String, Relation>,
}

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    pub fn object(mut self, name: &str, atom: usize) -> Env {
        self.objects.insert(name.to_string(), atom);
        self
    }

    pub fn relation(mut self, name: &str, r: Relation) -> Env {
        self.relations.insert(name.to_string(), r);
        self
    }
}

struct Ctx<'a> {
    s: &'a FiniteStructure,
    objs: Vec<(&'a str, usize)>,
    rels: Vec<(&'a str, &'a Relation)>,
    arith: bool,
}

pub fn eval(s: &FiniteStructure, f: &Formula, env: &Env) -> Result<bool, EvalError> {
    run(s, f, env, false)
}

/// Like [`eval`], reading atom `i` as the number `i`: numerals, `s`, `+`, `*`
/// and `<=` get their standard meaning and may leave the universe. A tuple
/// with a value outside the universe is in no relation.
pub fn eval_arithmetic(s: &FiniteStructure, f: &Formula, env: &Env) -> Result<bool, EvalError> {
    run(s, f, env, true)
}

fn run(s: &FiniteStructure, f: &Formula, env: &Env, arith: bool) -> Result<bool, EvalError> {
    let mut cx = Ctx {
        s,
        objs: env.objects.iter().map(|(k, &v)| (k.as_str(), v)).collect(),
        rels: env.relations.iter().map(|(k, v)| (k.as_str(), v)).collect(),
        arith,
    };
    cx.formula(f)
}

impl<'a> Ctx<'a> {
    fn rel(&self, name: &str) -> Result<&'a Relation, EvalError> {
        self.rels
            .iter()
            .rev()
            .find(|(n, _)| *n == name)
            .map(|(_, r)| *r)
            .ok_or_else(|| EvalError::UnassignedVariable(name.to_string()))
    }

    fn set_value(&self, set: &SetTerm) -> Result<usize, EvalError> {
        let empty;
        let r = match set {
            SetTerm::Var(x) => {
                let r = self.rel(x)?;
                if r.arity() != 1 {
                    return Err(EvalError::ArityMismatch {
                        name: x.clone(),
                        arity: r.arity(),
                        found: 1,
                    });
                }
                r
            }
            SetTerm::Empty => {
                empty = Relation::empty(self.s.size(), 1);
                &empty
            }
        };
        self.s
            .set_index(r)
            .and_then(|i| self.s.abstract_of(i))
            .ok_or_else(|| structure::undefined_set(self.s, r))
    }

    fn term(&self, t: &Term) -> Result<usize, EvalError> {
        match t {
            Term::Var(x) => self
                .objs
                .iter()
                .rev()
                .find(|(n, _)| *n == x)
                .map(|(_, a)| *a)
                .ok_or_else(|| EvalError::UnassignedVariable(x.clone())),
            Term::Abs(_, set) => self.set_value(set),
            Term::Num(k) if self.arith => Ok(*k as usize),
            Term::Succ(a) if self.arith => Ok(self.term(a)?.saturating_add(1)),
            Term::Add(a, b) if self.arith => Ok(self.term(a)?.saturating_add(self.term(b)?)),
            Term::Mul(a, b) if self.arith => Ok(self.term(a)?.saturating_mul(self.term(b)?)),
            other => Err(EvalError::Unsupported(other.to_string())),
        }
    }

    fn formula(&mut self, f: &'a Formula) -> Result<bool, EvalError> {
        use Formula::*;
        Ok(match f {
            True => true,
            False => false,
            Mem(ts, r) => {
                let rel = self.rel(r)?;
                if rel.arity() != ts.len() {
                    return Err(EvalError::ArityMismatch {
                        name: r.clone(),
                        arity: rel.arity(),
                        found: ts.len(),
                    });
                }
                let mut tuple = [0usize; 8];
                if ts.len() > tuple.len() {
                    return Err(EvalError::Unsupported(format!("arity {}", ts.len())));
                }
                for (i, t) in ts.iter().enumerate() {
                    tuple[i] = self.term(t)?;
                }
                let tuple = &tuple[..ts.len()];
                tuple.iter().all(|&a| a < self.s.size()) && rel.contains(tuple)
            }
            Eq(a, b) => self.term(a)? == self.term(b)?,
            Le(a, b) if self.arith => self.term(a)? <= self.term(b)?,
            Le(..) => return Err(EvalError::Unsupported("<=".into())),
            Not(a) => !self.formula(a)?,
            And(a, b) => self.formula(a)? && self.formula(b)?,
            Or(a, b) => self.formula(a)? || self.formula(b)?,
            Implies(a, b) => !self.formula(a)? || self.formula(b)?,
            Iff(a, b) => self.formula(a)? == self.formula(b)?,
            ForallObj(x, b) | ExistsObj(x, b) => {
                let want = matches!(f, ExistsObj(..));
                let mut found = false;
                for a in 0..self.s.size() {
                    self.objs.push((x, a));
                    let v = self.formula(b);
                    self.objs.pop();
                    if v? == want {
                        found = true;
                        break;
                    }
                }
                found == want
            }
            ForallRel(r, n, b) | ExistsRel(r, n, b) => {
                let want = matches!(f, ExistsRel(..));
                let mut found = false;
                for rel in self.s.family(*n) {
                    self.rels.push((r, rel));
                    let v = self.formula(b);
                    self.rels.pop();
                    if v? == want {
                        found = true;
                        break;
                    }
                }
                found == want
            }
        })
    }
}
