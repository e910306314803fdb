//! Formulas of the two-sorted second-order signature.
//!
//! Object terms include the abstraction terms `#X` and `ext(X)` and the
//! arithmetic symbols `0, s, +, *`. Relation variables carry an arity at their
//! binder; every use must agree with it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AbsOp {
    /// `#`
    Hash,
    /// `ext`
    Ext,
}

/// Argument of an abstraction term: a unary relation variable or the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetTerm {
    Var(String),
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Num(u64),
    /// A defined object constant such as `Zero`.
    Const(String),
    Abs(AbsOp, SetTerm),
    Succ(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Neg(Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    /// `(t1, ..., tn) in R`
    Mem(Vec<Term>, String),
    Eq(Term, Term),
    Le(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    ForallObj(String, Box<Formula>),
    ExistsObj(String, Box<Formula>),
    ForallRel(String, usize, Box<Formula>),
    ExistsRel(String, usize, Box<Formula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sort {
    Object,
    Relation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WellFormedError {
    #[error("relation variable '{name}' used with arity {found}, expected {expected}")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("relation variable '{0}' bound with arity 0")]
    ZeroArity(String),
}

pub fn var(name: &str) -> Term {
    Term::Var(name.to_string())
}

pub fn hash(set: &str) -> Term {
    Term::Abs(AbsOp::Hash, SetTerm::Var(set.to_string()))
}

pub fn ext(set: &str) -> Term {
    Term::Abs(AbsOp::Ext, SetTerm::Var(set.to_string()))
}

pub fn succ(t: Term) -> Term {
    Term::Succ(Box::new(t))
}

pub fn add(a: Term, b: Term) -> Term {
    Term::Add(Box::new(a), Box::new(b))
}

pub fn mul(a: Term, b: Term) -> Term {
    Term::Mul(Box::new(a), Box::new(b))
}

/// `s^n(0)`.
pub fn numeral(n: u64) -> Term {
    (0..n).fold(Term::Num(0), |t, _| succ(t))
}

pub fn mem(args: Vec<Term>, rel: &str) -> Formula {
    Formula::Mem(args, rel.to_string())
}

pub fn in_set(t: Term, set: &str) -> Formula {
    Formula::Mem(vec![t], set.to_string())
}

pub fn eq(a: Term, b: Term) -> Formula {
    Formula::Eq(a, b)
}

pub fn le(a: Term, b: Term) -> Formula {
    Formula::Le(a, b)
}

pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn implies(a: Formula, b: Formula) -> Formula {
    Formula::Implies(Box::new(a), Box::new(b))
}

pub fn iff(a: Formula, b: Formula) -> Formula {
    Formula::Iff(Box::new(a), Box::new(b))
}

pub fn forall(x: &str, body: Formula) -> Formula {
    Formula::ForallObj(x.to_string(), Box::new(body))
}

pub fn exists(x: &str, body: Formula) -> Formula {
    Formula::ExistsObj(x.to_string(), Box::new(body))
}

pub fn forall_rel(r: &str, arity: usize, body: Formula) -> Formula {
    Formula::ForallRel(r.to_string(), arity, Box::new(body))
}

pub fn exists_rel(r: &str, arity: usize, body: Formula) -> Formula {
    Formula::ExistsRel(r.to_string(), arity, Box::new(body))
}

/// Left-nested conjunction; `True` when empty.
pub fn conj(parts: Vec<Formula>) -> Formula {
    let mut it = parts.into_iter();
    match it.next() {
        None => Formula::True,
        Some(first) => it.fold(first, and),
    }
}

/// Left-nested disjunction; `False` when empty.
pub fn disj(parts: Vec<Formula>) -> Formula {
    let mut it = parts.into_iter();
    match it.next() {
        None => Formula::False,
        Some(first) => it.fold(first, or),
    }
}

pub fn forall_many(xs: &[String], body: Formula) -> Formula {
    xs.iter().rev().fold(body, |b, x| forall(x, b))
}

pub fn exists_many(xs: &[String], body: Formula) -> Formula {
    xs.iter().rev().fold(body, |b, x| exists(x, b))
}

/// Functional, injective and surjective binary relation `f` from `x` onto `y`.
pub fn bijection(f: &str, x: &str, y: &str) -> Formula {
    let fxy = |a: &str, b: &str| mem(vec![var(a), var(b)], f);
    let total = forall(
        "x",
        implies(
            in_set(var("x"), x),
            exists("y", and(in_set(var("y"), y), fxy("x", "y"))),
        ),
    );
    let functional = forall(
        "x",
        forall(
            "y",
            forall(
                "z",
                implies(and(fxy("x", "y"), fxy("x", "z")), eq(var("y"), var("z"))),
            ),
        ),
    );
    let injective = forall(
        "x",
        forall(
            "z",
            forall(
                "y",
                implies(and(fxy("x", "y"), fxy("z", "y")), eq(var("x"), var("z"))),
            ),
        ),
    );
    let onto = forall(
        "y",
        implies(
            in_set(var("y"), y),
            exists("x", and(in_set(var("x"), x), fxy("x", "y"))),
        ),
    );
    conj(vec![total, functional, injective, onto])
}

impl Term {
    pub fn walk_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Num(_) | Term::Const(_) | Term::Abs(..) => {}
            Term::Succ(a) | Term::Neg(a) => a.walk_vars(out),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.walk_vars(out);
                b.walk_vars(out);
            }
        }
    }

    pub fn set_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Abs(_, SetTerm::Var(s)) => {
                out.insert(s.clone());
            }
            Term::Var(_) | Term::Num(_) | Term::Const(_) | Term::Abs(_, SetTerm::Empty) => {}
            Term::Succ(a) | Term::Neg(a) => a.set_vars(out),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.set_vars(out);
                b.set_vars(out);
            }
        }
    }

    pub fn has_abstraction(&self) -> bool {
        match self {
            Term::Abs(..) => true,
            Term::Var(_) | Term::Num(_) | Term::Const(_) => false,
            Term::Succ(a) | Term::Neg(a) => a.has_abstraction(),
            Term::Add(a, b) | Term::Mul(a, b) => a.has_abstraction() || b.has_abstraction(),
        }
    }

    pub fn map_vars(&self, f: &impl Fn(&str) -> Term) -> Term {
        match self {
            Term::Var(v) => f(v),
            Term::Num(_) | Term::Const(_) | Term::Abs(..) => self.clone(),
            Term::Succ(a) => succ(a.map_vars(f)),
            Term::Neg(a) => Term::Neg(Box::new(a.map_vars(f))),
            Term::Add(a, b) => add(a.map_vars(f), b.map_vars(f)),
            Term::Mul(a, b) => mul(a.map_vars(f), b.map_vars(f)),
        }
    }

    pub fn rename_set(&self, from: &str, to: &str) -> Term {
        match self {
            Term::Abs(op, SetTerm::Var(s)) if s == from => Term::Abs(*op, SetTerm::Var(to.into())),
            Term::Var(_) | Term::Num(_) | Term::Const(_) | Term::Abs(..) => self.clone(),
            Term::Succ(a) => succ(a.rename_set(from, to)),
            Term::Neg(a) => Term::Neg(Box::new(a.rename_set(from, to))),
            Term::Add(a, b) => add(a.rename_set(from, to), b.rename_set(from, to)),
            Term::Mul(a, b) => mul(a.rename_set(from, to), b.rename_set(from, to)),
        }
    }

    /// Bottom-up rewrite.
    pub fn rewrite(&self, f: &impl Fn(Term) -> Term) -> Term {
        let t = match self {
            Term::Succ(a) => succ(a.rewrite(f)),
            Term::Neg(a) => Term::Neg(Box::new(a.rewrite(f))),
            Term::Add(a, b) => add(a.rewrite(f), b.rewrite(f)),
            Term::Mul(a, b) => mul(a.rewrite(f), b.rewrite(f)),
            other => other.clone(),
        };
        f(t)
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, Term::Var(_) | Term::Const(_) | Term::Abs(..))
    }
}

/// Generator of names not yet used anywhere in the formulas it was seeded with.
#[derive(Debug, Clone, Default)]
pub struct FreshNames {
    used: BTreeSet<String>,
}

impl FreshNames {
    pub fn new() -> FreshNames {
        FreshNames::default()
    }

    pub fn seeded(fs: &[&Formula]) -> FreshNames {
        let mut g = FreshNames::new();
        for f in fs {
            f.collect_names(&mut g.used);
        }
        g
    }

    pub fn reserve(&mut self, name: &str) {
        self.used.insert(name.to_string());
    }

    pub fn is_used(&self, name: &str) -> bool {
        self.used.contains(name)
    }

    /// `base` itself if unused, else `base1`, `base2`, ...
    pub fn fresh(&mut self, base: &str) -> String {
        let stem: String = base.trim_end_matches(|c: char| c.is_ascii_digit()).to_string();
        let stem = if stem.is_empty() { base.to_string() } else { stem };
        if !self.used.contains(base) {
            self.used.insert(base.to_string());
            return base.to_string();
        }
        let mut i = 1usize;
        loop {
            let cand = format!("{stem}{i}");
            if !self.used.contains(&cand) {
                self.used.insert(cand.clone());
                return cand;
            }
            i += 1;
        }
    }
}

impl Formula {
    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            Formula::True | Formula::False | Formula::Mem(..) | Formula::Eq(..) | Formula::Le(..)
        )
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::True
            | Formula::False
            | Formula::Mem(..)
            | Formula::Eq(..)
            | Formula::Le(..) => vec![],
            Formula::Not(a)
            | Formula::ForallObj(_, a)
            | Formula::ExistsObj(_, a)
            | Formula::ForallRel(_, _, a)
            | Formula::ExistsRel(_, _, a) => vec![a],
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => vec![a, b],
        }
    }

    pub fn terms(&self) -> Vec<&Term> {
        match self {
            Formula::Mem(ts, _) => ts.iter().collect(),
            Formula::Eq(a, b) | Formula::Le(a, b) => vec![a, b],
            _ => vec![],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    pub fn has_rel_quantifier(&self) -> bool {
        match self {
            Formula::ForallRel(..) | Formula::ExistsRel(..) => true,
            _ => self.children().iter().any(|c| c.has_rel_quantifier()),
        }
    }

    pub fn has_abstraction(&self) -> bool {
        self.terms().iter().any(|t| t.has_abstraction())
            || self.children().iter().any(|c| c.has_abstraction())
    }

    pub fn uses_op(&self, op: AbsOp) -> bool {
        fn term_uses(t: &Term, op: AbsOp) -> bool {
            match t {
                Term::Abs(o, _) => *o == op,
                Term::Var(_) | Term::Num(_) | Term::Const(_) => false,
                Term::Succ(a) | Term::Neg(a) => term_uses(a, op),
                Term::Add(a, b) | Term::Mul(a, b) => term_uses(a, op) || term_uses(b, op),
            }
        }
        self.terms().iter().any(|t| term_uses(t, op))
            || self.children().iter().any(|c| c.uses_op(op))
    }

    /// Every identifier occurring anywhere, bound or free.
    pub fn collect_names(&self, out: &mut BTreeSet<String>) {
        for t in self.terms() {
            t.walk_vars(out);
            t.set_vars(out);
        }
        match self {
            Formula::Mem(_, r) => {
                out.insert(r.clone());
            }
            Formula::ForallObj(x, _)
            | Formula::ExistsObj(x, _)
            | Formula::ForallRel(x, _, _)
            | Formula::ExistsRel(x, _, _) => {
                out.insert(x.clone());
            }
            _ => {}
        }
        for c in self.children() {
            c.collect_names(out);
        }
    }

    pub fn free_obj_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.free_obj_into(&mut Vec::new(), &mut out);
        out
    }

    /// Free object variables in order of first occurrence.
    pub fn free_obj_vars_ordered(&self) -> Vec<String> {
        let mut out = Vec::new();
        fn go(f: &Formula, bound: &mut Vec<String>, out: &mut Vec<String>) {
            for t in f.terms() {
                let mut vs = Vec::new();
                term_vars_ordered(t, &mut vs);
                for v in vs {
                    if !bound.contains(&v) && !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
            match f {
                Formula::ForallObj(x, b) | Formula::ExistsObj(x, b) => {
                    bound.push(x.clone());
                    go(b, bound, out);
                    bound.pop();
                }
                _ => {
                    for c in f.children() {
                        go(c, bound, out);
                    }
                }
            }
        }
        go(self, &mut Vec::new(), &mut out);
        out
    }

    fn free_obj_into(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        for t in self.terms() {
            let mut vs = BTreeSet::new();
            t.walk_vars(&mut vs);
            for v in vs {
                if !bound.contains(&v) {
                    out.insert(v);
                }
            }
        }
        match self {
            Formula::ForallObj(x, b) | Formula::ExistsObj(x, b) => {
                bound.push(x.clone());
                b.free_obj_into(bound, out);
                bound.pop();
            }
            _ => {
                for c in self.children() {
                    c.free_obj_into(bound, out);
                }
            }
        }
    }

    /// Free relation variables with the arity of their first use.
    pub fn free_rel_vars(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        self.free_rel_into(&mut Vec::new(), &mut out);
        out
    }

    fn free_rel_into(&self, bound: &mut Vec<String>, out: &mut BTreeMap<String, usize>) {
        for t in self.terms() {
            let mut ss = BTreeSet::new();
            t.set_vars(&mut ss);
            for s in ss {
                if !bound.contains(&s) {
                    out.entry(s).or_insert(1);
                }
            }
        }
        match self {
            Formula::Mem(ts, r) => {
                if !bound.contains(r) {
                    out.entry(r.clone()).or_insert(ts.len());
                }
            }
            Formula::ForallRel(r, _, b) | Formula::ExistsRel(r, _, b) => {
                bound.push(r.clone());
                b.free_rel_into(bound, out);
                bound.pop();
            }
            _ => {
                for c in self.children() {
                    c.free_rel_into(bound, out);
                }
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_obj_vars().is_empty() && self.free_rel_vars().is_empty()
    }

    /// Checks that every relation variable is used with one arity per scope.
    pub fn check_arities(&self) -> Result<(), WellFormedError> {
        fn note(
            env: &mut Vec<(String, usize)>,
            free: &mut BTreeMap<String, usize>,
            name: &str,
            n: usize,
        ) -> Result<(), WellFormedError> {
            let expected = match env.iter().rev().find(|(r, _)| r == name) {
                Some((_, a)) => *a,
                None => *free.entry(name.to_string()).or_insert(n),
            };
            if expected != n {
                return Err(WellFormedError::ArityMismatch {
                    name: name.to_string(),
                    expected,
                    found: n,
                });
            }
            Ok(())
        }
        fn go(
            f: &Formula,
            env: &mut Vec<(String, usize)>,
            free: &mut BTreeMap<String, usize>,
        ) -> Result<(), WellFormedError> {
            for t in f.terms() {
                let mut ss = BTreeSet::new();
                t.set_vars(&mut ss);
                for s in ss {
                    note(env, free, &s, 1)?;
                }
            }
            match f {
                Formula::Mem(ts, r) => note(env, free, r, ts.len()),
                Formula::ForallRel(r, a, b) | Formula::ExistsRel(r, a, b) => {
                    if *a == 0 {
                        return Err(WellFormedError::ZeroArity(r.clone()));
                    }
                    env.push((r.clone(), *a));
                    let res = go(b, env, free);
                    env.pop();
                    res
                }
                _ => f.children().iter().try_for_each(|c| go(c, env, free)),
            }
        }
        go(self, &mut Vec::new(), &mut BTreeMap::new())
    }

    /// Applies `f` to every term, leaving binders untouched (no capture handling).
    pub fn map_terms(&self, f: &impl Fn(&Term) -> Term) -> Formula {
        self.map_atoms(&|a| match a {
            Formula::Mem(ts, r) => Formula::Mem(ts.iter().map(f).collect(), r.clone()),
            Formula::Eq(x, y) => Formula::Eq(f(x), f(y)),
            Formula::Le(x, y) => Formula::Le(f(x), f(y)),
            other => other.clone(),
        })
    }

    /// Rebuilds the formula with every atom replaced by `f(atom)`.
    pub fn map_atoms(&self, f: &impl Fn(&Formula) -> Formula) -> Formula {
        match self {
            Formula::True
            | Formula::False
            | Formula::Mem(..)
            | Formula::Eq(..)
            | Formula::Le(..) => f(self),
            Formula::Not(a) => not(a.map_atoms(f)),
            Formula::And(a, b) => and(a.map_atoms(f), b.map_atoms(f)),
            Formula::Or(a, b) => or(a.map_atoms(f), b.map_atoms(f)),
            Formula::Implies(a, b) => implies(a.map_atoms(f), b.map_atoms(f)),
            Formula::Iff(a, b) => iff(a.map_atoms(f), b.map_atoms(f)),
            Formula::ForallObj(x, b) => forall(x, b.map_atoms(f)),
            Formula::ExistsObj(x, b) => exists(x, b.map_atoms(f)),
            Formula::ForallRel(r, n, b) => forall_rel(r, *n, b.map_atoms(f)),
            Formula::ExistsRel(r, n, b) => exists_rel(r, *n, b.map_atoms(f)),
        }
    }

    pub fn negate(self) -> Formula {
        not(self)
    }
}

fn term_vars_ordered(t: &Term, out: &mut Vec<String>) {
    match t {
        Term::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        Term::Num(_) | Term::Const(_) | Term::Abs(..) => {}
        Term::Succ(a) | Term::Neg(a) => term_vars_ordered(a, out),
        Term::Add(a, b) | Term::Mul(a, b) => {
            term_vars_ordered(a, out);
            term_vars_ordered(b, out);
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::print_formula(self))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::print_term(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_variables() {
        let f = exists_rel("X", 1, forall("x", mem(vec![var("x"), hash("X")], "R")));
        assert!(f.free_obj_vars().is_empty());
        assert_eq!(f.free_rel_vars().get("R"), Some(&2));
        assert!(!f.free_rel_vars().contains_key("X"));
    }

    #[test]
    fn arity_mismatch_is_named() {
        let f = and(mem(vec![var("x")], "R"), mem(vec![var("x"), var("y")], "R"));
        assert_eq!(
            f.check_arities(),
            Err(WellFormedError::ArityMismatch {
                name: "R".into(),
                expected: 1,
                found: 2
            })
        );
        let g = exists_rel("X", 2, in_set(var("x"), "X"));
        assert!(g.check_arities().is_err());
    }

    #[test]
    fn fresh_names_skip_used() {
        let f = forall("x", eq(var("x"), var("x1")));
        let mut g = FreshNames::seeded(&[&f]);
        assert_eq!(g.fresh("x"), "x2");
        assert_eq!(g.fresh("y"), "y");
        assert_eq!(g.fresh("y"), "y1");
    }

    #[test]
    fn numerals_unfold() {
        assert_eq!(numeral(2), succ(succ(Term::Num(0))));
    }
}
