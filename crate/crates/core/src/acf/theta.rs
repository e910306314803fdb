//! Uniform definability of `#` over a parametric family `θ(x, ȳ)`, and a
//! decision procedure for the first-order sentences it produces.
//!
//! The decision procedure handles formulas whose atoms, once the free
//! variables are fixed to rationals, are `p(u) = 0` in a single bound variable
//! or `u = v`. All atom polynomials are split into a coprime basis. Two field
//! elements that are roots of the same basis member, or of none, satisfy the
//! same atoms, so a quantifier only needs `min(deg g, q)` roots of each basis
//! member `g` and `q` generic elements, `q` being the quantifier depth.

use super::AcfSet;
use crate::logic::subst::subst_obj;
use crate::logic::{
    and, conj, disj, eq, exists_many, forall, implies, not, parse_formula, Formula, FreshNames, Term,
};
use crate::poly::{q, qf, Poly, Q};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("cannot parse descriptor: {0}")]
    Parse(String),
    #[error("unsupported descriptor shape: {0}")]
    Unsupported(String),
    #[error("family has {expected} parameters, got {found}")]
    ParamCount { expected: usize, found: usize },
    #[error("{0}")]
    Eval(#[from] FieldEvalError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldEvalError {
    #[error("unassigned variable '{0}'")]
    Unassigned(String),
    #[error("atom '{0}' is not univariate in one bound variable")]
    NotUnivariate(String),
    #[error("'{0}' is not a field formula")]
    Unsupported(String),
}

/// A quantifier-free Boolean combination of polynomial equations in `var`
/// and the parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaFamily {
    descriptor: Formula,
    var: String,
    params: Vec<String>,
    n_theta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPrime {
    pub formula: Formula,
    pub n_theta: usize,
    /// The variable receiving the number.
    pub output: String,
    pub params: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaSolutions {
    /// Integer solutions in `[-(N+2), N+1]`.
    pub integers: Vec<i64>,
    /// Whether an element outside every atom holds.
    pub generic: bool,
}

fn term_x_degree(t: &Term, var: &str) -> Result<usize, ThetaError> {
    Ok(match t {
        Term::Var(v) => usize::from(v == var),
        Term::Num(_) => 0,
        Term::Succ(a) | Term::Neg(a) => term_x_degree(a, var)?,
        Term::Add(a, b) => term_x_degree(a, var)?.max(term_x_degree(b, var)?),
        Term::Mul(a, b) => term_x_degree(a, var)? + term_x_degree(b, var)?,
        other => return Err(ThetaError::Unsupported(other.to_string())),
    })
}

/// Sum over atoms of the `var`-degree, an upper bound for the size of any
/// finite instance or finite complement.
fn degree_bound(f: &Formula, var: &str) -> Result<usize, ThetaError> {
    use Formula::*;
    Ok(match f {
        True | False => 0,
        Eq(a, b) => term_x_degree(a, var)?.max(term_x_degree(b, var)?),
        Not(a) => degree_bound(a, var)?,
        And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b) => degree_bound(a, var)? + degree_bound(b, var)?,
        other => return Err(ThetaError::Unsupported(other.to_string())),
    })
}

pub(crate) fn field_poly(t: &Term, var: &str, env: &BTreeMap<&str, Q>) -> Poly {
    match t {
        Term::Var(v) if v == var => Poly::x(),
        Term::Var(v) => Poly::constant(env[v.as_str()].clone()),
        Term::Num(n) => Poly::constant(Q::from_integer((*n).into())),
        Term::Succ(a) => &field_poly(a, var, env) + &Poly::one(),
        Term::Neg(a) => -field_poly(a, var, env),
        Term::Add(a, b) => &field_poly(a, var, env) + &field_poly(b, var, env),
        Term::Mul(a, b) => &field_poly(a, var, env) * &field_poly(b, var, env),
        _ => unreachable!("shape checked on construction"),
    }
}

impl ThetaFamily {
    pub fn new(descriptor: Formula, var: &str) -> Result<ThetaFamily, ThetaError> {
        let n_theta = degree_bound(&descriptor, var)?;
        let params = descriptor
            .free_obj_vars_ordered()
            .into_iter()
            .filter(|v| v != var)
            .collect();
        Ok(ThetaFamily {
            descriptor,
            var: var.to_string(),
            params,
            n_theta,
        })
    }

    /// Descriptor text in variable `x`, parameters in order of appearance.
    pub fn parse(text: &str) -> Result<ThetaFamily, ThetaError> {
        let f = parse_formula(text).map_err(|e| ThetaError::Parse(e.to_string()))?;
        ThetaFamily::new(f, "x")
    }

    pub fn descriptor(&self) -> &Formula {
        &self.descriptor
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    /// `θ(·, ā)` computed by set algebra.
    pub fn instance(&self, args: &[Q]) -> Result<AcfSet, ThetaError> {
        if args.len() != self.params.len() {
            return Err(ThetaError::ParamCount {
                expected: self.params.len(),
                found: args.len(),
            });
        }
        let env: BTreeMap<&str, Q> = self.params.iter().map(String::as_str).zip(args.iter().cloned()).collect();
        Ok(self.set_of(&self.descriptor, &env))
    }

    fn set_of(&self, f: &Formula, env: &BTreeMap<&str, Q>) -> AcfSet {
        use Formula::*;
        match f {
            True => AcfSet::full(),
            False => AcfSet::empty(),
            Eq(a, b) => AcfSet::roots(&(&field_poly(a, &self.var, env) - &field_poly(b, &self.var, env))),
            Not(a) => self.set_of(a, env).complement(),
            And(a, b) => self.set_of(a, env).intersect(&self.set_of(b, env)),
            Or(a, b) => self.set_of(a, env).union(&self.set_of(b, env)),
            Implies(a, b) => self.set_of(a, env).complement().union(&self.set_of(b, env)),
            Iff(a, b) => {
                let (x, y) = (self.set_of(a, env), self.set_of(b, env));
                x.intersect(&y).union(&x.complement().intersect(&y.complement()))
            }
            _ => unreachable!("shape checked on construction"),
        }
    }
}

/// `θ′(b, ȳ) ≡ ⋁ᵢ (|θ(·,ȳ)| = i ∧ b = i) ∨ ⋁ᵢ (|¬θ(·,ȳ)| = i ∧ b = −(i+1))`
/// for `i ≤ N_θ`, cardinality atoms as distinct witnesses.
pub fn acf_theta_prime(fam: &ThetaFamily) -> ThetaPrime {
    let mut fresh = FreshNames::seeded(&[&fam.descriptor]);
    fresh.reserve(&fam.var);
    let output = fresh.fresh("b");
    let us: Vec<String> = (0..fam.n_theta).map(|_| fresh.fresh("u1")).collect();
    let v = fresh.fresh("v");
    let at = |phi: &Formula, u: &str| subst_obj(phi, &fam.var, &Term::Var(u.to_string()));
    let count = |phi: &Formula, i: usize| {
        let us = &us[..i];
        let mut parts = Vec::new();
        for j in 0..i {
            for k in j + 1..i {
                parts.push(not(eq(Term::Var(us[j].clone()), Term::Var(us[k].clone()))));
            }
        }
        parts.extend(us.iter().map(|u| at(phi, u)));
        let cover = disj(us.iter().map(|u| eq(Term::Var(v.clone()), Term::Var(u.clone()))).collect());
        parts.push(forall(&v, implies(at(phi, &v), cover)));
        exists_many(us, conj(parts))
    };
    let neg_theta = not(fam.descriptor.clone());
    let b = || Term::Var(output.clone());
    let mut cases = Vec::new();
    for i in 0..=fam.n_theta {
        cases.push(and(count(&fam.descriptor, i), eq(b(), Term::Num(i as u64))));
    }
    for i in 0..=fam.n_theta {
        cases.push(and(count(&neg_theta, i), eq(b(), Term::Neg(Box::new(Term::Num(i as u64 + 1))))));
    }
    ThetaPrime {
        formula: disj(cases),
        n_theta: fam.n_theta,
        output,
        params: fam.params.clone(),
    }
}

impl ThetaPrime {
    /// `{b : θ′(b, ā)}` over the field, by integers in the window and one
    /// generic point; `b` occurs only in atoms `b = c` with `|c| ≤ N + 1`.
    pub fn solutions(&self, args: &[Q]) -> Result<ThetaSolutions, ThetaError> {
        if args.len() != self.params.len() {
            return Err(ThetaError::ParamCount {
                expected: self.params.len(),
                found: args.len(),
            });
        }
        let mut env: BTreeMap<String, Q> = self.params.iter().cloned().zip(args.iter().cloned()).collect();
        let n = self.n_theta as i64;
        let mut integers = Vec::new();
        for b in -(n + 2)..=n + 1 {
            env.insert(self.output.clone(), q(b));
            if eval_field(&self.formula, &env)? {
                integers.push(b);
            }
        }
        env.insert(self.output.clone(), qf(1, 2));
        let generic = eval_field(&self.formula, &env)?;
        Ok(ThetaSolutions { integers, generic })
    }
}

enum Shape {
    Const(bool),
    Univ(usize, Poly),
    VarEq(usize, usize),
}

enum Node {
    Const(bool),
    /// Truth indexed by the class of the slot's element.
    Atom(usize, Vec<bool>),
    VarEq(usize, usize),
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Implies(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
    Exists(Box<Node>),
    Forall(Box<Node>),
}

struct Compiler<'a> {
    assign: &'a BTreeMap<String, Q>,
    scope: Vec<&'a str>,
}

impl<'a> Compiler<'a> {
    fn slot(&self, v: &str) -> Option<usize> {
        self.scope.iter().rposition(|s| *s == v)
    }

    fn term(&self, t: &Term) -> Result<(Option<usize>, Poly), FieldEvalError> {
        let merge = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(x), Some(y)) if x != y => Err(FieldEvalError::NotUnivariate(t.to_string())),
            _ => Ok(a.or(b)),
        };
        Ok(match t {
            Term::Var(v) => match self.slot(v) {
                Some(s) => (Some(s), Poly::x()),
                None => {
                    let c = self.assign.get(v).ok_or_else(|| FieldEvalError::Unassigned(v.clone()))?;
                    (None, Poly::constant(c.clone()))
                }
            },
            Term::Num(n) => (None, Poly::constant(Q::from_integer((*n).into()))),
            Term::Succ(a) => {
                let (s, p) = self.term(a)?;
                (s, &p + &Poly::one())
            }
            Term::Neg(a) => {
                let (s, p) = self.term(a)?;
                (s, -p)
            }
            Term::Add(a, b) | Term::Mul(a, b) => {
                let ((sa, pa), (sb, pb)) = (self.term(a)?, self.term(b)?);
                let s = merge(sa, sb)?;
                (s, if matches!(t, Term::Add(..)) { &pa + &pb } else { &pa * &pb })
            }
            other => return Err(FieldEvalError::Unsupported(other.to_string())),
        })
    }

    fn atom(&self, a: &Term, b: &Term) -> Result<Shape, FieldEvalError> {
        if let (Term::Var(x), Term::Var(y)) = (a, b) {
            if let (Some(i), Some(j)) = (self.slot(x), self.slot(y)) {
                return Ok(if i == j { Shape::Const(true) } else { Shape::VarEq(i, j) });
            }
        }
        let ((sa, pa), (sb, pb)) = (self.term(a)?, self.term(b)?);
        let s = match (sa, sb) {
            (Some(x), Some(y)) if x != y => {
                return Err(FieldEvalError::NotUnivariate(format!("{a} = {b}")));
            }
            _ => sa.or(sb),
        };
        let p = &pa - &pb;
        Ok(match s {
            _ if p.is_zero() => Shape::Const(true),
            _ if p.is_constant() => Shape::Const(false),
            Some(s) => Shape::Univ(s, p.squarefree_part().expect("nonzero")),
            None => unreachable!("constant polynomial without a variable"),
        })
    }

    fn walk(&mut self, f: &'a Formula, out: &mut dyn FnMut(&Shape)) -> Result<(), FieldEvalError> {
        use Formula::*;
        match f {
            True | False => {}
            Eq(a, b) => out(&self.atom(a, b)?),
            Not(a) => self.walk(a, out)?,
            And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b) => {
                self.walk(a, out)?;
                self.walk(b, out)?;
            }
            ForallObj(x, a) | ExistsObj(x, a) => {
                self.scope.push(x);
                let r = self.walk(a, out);
                self.scope.pop();
                r?;
            }
            other => return Err(FieldEvalError::Unsupported(other.to_string())),
        }
        Ok(())
    }

    fn compile(&mut self, f: &'a Formula, basis: &[Poly]) -> Result<Node, FieldEvalError> {
        use Formula::*;
        let bx = Box::new;
        Ok(match f {
            True => Node::Const(true),
            False => Node::Const(false),
            Eq(a, b) => match self.atom(a, b)? {
                Shape::Const(v) => Node::Const(v),
                Shape::VarEq(i, j) => Node::VarEq(i, j),
                Shape::Univ(s, p) => {
                    let mut truth: Vec<bool> = basis.iter().map(|g| g.divides(&p)).collect();
                    truth.push(false);
                    Node::Atom(s, truth)
                }
            },
            Not(a) => Node::Not(bx(self.compile(a, basis)?)),
            And(a, b) => Node::And(bx(self.compile(a, basis)?), bx(self.compile(b, basis)?)),
            Or(a, b) => Node::Or(bx(self.compile(a, basis)?), bx(self.compile(b, basis)?)),
            Implies(a, b) => Node::Implies(bx(self.compile(a, basis)?), bx(self.compile(b, basis)?)),
            Iff(a, b) => Node::Iff(bx(self.compile(a, basis)?), bx(self.compile(b, basis)?)),
            ForallObj(x, a) | ExistsObj(x, a) => {
                self.scope.push(x);
                let body = self.compile(a, basis);
                self.scope.pop();
                let body = bx(body?);
                if matches!(f, ForallObj(..)) {
                    Node::Forall(body)
                } else {
                    Node::Exists(body)
                }
            }
            other => return Err(FieldEvalError::Unsupported(other.to_string())),
        })
    }
}

/// Pairwise coprime squarefree polynomials whose products give every input's
/// squarefree part.
fn coprime_basis(polys: Vec<Poly>) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    for p in polys {
        let mut pending = vec![p];
        while let Some(mut p) = pending.pop() {
            if p.deg() == 0 {
                continue;
            }
            let mut i = 0;
            while i < basis.len() {
                let g = basis[i].gcd(&p);
                if g.deg() == 0 {
                    i += 1;
                    continue;
                }
                let old = basis.swap_remove(i);
                pending.push(old.div_rem(&g).0.monic());
                p = p.div_rem(&g).0.monic();
                pending.push(g);
                if p.deg() == 0 {
                    break;
                }
                i = 0;
            }
            if p.deg() > 0 {
                basis.push(p.monic());
            }
        }
    }
    basis
}

fn quantifier_depth(f: &Formula) -> usize {
    match f {
        Formula::ForallObj(_, a) | Formula::ExistsObj(_, a) => 1 + quantifier_depth(a),
        other => other.children().into_iter().map(quantifier_depth).max().unwrap_or(0),
    }
}

struct Machine {
    /// Class of each domain element; `basis.len()` is the generic class.
    class: Vec<usize>,
    env: Vec<usize>,
}

impl Machine {
    fn run(&mut self, n: &Node) -> bool {
        match n {
            Node::Const(v) => *v,
            Node::Atom(s, truth) => truth[self.class[self.env[*s]]],
            Node::VarEq(i, j) => self.env[*i] == self.env[*j],
            Node::Not(a) => !self.run(a),
            Node::And(a, b) => self.run(a) && self.run(b),
            Node::Or(a, b) => self.run(a) || self.run(b),
            Node::Implies(a, b) => !self.run(a) || self.run(b),
            Node::Iff(a, b) => self.run(a) == self.run(b),
            Node::Exists(a) | Node::Forall(a) => {
                let want = matches!(n, Node::Exists(..));
                let mut hit = false;
                for e in 0..self.class.len() {
                    self.env.push(e);
                    let v = self.run(a);
                    self.env.pop();
                    if v == want {
                        hit = true;
                        break;
                    }
                }
                hit == want
            }
        }
    }
}

/// Truth of a first-order field formula in an algebraically closed field of
/// characteristic 0, free variables fixed to rationals.
pub fn eval_field(f: &Formula, assign: &BTreeMap<String, Q>) -> Result<bool, FieldEvalError> {
    let mut cx = Compiler {
        assign,
        scope: Vec::new(),
    };
    let mut polys = Vec::new();
    cx.walk(f, &mut |s| {
        if let Shape::Univ(_, p) = s {
            polys.push(p.clone());
        }
    })?;
    let basis = coprime_basis(polys);
    let node = cx.compile(f, &basis)?;
    let reps = quantifier_depth(f).max(1);
    let mut class = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        class.extend(std::iter::repeat(i).take(g.deg().min(reps)));
    }
    class.extend(std::iter::repeat(basis.len()).take(reps));
    Ok(Machine { class, env: Vec::new() }.run(&node))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> ThetaFamily {
        ThetaFamily::parse(s).unwrap()
    }

    fn check(f: &ThetaFamily, args: &[Q]) -> (Vec<i64>, bool, i64) {
        let tp = acf_theta_prime(f);
        let sol = tp.solutions(args).unwrap();
        (sol.integers, sol.generic, f.instance(args).unwrap().number())
    }

    #[test]
    fn diagonal_is_always_one() {
        let f = fam("x = y");
        assert_eq!(f.n_theta(), 1);
        for y in [q(0), q(3), qf(-1, 2)] {
            assert_eq!(check(&f, &[y]), (vec![1], false, 1));
        }
    }

    #[test]
    fn hyperbola_splits_on_zero() {
        let f = fam("x * y = 1");
        assert_eq!(check(&f, &[q(2)]), (vec![1], false, 1));
        assert_eq!(check(&f, &[q(0)]), (vec![0], false, 0));
    }

    #[test]
    fn contradiction_is_zero() {
        let f = fam("x != x");
        assert_eq!(f.n_theta(), 1);
        assert_eq!(check(&f, &[]), (vec![0], false, 0));
    }

    #[test]
    fn cofinite_instances() {
        let f = fam("not (x * x + 1 = 0)");
        assert_eq!(check(&f, &[]), (vec![-3], false, -3));
        let g = fam("x * x = y or x = 1");
        assert_eq!(check(&g, &[q(4)]), (vec![3], false, 3));
        assert_eq!(check(&g, &[q(1)]), (vec![2], false, 2));
        assert_eq!(check(&g, &[q(0)]), (vec![2], false, 2));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            ThetaFamily::parse("exists z. x = z"),
            Err(ThetaError::Unsupported(_))
        ));
        assert!(matches!(fam("x = y").instance(&[]), Err(ThetaError::ParamCount { .. })));
    }

    #[test]
    fn field_sentences() {
        let t = |s: &str| eval_field(&parse_formula(s).unwrap(), &BTreeMap::new()).unwrap();
        assert!(t("exists x. x * x + 1 = 0"));
        assert!(t("forall x. exists y. not y = x"));
        assert!(!t("exists x. forall y. x = y"));
        assert!(t("exists x. exists y. not x = y and x * x = 2 and y * y = 2"));
        assert!(!t("exists x. exists y. exists z. not x = y and not y = z and not x = z and x * x = 2 and y * y = 2 and z * z = 2"));
    }

    #[test]
    fn mixed_atoms_are_rejected() {
        let f = parse_formula("forall x. exists y. y * y = x").unwrap();
        assert!(matches!(
            eval_field(&f, &BTreeMap::new()),
            Err(FieldEvalError::NotUnivariate(_))
        ));
    }

    #[test]
    fn basis_is_coprime() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        let r = Poly::from_ints(&[-1, 1]);
        let b = coprime_basis(vec![p, r]);
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|g| g.deg() == 1));
    }
}
