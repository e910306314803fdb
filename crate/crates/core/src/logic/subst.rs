//! Capture-avoiding substitution, renaming, alpha-equivalence and negation normal form.

use super::ast::*;
use std::collections::{BTreeMap, BTreeSet};

fn term_set_vars(t: &Term) -> BTreeSet<String> {
    let mut s = BTreeSet::new();
    t.set_vars(&mut s);
    s
}

fn term_obj_vars(t: &Term) -> BTreeSet<String> {
    let mut s = BTreeSet::new();
    t.walk_vars(&mut s);
    s
}

/// Renames free occurrences of relation variable `from` to `to`.
pub fn rename_rel(f: &Formula, from: &str, to: &str) -> Formula {
    match f {
        Formula::Mem(ts, r) => Formula::Mem(
            ts.iter().map(|t| t.rename_set(from, to)).collect(),
            if r == from { to.to_string() } else { r.clone() },
        ),
        Formula::Eq(a, b) => Formula::Eq(a.rename_set(from, to), b.rename_set(from, to)),
        Formula::Le(a, b) => Formula::Le(a.rename_set(from, to), b.rename_set(from, to)),
        Formula::ForallRel(r, _, _) | Formula::ExistsRel(r, _, _) if r == from => f.clone(),
        _ => rebuild(f, |c| rename_rel(c, from, to)),
    }
}

/// Applies `g` to the immediate subformulas.
pub fn rebuild(f: &Formula, mut g: impl FnMut(&Formula) -> Formula) -> Formula {
    match f {
        Formula::True
        | Formula::False
        | Formula::Mem(..)
        | Formula::Eq(..)
        | Formula::Le(..) => f.clone(),
        Formula::Not(a) => not(g(a)),
        Formula::And(a, b) => {
            let a = g(a);
            and(a, g(b))
        }
        Formula::Or(a, b) => {
            let a = g(a);
            or(a, g(b))
        }
        Formula::Implies(a, b) => {
            let a = g(a);
            implies(a, g(b))
        }
        Formula::Iff(a, b) => {
            let a = g(a);
            iff(a, g(b))
        }
        Formula::ForallObj(x, b) => forall(x, g(b)),
        Formula::ExistsObj(x, b) => exists(x, g(b)),
        Formula::ForallRel(r, n, b) => forall_rel(r, *n, g(b)),
        Formula::ExistsRel(r, n, b) => exists_rel(r, *n, g(b)),
    }
}

/// Simultaneous capture-avoiding substitution of terms for free object variables.
pub fn subst_objs(f: &Formula, map: &BTreeMap<String, Term>, fresh: &mut FreshNames) -> Formula {
    if map.is_empty() {
        return f.clone();
    }
    for t in map.values() {
        for v in term_obj_vars(t).into_iter().chain(term_set_vars(t)) {
            fresh.reserve(&v);
        }
    }
    go_objs(f, map, fresh)
}

fn go_objs(f: &Formula, map: &BTreeMap<String, Term>, fresh: &mut FreshNames) -> Formula {
    let sub = |t: &Term| t.map_vars(&|v| map.get(v).cloned().unwrap_or_else(|| var(v)));
    match f {
        Formula::Mem(ts, r) => Formula::Mem(ts.iter().map(sub).collect(), r.clone()),
        Formula::Eq(a, b) => Formula::Eq(sub(a), sub(b)),
        Formula::Le(a, b) => Formula::Le(sub(a), sub(b)),
        Formula::ForallObj(x, b) | Formula::ExistsObj(x, b) => {
            let is_forall = matches!(f, Formula::ForallObj(..));
            let mut inner = map.clone();
            inner.remove(x);
            let free = b.free_obj_vars();
            inner.retain(|k, _| free.contains(k));
            if inner.is_empty() {
                return f.clone();
            }
            let captured = inner.values().any(|t| term_obj_vars(t).contains(x));
            let (x2, body) = if captured {
                let y = fresh.fresh(x);
                let mut m = BTreeMap::new();
                m.insert(x.clone(), var(&y));
                (y, go_objs(b, &m, fresh))
            } else {
                (x.clone(), (**b).clone())
            };
            let body = go_objs(&body, &inner, fresh);
            if is_forall {
                forall(&x2, body)
            } else {
                exists(&x2, body)
            }
        }
        Formula::ForallRel(r, n, b) | Formula::ExistsRel(r, n, b) => {
            let is_forall = matches!(f, Formula::ForallRel(..));
            let captured = map.values().any(|t| term_set_vars(t).contains(r));
            let (r2, body) = if captured {
                let s = fresh.fresh(r);
                (s.clone(), rename_rel(b, r, &s))
            } else {
                (r.clone(), (**b).clone())
            };
            let body = go_objs(&body, map, fresh);
            if is_forall {
                forall_rel(&r2, *n, body)
            } else {
                exists_rel(&r2, *n, body)
            }
        }
        _ => rebuild(f, |c| go_objs(c, map, fresh)),
    }
}

pub fn subst_obj(f: &Formula, x: &str, t: &Term) -> Formula {
    let mut fresh = FreshNames::seeded(&[f]);
    let mut m = BTreeMap::new();
    m.insert(x.to_string(), t.clone());
    subst_objs(f, &m, &mut fresh)
}

/// A relation defined by `body` over the parameter variables `params`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelDef {
    pub params: Vec<String>,
    pub body: Formula,
}

/// Replaces every free atom `R(t1..tn)` by the definition instantiated at `t1..tn`.
pub fn expand_rel(f: &Formula, r: &str, def: &RelDef, fresh: &mut FreshNames) -> Formula {
    let def_free: BTreeSet<String> = def
        .body
        .free_obj_vars()
        .into_iter()
        .filter(|v| !def.params.contains(v))
        .chain(def.body.free_rel_vars().into_keys())
        .collect();
    for n in &def_free {
        fresh.reserve(n);
    }
    go_expand(f, r, def, &def_free, fresh)
}

fn go_expand(
    f: &Formula,
    r: &str,
    def: &RelDef,
    def_free: &BTreeSet<String>,
    fresh: &mut FreshNames,
) -> Formula {
    match f {
        Formula::Mem(ts, name) if name == r => {
            let map: BTreeMap<String, Term> =
                def.params.iter().cloned().zip(ts.iter().cloned()).collect();
            let mut local = fresh.clone();
            let out = subst_objs(&def.body, &map, &mut local);
            *fresh = local;
            out
        }
        Formula::ForallRel(s, _, _) | Formula::ExistsRel(s, _, _) if s == r => f.clone(),
        Formula::ForallObj(x, b) | Formula::ExistsObj(x, b) if def_free.contains(x) => {
            let y = fresh.fresh(x);
            let mut m = BTreeMap::new();
            m.insert(x.clone(), var(&y));
            let body = go_expand(&go_objs(b, &m, fresh), r, def, def_free, fresh);
            if matches!(f, Formula::ForallObj(..)) {
                forall(&y, body)
            } else {
                exists(&y, body)
            }
        }
        Formula::ForallRel(s, n, b) | Formula::ExistsRel(s, n, b) if def_free.contains(s) => {
            let t = fresh.fresh(s);
            let body = go_expand(&rename_rel(b, s, &t), r, def, def_free, fresh);
            if matches!(f, Formula::ForallRel(..)) {
                forall_rel(&t, *n, body)
            } else {
                exists_rel(&t, *n, body)
            }
        }
        _ => rebuild(f, |c| go_expand(c, r, def, def_free, fresh)),
    }
}

/// Renames every bound variable to a fresh name from `fresh`.
pub fn rename_bound(f: &Formula, fresh: &mut FreshNames) -> Formula {
    match f {
        Formula::ForallObj(x, b) | Formula::ExistsObj(x, b) => {
            let y = fresh.fresh(x);
            let mut m = BTreeMap::new();
            m.insert(x.clone(), var(&y));
            let body = rename_bound(&go_objs(b, &m, fresh), fresh);
            if matches!(f, Formula::ForallObj(..)) {
                forall(&y, body)
            } else {
                exists(&y, body)
            }
        }
        Formula::ForallRel(s, n, b) | Formula::ExistsRel(s, n, b) => {
            let t = fresh.fresh(s);
            let body = rename_bound(&rename_rel(b, s, &t), fresh);
            if matches!(f, Formula::ForallRel(..)) {
                forall_rel(&t, *n, body)
            } else {
                exists_rel(&t, *n, body)
            }
        }
        _ => rebuild(f, |c| rename_bound(c, fresh)),
    }
}

/// Equality up to consistent renaming of bound variables.
pub fn alpha_eq(f: &Formula, g: &Formula) -> bool {
    fn look<'a>(env: &'a [(String, String)], name: &str, left: bool) -> Option<&'a str> {
        env.iter()
            .rev()
            .find(|(a, b)| if left { a == name } else { b == name })
            .map(|(a, b)| if left { b.as_str() } else { a.as_str() })
    }
    fn same_name(env: &[(String, String)], a: &str, b: &str) -> bool {
        match (look(env, a, true), look(env, b, false)) {
            (Some(x), Some(y)) => x == b && y == a,
            (None, None) => a == b,
            _ => false,
        }
    }
    fn term_eq(s: &Term, t: &Term, oe: &[(String, String)], re: &[(String, String)]) -> bool {
        match (s, t) {
            (Term::Var(a), Term::Var(b)) => same_name(oe, a, b),
            (Term::Num(a), Term::Num(b)) => a == b,
            (Term::Const(a), Term::Const(b)) => a == b,
            (Term::Abs(o1, SetTerm::Var(a)), Term::Abs(o2, SetTerm::Var(b))) => {
                o1 == o2 && same_name(re, a, b)
            }
            (Term::Abs(o1, SetTerm::Empty), Term::Abs(o2, SetTerm::Empty)) => o1 == o2,
            (Term::Succ(a), Term::Succ(b)) | (Term::Neg(a), Term::Neg(b)) => {
                term_eq(a, b, oe, re)
            }
            (Term::Add(a, b), Term::Add(c, d)) | (Term::Mul(a, b), Term::Mul(c, d)) => {
                term_eq(a, c, oe, re) && term_eq(b, d, oe, re)
            }
            _ => false,
        }
    }
    fn go(f: &Formula, g: &Formula, oe: &mut Vec<(String, String)>, re: &mut Vec<(String, String)>) -> bool {
        let terms = |xs: &[Term], ys: &[Term], oe: &[(String, String)], re: &[(String, String)]| {
            xs.len() == ys.len() && xs.iter().zip(ys).all(|(a, b)| term_eq(a, b, oe, re))
        };
        match (f, g) {
            (Formula::True, Formula::True) | (Formula::False, Formula::False) => true,
            (Formula::Mem(a, r), Formula::Mem(b, s)) => same_name(re, r, s) && terms(a, b, oe, re),
            (Formula::Eq(a, b), Formula::Eq(c, d)) | (Formula::Le(a, b), Formula::Le(c, d)) => {
                term_eq(a, c, oe, re) && term_eq(b, d, oe, re)
            }
            (Formula::Not(a), Formula::Not(b)) => go(a, b, oe, re),
            (Formula::And(a, b), Formula::And(c, d))
            | (Formula::Or(a, b), Formula::Or(c, d))
            | (Formula::Implies(a, b), Formula::Implies(c, d))
            | (Formula::Iff(a, b), Formula::Iff(c, d)) => go(a, c, oe, re) && go(b, d, oe, re),
            (Formula::ForallObj(x, a), Formula::ForallObj(y, b))
            | (Formula::ExistsObj(x, a), Formula::ExistsObj(y, b)) => {
                oe.push((x.clone(), y.clone()));
                let r = go(a, b, oe, re);
                oe.pop();
                r
            }
            (Formula::ForallRel(x, n, a), Formula::ForallRel(y, m, b))
            | (Formula::ExistsRel(x, n, a), Formula::ExistsRel(y, m, b)) => {
                if n != m {
                    return false;
                }
                re.push((x.clone(), y.clone()));
                let r = go(a, b, oe, re);
                re.pop();
                r
            }
            _ => false,
        }
    }
    go(f, g, &mut Vec::new(), &mut Vec::new())
}

/// Negation normal form: negations only on atoms, no `->` or `<->`.
pub fn nnf(f: &Formula) -> Formula {
    match f {
        Formula::Not(a) => nnf_neg(a),
        Formula::Implies(a, b) => or(nnf_neg(a), nnf(b)),
        Formula::Iff(a, b) => and(or(nnf_neg(a), nnf(b)), or(nnf(a), nnf_neg(b))),
        _ => rebuild(f, nnf),
    }
}

fn nnf_neg(f: &Formula) -> Formula {
    match f {
        Formula::True => Formula::False,
        Formula::False => Formula::True,
        Formula::Mem(..) | Formula::Eq(..) | Formula::Le(..) => not(f.clone()),
        Formula::Not(a) => nnf(a),
        Formula::And(a, b) => or(nnf_neg(a), nnf_neg(b)),
        Formula::Or(a, b) => and(nnf_neg(a), nnf_neg(b)),
        Formula::Implies(a, b) => and(nnf(a), nnf_neg(b)),
        Formula::Iff(a, b) => or(and(nnf(a), nnf_neg(b)), and(nnf_neg(a), nnf(b))),
        Formula::ForallObj(x, b) => exists(x, nnf_neg(b)),
        Formula::ExistsObj(x, b) => forall(x, nnf_neg(b)),
        Formula::ForallRel(r, n, b) => exists_rel(r, *n, nnf_neg(b)),
        Formula::ExistsRel(r, n, b) => forall_rel(r, *n, nnf_neg(b)),
    }
}
