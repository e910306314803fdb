//! Cardinality abstraction inside arithmetic: `#X` is `|X| + 1` for finite
//! `X` and `0` otherwise.
//!
//! Two encodings of `card(X, n)`. The arithmetic one codes an enumeration of
//! `X` by a Gödel beta sequence and is meant for the standard numbers. The
//! bounded one spells out `|X| = k` for each `k ≤ bound` with distinct
//! witnesses and is what a finite structure can evaluate.

use crate::eval::{full_family, FiniteStructure, Relation, StructureError};
use crate::logic::*;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CardEncoding {
    /// Number-coded sequences over `0, s, +, *`.
    Arithmetic,
    /// `|X| = k` spelled out for `k ≤ bound`; `infinite(X)` is false on sets
    /// of at most `bound` elements.
    Bounded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoolosError {
    #[error("ext terms have no Boolos reading: {0}")]
    ExtensionTerm(String),
}

pub fn boolos_translate(f: &Formula) -> Result<Formula, BoolosError> {
    boolos_translate_with(f, CardEncoding::Arithmetic)
}

pub fn boolos_translate_with(f: &Formula, enc: CardEncoding) -> Result<Formula, BoolosError> {
    if f.uses_op(AbsOp::Ext) {
        let mut ts = Vec::new();
        collect_ext(f, &mut ts);
        return Err(BoolosError::ExtensionTerm(ts.first().cloned().unwrap_or_default()));
    }
    let mut b = Builder {
        fresh: FreshNames::seeded(&[f]),
        enc,
    };
    Ok(b.formula(f))
}

/// Universe `{0, …, m+1}` read as numbers, `S₁` and `S₂` all subsets of
/// `{0, …, m-1}` and its square, and `#X = |X| + 1`, which always lands in
/// the universe.
pub fn boolos_image(m: usize) -> Result<FiniteStructure, StructureError> {
    let size = m + 2;
    let embed = |rs: Vec<Relation>, arity: usize| -> Vec<Relation> {
        rs.iter()
            .map(|r| {
                let tuples = r.tuples();
                Relation::from_tuples(size, arity, tuples.iter().map(Vec::as_slice))
            })
            .collect()
    };
    let sets = embed(full_family(m, 1)?, 1);
    let pairs: Vec<(usize, usize)> = sets.iter().enumerate().map(|(i, x)| (i, x.len() + 1)).collect();
    let mut fam = BTreeMap::new();
    fam.insert(1, sets);
    fam.insert(2, embed(full_family(m, 2)?, 2));
    FiniteStructure::new(size, fam).with_abstraction(AbsOp::Hash, &pairs)
}

/// The bounded encoding suited to [`boolos_image`]`(m)`.
pub fn image_encoding(m: usize) -> CardEncoding {
    CardEncoding::Bounded(m as u64)
}

fn collect_ext(f: &Formula, out: &mut Vec<String>) {
    for t in f.terms() {
        if let Some(e) = find_abs(t).filter(|e| matches!(e, Term::Abs(AbsOp::Ext, _))) {
            out.push(print_term(&e));
        }
    }
    for c in f.children() {
        collect_ext(c, out);
    }
}

fn find_abs(t: &Term) -> Option<Term> {
    match t {
        Term::Abs(..) => Some(t.clone()),
        Term::Succ(a) | Term::Neg(a) => find_abs(a),
        Term::Add(a, b) | Term::Mul(a, b) => find_abs(a).or_else(|| find_abs(b)),
        Term::Var(_) | Term::Num(_) | Term::Const(_) => None,
    }
}

fn replace_first(t: &Term, target: &Term, by: &Term, done: &mut bool) -> Term {
    if *done {
        return t.clone();
    }
    if t == target {
        *done = true;
        return by.clone();
    }
    match t {
        Term::Succ(a) => succ(replace_first(a, target, by, done)),
        Term::Neg(a) => Term::Neg(Box::new(replace_first(a, target, by, done))),
        Term::Add(a, b) => {
            let a = replace_first(a, target, by, done);
            add(a, replace_first(b, target, by, done))
        }
        Term::Mul(a, b) => {
            let a = replace_first(a, target, by, done);
            mul(a, replace_first(b, target, by, done))
        }
        _ => t.clone(),
    }
}

fn lt(a: Term, b: Term) -> Formula {
    le(succ(a), b)
}

struct Builder {
    fresh: FreshNames,
    enc: CardEncoding,
}

impl Builder {
    fn formula(&mut self, f: &Formula) -> Formula {
        use Formula::*;
        match f {
            True | False => f.clone(),
            Mem(..) | Eq(..) | Le(..) => self.atom(f),
            Not(a) => not(self.formula(a)),
            And(a, b) => and(self.formula(a), self.formula(b)),
            Or(a, b) => or(self.formula(a), self.formula(b)),
            Implies(a, b) => implies(self.formula(a), self.formula(b)),
            Iff(a, b) => iff(self.formula(a), self.formula(b)),
            ForallObj(x, b) => forall(x, self.formula(b)),
            ExistsObj(x, b) => exists(x, self.formula(b)),
            ForallRel(r, n, b) => forall_rel(r, *n, self.formula(b)),
            ExistsRel(r, n, b) => exists_rel(r, *n, self.formula(b)),
        }
    }

    fn atom(&mut self, f: &Formula) -> Formula {
        let Some(target) = f.terms().into_iter().find_map(find_abs) else {
            return f.clone();
        };
        let Term::Abs(_, set) = &target else { unreachable!("find_abs returns abstractions") };
        let set = &set.clone();
        // `#X = t` with `t` free of abstraction is rewritten in place.
        if let Formula::Eq(a, b) = f {
            for (h, t) in [(a, b), (b, a)] {
                if *h == target && find_abs(t).is_none() {
                    return self.number_of(set, t.clone());
                }
            }
        }
        let c = self.fresh.fresh("c");
        let mut done = false;
        let replaced = match f {
            Formula::Eq(a, b) => {
                let a = replace_first(a, &target, &var(&c), &mut done);
                eq(a, replace_first(b, &target, &var(&c), &mut done))
            }
            Formula::Le(a, b) => {
                let a = replace_first(a, &target, &var(&c), &mut done);
                le(a, replace_first(b, &target, &var(&c), &mut done))
            }
            Formula::Mem(ts, r) => Formula::Mem(
                ts.iter().map(|t| replace_first(t, &target, &var(&c), &mut done)).collect(),
                r.clone(),
            ),
            _ => unreachable!("atoms only"),
        };
        let rest = self.atom(&replaced);
        exists(&c, and(self.number_of(set, var(&c)), rest))
    }

    /// `[∃n card(X,n) ∧ t = n+1] ∨ [infinite(X) ∧ t = 0]`.
    fn number_of(&mut self, set: &SetTerm, t: Term) -> Formula {
        let x = match set {
            SetTerm::Var(x) => x.clone(),
            SetTerm::Empty => return eq(t, succ(Term::Num(0))),
        };
        let n = self.fresh.fresh("n");
        let finite = exists(&n, and(self.card(&x, &var(&n)), eq(t.clone(), succ(var(&n)))));
        or(finite, and(self.infinite(&x), eq(t, Term::Num(0))))
    }

    fn card(&mut self, x: &str, n: &Term) -> Formula {
        match self.enc {
            CardEncoding::Arithmetic => self.card_beta(x, n),
            CardEncoding::Bounded(k) => disj(
                (0..=k).map(|j| and(eq(n.clone(), numeral(j)), self.exactly(x, j))).collect(),
            ),
        }
    }

    fn infinite(&mut self, x: &str) -> Formula {
        match self.enc {
            CardEncoding::Arithmetic => {
                let m = self.fresh.fresh("m");
                let v = self.fresh.fresh("v");
                forall(&m, exists(&v, and(in_set(var(&v), x), le(var(&m), var(&v)))))
            }
            CardEncoding::Bounded(k) => not(disj((0..=k).map(|j| self.exactly(x, j)).collect())),
        }
    }

    /// Some `k` distinct members and nothing else.
    fn exactly(&mut self, x: &str, k: u64) -> Formula {
        let ws: Vec<String> = (0..k).map(|_| self.fresh.fresh("w")).collect();
        let v = self.fresh.fresh("v");
        let mut parts: Vec<Formula> = ws.iter().map(|w| in_set(var(w), x)).collect();
        for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                parts.push(not(eq(var(&ws[i]), var(&ws[j]))));
            }
        }
        let only = disj(ws.iter().map(|w| eq(var(&v), var(w))).collect());
        parts.push(forall(&v, implies(in_set(var(&v), x), only)));
        exists_many(&ws, conj(parts))
    }

    /// `β(c, d, i) = v`, i.e. `v = c mod (1 + (i+1)d)`.
    fn beta(&mut self, c: &str, d: &str, i: &Term, v: &Term) -> Formula {
        let q = self.fresh.fresh("q");
        let modulus = succ(mul(succ(i.clone()), var(d)));
        exists(
            &q,
            and(
                eq(var(c), add(mul(var(&q), modulus.clone()), v.clone())),
                lt(v.clone(), modulus),
            ),
        )
    }

    /// `β(c, d, ·)` enumerates `X` without repetition in `n` steps.
    fn card_beta(&mut self, x: &str, n: &Term) -> Formula {
        let [c, d, i, j, v] = ["c", "d", "i", "j", "v"].map(|b| self.fresh.fresh(b));
        let (vi, vj, vv) = (var(&i), var(&j), var(&v));
        let into = forall(
            &i,
            implies(
                lt(vi.clone(), n.clone()),
                exists(&v, and(self.beta(&c, &d, &vi, &vv), in_set(vv.clone(), x))),
            ),
        );
        let beta_i = self.beta(&c, &d, &vi, &vv);
        let beta_j = self.beta(&c, &d, &vj, &vv);
        let injective = forall_many(
            &[i.clone(), j.clone(), v.clone()],
            implies(
                conj(vec![lt(vi.clone(), n.clone()), lt(vj.clone(), n.clone()), beta_i, beta_j]),
                eq(vi.clone(), vj.clone()),
            ),
        );
        let beta_i = self.beta(&c, &d, &vi, &vv);
        let onto = forall(
            &v,
            implies(in_set(vv.clone(), x), exists(&i, and(lt(vi, n.clone()), beta_i))),
        );
        exists(&c, exists(&d, conj(vec![into, injective, onto])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(src: &str) -> Formula {
        boolos_translate(&parse_formula(src).unwrap()).unwrap()
    }

    #[test]
    fn hash_equation_becomes_the_disjunction() {
        let f = tr("#X = y");
        let Formula::Or(fin, inf) = &f else { panic!("{f}") };
        let Formula::ExistsObj(n, body) = fin.as_ref() else { panic!() };
        let Formula::And(_, last) = body.as_ref() else { panic!() };
        assert_eq!(**last, eq(var("y"), succ(var(n))));
        let Formula::And(_, zero) = inf.as_ref() else { panic!() };
        assert_eq!(**zero, eq(var("y"), Term::Num(0)));
        assert_eq!(classify(&f), Level::Arithmetical);
        assert!(!f.has_abstraction());
    }

    #[test]
    fn no_hash_is_unchanged() {
        let f = parse_formula("forall X. exists x. x in X or x = y").unwrap();
        assert_eq!(boolos_translate(&f).unwrap(), f);
    }

    #[test]
    fn hume_keeps_its_level() {
        let hp = theory::hume_principle();
        let t = boolos_translate(&hp).unwrap();
        assert_eq!(classify(&t), classify(&hp));
        assert!(!t.has_abstraction());
        let b = boolos_translate_with(&hp, CardEncoding::Bounded(3)).unwrap();
        assert_eq!(classify(&b), classify(&hp));
    }

    #[test]
    fn ext_is_rejected() {
        assert_eq!(
            boolos_translate(&parse_formula("ext(X) = y").unwrap()),
            Err(BoolosError::ExtensionTerm("ext(X)".into()))
        );
    }

    #[test]
    fn image_agrees_on_samples() {
        use crate::eval::{eval, eval_arithmetic, Env};
        for m in 0..=3 {
            let s = boolos_image(m).unwrap();
            for src in [
                "forall X. exists y. #X = y",
                "forall X. forall Y. #X = #Y <-> (forall x. x in X <-> x in Y)",
                "exists X. exists Y. #X = #Y and not (forall x. x in X <-> x in Y)",
                "forall X. #X != #{} or (forall x. not x in X)",
                "exists X. exists x. x in X and #X = x",
            ] {
                let f = parse_formula(src).unwrap();
                let t = boolos_translate_with(&f, image_encoding(m)).unwrap();
                assert_eq!(
                    eval(&s, &f, &Env::new()).unwrap(),
                    eval_arithmetic(&s, &t, &Env::new()).unwrap(),
                    "m={m} {src}"
                );
            }
        }
    }

    #[test]
    fn nested_and_empty_abstractions() {
        let f = tr("R(#X, #{})");
        assert!(!f.has_abstraction());
        assert!(matches!(f, Formula::ExistsObj(..)));
    }
}
