//! Seeded random inputs for the property suites and the CLI demos.

use crate::acf::{AcfSet, ThetaFamily};
use crate::eval::{FiniteStructure, Relation};
use crate::hmodel::{HSet, OrdElem};
use crate::logic::*;
use crate::poly::{q, qf, AlgReal, Poly, Q};
use crate::rcf::{RcfSet, RcfTheta};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub type Gen = ChaCha8Rng;

pub fn rng(seed: u64) -> Gen {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Relation-quantifier prefix for a level: alternating unary blocks of one
/// variable each, outermost first.
fn prefix(level: Level) -> Vec<(bool, String)> {
    let (n, mut universal) = match level {
        Level::Arithmetical => (0, false),
        Level::Sigma(n) => (n, false),
        Level::Pi(n) => (n, true),
    };
    let mut out = Vec::new();
    for i in 0..n {
        out.push((universal, ["X", "Y", "Z", "W"][i as usize % 4].to_string()));
        universal = !universal;
    }
    out
}

fn wrap(prefix: &[(bool, String)], matrix: Formula) -> Formula {
    prefix.iter().rev().fold(matrix, |body, (all, x)| {
        if *all {
            forall_rel(x, 1, body)
        } else {
            exists_rel(x, 1, body)
        }
    })
}

#[derive(Clone, Copy)]
enum Lang {
    /// Sets, equality and `#`.
    Hume,
    /// Sets, `0, s, +, *` and `<=`.
    Arith,
}

struct Matrix<'a> {
    rng: &'a mut Gen,
    lang: Lang,
    sets: Vec<String>,
}

impl Matrix<'_> {
    fn term(&mut self, objs: &[String]) -> Term {
        let x = var(objs.choose(self.rng).expect("an object variable is in scope"));
        match self.lang {
            Lang::Hume => match self.rng.gen_range(0..4) {
                0 if !self.sets.is_empty() => hash(self.sets.choose(self.rng).expect("nonempty")),
                1 => Term::Abs(AbsOp::Hash, SetTerm::Empty),
                _ => x,
            },
            Lang::Arith => {
                let y = var(objs.choose(self.rng).expect("nonempty"));
                match self.rng.gen_range(0..6) {
                    0 => Term::Num(0),
                    1 => succ(x),
                    2 => add(x, y),
                    3 => mul(x, y),
                    _ => x,
                }
            }
        }
    }

    fn atom(&mut self, objs: &[String]) -> Formula {
        let choice = self.rng.gen_range(0..3);
        if choice == 0 && !self.sets.is_empty() {
            let x = objs.choose(self.rng).expect("nonempty").clone();
            let s = self.sets.choose(self.rng).expect("nonempty").clone();
            return in_set(var(&x), &s);
        }
        let (a, b) = (self.term(objs), self.term(objs));
        match self.lang {
            Lang::Arith if choice == 1 => le(a, b),
            _ => eq(a, b),
        }
    }

    fn qf(&mut self, objs: &[String], depth: usize) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.3) {
            let a = self.atom(objs);
            return if self.rng.gen_bool(0.3) { not(a) } else { a };
        }
        let (a, b) = (self.qf(objs, depth - 1), self.qf(objs, depth - 1));
        match self.rng.gen_range(0..4) {
            0 => and(a, b),
            1 => or(a, b),
            2 => implies(a, b),
            _ => not(and(a, b)),
        }
    }

    /// One or two object quantifiers over a quantifier-free body.
    fn body(&mut self) -> Formula {
        let k = self.rng.gen_range(1..=2);
        let objs: Vec<String> = ["x", "y"][..k].iter().map(|s| s.to_string()).collect();
        let mut f = self.qf(&objs, 2);
        for x in objs.iter().rev() {
            f = if self.rng.gen_bool(0.5) { forall(x, f) } else { exists(x, f) };
        }
        f
    }
}

fn sentence_at(rng: &mut Gen, level: Level, lang: Lang) -> Formula {
    let pre = prefix(level);
    loop {
        let mut m = Matrix {
            rng,
            lang,
            sets: pre.iter().map(|(_, x)| x.clone()).collect(),
        };
        let f = wrap(&pre, m.body());
        if classify(&f) == level {
            return f;
        }
    }
}

/// A sentence with `#`, sets and equality classifying exactly at `level`.
pub fn hp_sentence(rng: &mut Gen, level: Level) -> Formula {
    sentence_at(rng, level, Lang::Hume)
}

/// A sentence of second-order arithmetic classifying exactly at `level`.
pub fn pa_sentence(rng: &mut Gen, level: Level) -> Formula {
    sentence_at(rng, level, Lang::Arith)
}

/// Full unary and binary families over `size` atoms, with a random total `#`
/// when `hash` is set.
pub fn structure(rng: &mut Gen, size: usize, hash: bool) -> FiniteStructure {
    let s = FiniteStructure::full(size).expect("small universe");
    if !hash || size == 0 {
        return s;
    }
    let pairs: Vec<(usize, usize)> = (0..s.sets().len()).map(|i| (i, rng.gen_range(0..size))).collect();
    s.with_abstraction(AbsOp::Hash, &pairs).expect("indices in range")
}

/// Full unary family over `size` atoms with a random injective partial
/// extension map.
pub fn ext_structure(rng: &mut Gen, size: usize) -> FiniteStructure {
    let mut fam = BTreeMap::new();
    fam.insert(1, crate::eval::full_family(size, 1).expect("small universe"));
    let s = FiniteStructure::new(size, fam);
    let mut sets: Vec<usize> = (0..s.sets().len()).collect();
    sets.shuffle(rng);
    let mut atoms: Vec<usize> = (0..size).collect();
    atoms.shuffle(rng);
    let k = rng.gen_range(0..=size);
    let pairs: Vec<(usize, usize)> = sets.into_iter().zip(atoms).take(k).collect();
    s.with_abstraction(AbsOp::Ext, &pairs).expect("injective by construction")
}

fn small_rational(rng: &mut Gen) -> Q {
    if rng.gen_bool(0.8) {
        q(rng.gen_range(-4..=4))
    } else {
        qf(rng.gen_range(-7..=7), 2)
    }
}

pub fn poly(rng: &mut Gen, max_deg: usize, coeff: i64) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    let cs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-coeff..=coeff)).collect();
    Poly::from_ints(&cs)
}

/// Finite or cofinite, over a base of rational points and possibly an
/// irreducible quadratic.
pub fn acf_set(rng: &mut Gen) -> AcfSet {
    let k = rng.gen_range(0..=3);
    let pts: Vec<Q> = (0..k).map(|_| small_rational(rng)).collect();
    let mut base = Poly::from_roots(&pts);
    if rng.gen_bool(0.3) {
        base = &base * &Poly::from_ints(&[rng.gen_range(1..=3), 0, 1]);
    }
    if rng.gen_bool(0.5) {
        AcfSet::roots(&base)
    } else {
        AcfSet::co_roots(&base)
    }
}

/// Random cells over up to four breakpoints, one of them `√2` at times.
pub fn rcf_set(rng: &mut Gen) -> RcfSet {
    let k = rng.gen_range(0..=4);
    let mut breaks: Vec<AlgReal> = (0..k).map(|_| AlgReal::from_rational(small_rational(rng))).collect();
    if rng.gen_bool(0.2) {
        let r = Poly::from_ints(&[-2, 0, 1]).real_roots().expect("nonzero");
        breaks.push(r[1].clone());
    }
    breaks.sort();
    breaks.dedup();
    let bits = (0..2 * breaks.len() + 1).map(|_| rng.gen_bool(0.5)).collect();
    RcfSet::from_pieces(breaks, bits)
}

fn pick<T: Clone>(rng: &mut Gen, xs: &[T]) -> T {
    xs.choose(rng).expect("nonempty").clone()
}

/// Descriptors `φ(x, y)` over `=` and membership in a quantified set.
pub fn finite_descriptors(rng: &mut Gen, k: usize) -> Vec<Formula> {
    let atoms = [
        "x = y",
        "x != y",
        "x = x",
        "x != x",
        "exists X. x in X and not y in X",
        "forall X. x in X -> y in X",
        "exists z. z != x and z != y",
    ];
    (0..k)
        .map(|_| {
            let a = parse_formula(&pick(rng, &atoms)).expect("fixed text");
            let b = parse_formula(&pick(rng, &atoms)).expect("fixed text");
            match rng.gen_range(0..4) {
                0 => a,
                1 => and(a, b),
                2 => or(a, b),
                _ => not(a),
            }
        })
        .collect()
}

fn field_atom(rng: &mut Gen, order: bool) -> String {
    let c = rng.gen_range(-2..=2);
    let templates: &[&str] = if order {
        &["x <= a", "x * x <= a + {c}", "a <= x", "x = a", "x * x = {c} + 2", "x + {c} <= 0"]
    } else {
        &["x = a", "x * x = a", "x = {c}", "x * x = {c} + 2", "x * a = 1"]
    };
    pick(rng, templates).replace("{c}", &c.to_string())
}

fn field_formula(rng: &mut Gen, order: bool) -> String {
    let a = field_atom(rng, order);
    let b = field_atom(rng, order);
    match rng.gen_range(0..4) {
        0 => a,
        1 => format!("({a}) or ({b})"),
        2 => format!("({a}) and not ({b})"),
        _ => format!("not ({a})"),
    }
}

pub fn acf_descriptors(rng: &mut Gen, k: usize) -> Vec<ThetaFamily> {
    (0..k)
        .map(|_| ThetaFamily::parse(&field_formula(rng, false)).expect("generated shape"))
        .collect()
}

pub fn rcf_descriptors(rng: &mut Gen, k: usize) -> Vec<RcfTheta> {
    (0..k)
        .map(|_| RcfTheta::parse(&field_formula(rng, true)).expect("generated shape"))
        .collect()
}

/// A random subset of `0..size` as a relation.
pub fn subset(rng: &mut Gen, size: usize) -> Relation {
    Relation::from_set(size, (0..size).filter(|_| rng.gen_bool(0.5)))
}

/// Finite or cofinite, exceptions among `Nat(0..4)` and `ω..ω+κ`.
pub fn hset(rng: &mut Gen, kappa: u32) -> HSet {
    let xs: Vec<OrdElem> = (0..4)
        .map(OrdElem::Nat)
        .chain((0..=kappa).map(OrdElem::OmegaPlus))
        .filter(|_| rng.gen_bool(0.3))
        .collect();
    if rng.gen_bool(0.5) {
        HSet::finite(xs)
    } else {
        HSet::cofinite(xs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_are_hit() {
        let mut r = rng(7);
        for level in [Level::Arithmetical, Level::Sigma(1), Level::Pi(1), Level::Pi(2)] {
            for _ in 0..10 {
                assert_eq!(classify(&hp_sentence(&mut r, level)), level);
                let f = pa_sentence(&mut r, level);
                assert_eq!(classify(&f), level);
                assert!(f.is_sentence());
            }
        }
    }

    #[test]
    fn seeded_is_deterministic() {
        let a = hp_sentence(&mut rng(3), Level::Pi(2));
        let b = hp_sentence(&mut rng(3), Level::Pi(2));
        assert_eq!(a, b);
        assert_eq!(acf_set(&mut rng(9)), acf_set(&mut rng(9)));
        assert_eq!(rcf_set(&mut rng(9)), rcf_set(&mut rng(9)));
    }

    #[test]
    fn ext_structures_are_injective() {
        let mut r = rng(1);
        for size in 0..=3 {
            assert!(ext_structure(&mut r, size).is_injective());
        }
    }
}
