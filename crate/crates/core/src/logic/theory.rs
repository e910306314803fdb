//! Named theories: a finite core of sentences plus the schemas that generate
//! the rest.

use super::ast::*;
use super::parse::parse_formula;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which abstraction principle (or none) a theory adds to second-order logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Base {
    CA,
    HP,
    BL,
}

/// Comprehension strength of a subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strength {
    Arithmetical,
    Delta11,
    Sigma11Choice,
    Pi1n(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoryId {
    PA2,
    HP2,
    BL2,
    Sub(Strength, Base),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Generator {
    /// Comprehension for every formula.
    Comprehension,
    /// Comprehension restricted to arithmetical formulas.
    ArithmeticalComprehension,
    Delta11Comprehension,
    Sigma11Choice,
    /// Comprehension restricted to Π¹ₙ formulas.
    Pi1nComprehension(u32),
}

#[derive(Debug, Clone, Serialize)]
pub struct Theory {
    pub id: TheoryId,
    pub axioms: Vec<(String, Formula)>,
    pub generators: Vec<Generator>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theory '{0}'")]
pub struct UnknownTheory(String);

impl Base {
    fn tag(self) -> &'static str {
        match self {
            Base::CA => "CA",
            Base::HP => "HP",
            Base::BL => "BL",
        }
    }

    /// Letters reversed, as used in the names of the choice subsystems.
    fn reversed_tag(self) -> &'static str {
        match self {
            Base::CA => "AC",
            Base::HP => "PH",
            Base::BL => "LB",
        }
    }
}

const BASES: [Base; 3] = [Base::CA, Base::HP, Base::BL];

impl FromStr for TheoryId {
    type Err = UnknownTheory;

    /// Accepts `PA2`, `HP2`, `BL2` and subsystem names such as `ACA0`, `AHP0`,
    /// `D11-BL0`, `S11-AC0`, `S11-LB0`, `Pi12-HP0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "PA2" => return Ok(TheoryId::PA2),
            "HP2" => return Ok(TheoryId::HP2),
            "BL2" => return Ok(TheoryId::BL2),
            _ => {}
        }
        for b in BASES {
            let t = b.tag();
            if s == format!("A{t}0") {
                return Ok(TheoryId::Sub(Strength::Arithmetical, b));
            }
            if s == format!("D11-{t}0") {
                return Ok(TheoryId::Sub(Strength::Delta11, b));
            }
            if s == format!("S11-{}0", b.reversed_tag()) {
                return Ok(TheoryId::Sub(Strength::Sigma11Choice, b));
            }
            let n = s.strip_prefix("Pi1").and_then(|r| r.strip_suffix(&format!("-{t}0")));
            if let Some(Ok(n)) = n.map(str::parse::<u32>) {
                if n >= 1 {
                    return Ok(TheoryId::Sub(Strength::Pi1n(n), b));
                }
            }
        }
        Err(UnknownTheory(s.to_string()))
    }
}

impl fmt::Display for TheoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryId::PA2 => write!(f, "PA2"),
            TheoryId::HP2 => write!(f, "HP2"),
            TheoryId::BL2 => write!(f, "BL2"),
            TheoryId::Sub(Strength::Arithmetical, b) => write!(f, "A{}0", b.tag()),
            TheoryId::Sub(Strength::Delta11, b) => write!(f, "D11-{}0", b.tag()),
            TheoryId::Sub(Strength::Sigma11Choice, b) => write!(f, "S11-{}0", b.reversed_tag()),
            TheoryId::Sub(Strength::Pi1n(n), b) => write!(f, "Pi1{n}-{}0", b.tag()),
        }
    }
}

fn named(name: &str, src: &str) -> (String, Formula) {
    (name.to_string(), parse_formula(src).expect("built-in axiom parses"))
}

/// Robinson's Q in the language with 0, s, +, * and <=.
pub fn q_axioms() -> Vec<(String, Formula)> {
    vec![
        named("Q1", "forall x. s(x) != 0"),
        named("Q2", "forall x. forall y. s(x) = s(y) -> x = y"),
        named("Q3", "forall x. x = 0 or (exists y. x = s(y))"),
        named("Q4", "forall x. x + 0 = x"),
        named("Q5", "forall x. forall y. x + s(y) = s(x + y)"),
        named("Q6", "forall x. x * 0 = 0"),
        named("Q7", "forall x. forall y. x * s(y) = x * y + x"),
        named("Q8", "forall x. forall y. x <= y <-> (exists z. z + x = y)"),
    ]
}

pub fn induction() -> Formula {
    parse_formula("forall X. (0 in X and (forall x. x in X -> s(x) in X)) -> (forall x. x in X)")
        .expect("built-in axiom parses")
}

pub fn hume_principle() -> Formula {
    parse_formula("forall X. forall Y. #X = #Y <-> exists2 f. bijection(f, X, Y)")
        .expect("built-in axiom parses")
}

pub fn basic_law_v() -> Formula {
    parse_formula("forall X. forall Y. ext(X) = ext(Y) <-> (forall x. x in X <-> x in Y)")
        .expect("built-in axiom parses")
}

/// `S(x, y) ↔ y = ext({x})`.
fn singleton_successor(s: &str, x: &str, y: &str) -> Formula {
    let singleton = exists_rel(
        "X",
        1,
        and(
            forall("z", iff(in_set(var("z"), "X"), eq(var("z"), var(x)))),
            eq(ext("X"), var(y)),
        ),
    );
    iff(mem(vec![var(x), var(y)], s), singleton)
}

/// Robinson's Q relativized to `N`, with `s`, `⊕`, `⊗`, `≤` given as graphs.
fn q_on_graphs(n: &str, zero: &Term, s: &str, plus: &str, times: &str, leq: &str) -> Formula {
    let inn = |t: &str| in_set(var(t), n);
    let g2 = |r: &str, a: &str, b: &str| mem(vec![var(a), var(b)], r);
    let g3 = |r: &str, a: &str, b: &str, c: &str| mem(vec![var(a), var(b), var(c)], r);
    let all = |xs: &[&str], body: Formula| {
        xs.iter().rev().fold(body, |b, x| forall(x, implies(inn(x), b)))
    };
    let some = |xs: &[&str], body: Formula| {
        xs.iter().rev().fold(body, |b, x| exists(x, and(inn(x), b)))
    };
    let is_zero = |t: &str| eq(var(t), zero.clone());
    let totals = conj(vec![
        all(&["a", "b"], some(&["c"], g3(plus, "a", "b", "c"))),
        all(&["a", "b", "c", "d"], implies(and(g3(plus, "a", "b", "c"), g3(plus, "a", "b", "d")), eq(var("c"), var("d")))),
        all(&["a", "b"], some(&["c"], g3(times, "a", "b", "c"))),
        all(&["a", "b", "c", "d"], implies(and(g3(times, "a", "b", "c"), g3(times, "a", "b", "d")), eq(var("c"), var("d")))),
    ]);
    let q = conj(vec![
        all(&["a", "b"], implies(g2(s, "a", "b"), not(is_zero("b")))),
        all(&["a", "b", "c"], implies(and(g2(s, "a", "c"), g2(s, "b", "c")), eq(var("a"), var("b")))),
        all(&["a"], or(is_zero("a"), some(&["b"], g2(s, "b", "a")))),
        all(&["a", "z"], implies(is_zero("z"), g3(plus, "a", "z", "a"))),
        all(&["a", "b", "c", "d", "e"], implies(conj(vec![g2(s, "b", "c"), g3(plus, "a", "b", "d"), g2(s, "d", "e")]), g3(plus, "a", "c", "e"))),
        all(&["a", "z"], implies(is_zero("z"), g3(times, "a", "z", "z"))),
        all(&["a", "b", "c", "d", "e"], implies(conj(vec![g2(s, "b", "c"), g3(times, "a", "b", "d"), g3(plus, "d", "a", "e")]), g3(times, "a", "c", "e"))),
        all(&["a", "b"], iff(g2(leq, "a", "b"), some(&["c"], g3(plus, "c", "a", "b")))),
    ]);
    and(totals, q)
}

/// There is a least set containing `ext({})` and closed under `x ↦ ext({x})`,
/// carrying addition, multiplication and order that satisfy Robinson's Q.
pub fn inf_sentence() -> Formula {
    let zero = Term::Abs(AbsOp::Ext, SetTerm::Empty);
    let s_total = forall(
        "x",
        forall("y", singleton_successor("S", "x", "y")),
    );
    let closed = |n: &str| {
        and(
            in_set(zero.clone(), n),
            forall(
                "x",
                implies(
                    in_set(var("x"), n),
                    forall(
                        "y",
                        implies(mem(vec![var("x"), var("y")], "S"), in_set(var("y"), n)),
                    ),
                ),
            ),
        )
    };
    let subset = forall("x", implies(in_set(var("x"), "N"), in_set(var("x"), "M")));
    let least = forall_rel("M", 1, implies(closed("M"), subset));
    let arithmetic = exists_rel(
        "P",
        3,
        exists_rel(
            "T",
            3,
            exists_rel("L", 2, q_on_graphs("N", &zero, "S", "P", "T", "L")),
        ),
    );
    exists_rel(
        "S",
        2,
        and(
            s_total,
            exists_rel("N", 1, conj(vec![closed("N"), least, arithmetic])),
        ),
    )
}

/// `P(n, m)`: some `X`, `Y` with `#X = n`, `#Y = m` and `X = Y - {y}` for a `y ∈ Y`.
pub fn successor_relation(n: &Term, m: &Term) -> Formula {
    let body = parse_formula(
        "exists X. exists Y. #X = n and #Y = m and (exists y. y in Y and (forall z. z in X <-> (z in Y and z != y)))",
    )
    .expect("built-in formula parses");
    let mut map = std::collections::BTreeMap::new();
    map.insert("n".to_string(), n.clone());
    map.insert("m".to_string(), m.clone());
    let mut fresh = FreshNames::seeded(&[&body]);
    super::subst::subst_objs(&body, &map, &mut fresh)
}

/// Every pseudo-number has a `P`-successor.
pub fn sa_sentence() -> Formula {
    let p = |a: &str, b: &str| successor_relation(&var(a), &var(b));
    let zero = Term::Abs(AbsOp::Hash, SetTerm::Empty);
    let hereditary = forall(
        "a",
        forall("b", implies(and(in_set(var("a"), "F"), p("a", "b")), in_set(var("b"), "F"))),
    );
    let closed = forall(
        "b",
        implies(successor_relation(&zero, &var("b")), in_set(var("b"), "F")),
    );
    let pseudo = or(
        eq(var("n"), zero.clone()),
        forall_rel("F", 1, implies(and(hereditary, closed), in_set(var("n"), "F"))),
    );
    forall("n", implies(pseudo, exists("k", p("n", "k"))))
}

pub fn theory_axioms(id: TheoryId) -> Theory {
    let mut axioms = Vec::new();
    let mut generators = Vec::new();
    let base = match id {
        TheoryId::PA2 => {
            axioms.extend(q_axioms());
            axioms.push(("Induction".to_string(), induction()));
            generators.push(Generator::Comprehension);
            None
        }
        TheoryId::HP2 => {
            generators.push(Generator::Comprehension);
            Some(Base::HP)
        }
        TheoryId::BL2 => {
            generators.push(Generator::Comprehension);
            Some(Base::BL)
        }
        TheoryId::Sub(strength, base) => {
            match strength {
                Strength::Arithmetical => generators.push(Generator::ArithmeticalComprehension),
                Strength::Delta11 => generators.push(Generator::Delta11Comprehension),
                Strength::Sigma11Choice => generators.extend([
                    Generator::ArithmeticalComprehension,
                    Generator::Sigma11Choice,
                ]),
                Strength::Pi1n(n) => generators.push(Generator::Pi1nComprehension(n)),
            }
            if base == Base::CA {
                axioms.extend(q_axioms());
                axioms.push(("Induction".to_string(), induction()));
            }
            Some(base)
        }
    };
    match base {
        Some(Base::HP) => axioms.push(("HP".to_string(), hume_principle())),
        Some(Base::BL) => axioms.push(("BLV".to_string(), basic_law_v())),
        _ => {}
    }
    Theory {
        id,
        axioms,
        generators,
    }
}
