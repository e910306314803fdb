//! Arithmetic inside the abstraction language: numbers are cardinals, `N` is
//! the least set holding `Zero` and closed under `SuccRel`, and the graphs of
//! `+` and `*` are unions of their initial segments.

use crate::logic::subst::{expand_rel, RelDef};
use crate::logic::*;
use serde::Serialize;

pub const ZERO: &str = "Zero";
pub const SUCC_REL: &str = "SuccRel";
pub const NAT: &str = "N";
pub const PLUS_GRAPH: &str = "PlusGraph";
pub const TIMES_GRAPH: &str = "TimesGraph";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DefBody {
    #[serde(serialize_with = "ser_term")]
    Term(Term),
    #[serde(serialize_with = "ser_formula")]
    Formula(Formula),
}

fn ser_term<S: serde::Serializer>(t: &Term, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&print_term(t))
}

fn ser_formula<S: serde::Serializer>(f: &Formula, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&print_formula(f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Definition {
    pub name: String,
    pub params: Vec<String>,
    pub body: DefBody,
}

/// `translated` mentions the defined symbols only through `definitions`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FregeTranslation {
    #[serde(serialize_with = "ser_formula")]
    pub translated: Formula,
    pub definitions: Vec<Definition>,
}

fn p(src: &str) -> Formula {
    parse_formula(src).expect("built-in definition parses")
}

fn formula_def(name: &str, params: &[&str], src: &str) -> Definition {
    Definition {
        name: name.to_string(),
        params: params.iter().map(|s| s.to_string()).collect(),
        body: DefBody::Formula(p(src)),
    }
}

/// In dependency order: each body only mentions symbols defined before it.
pub fn frege_definitions() -> Vec<Definition> {
    let graph = |name: &str, base: &str, step: &str| {
        let src = format!(
            "exists G:3. G(x, y, z) \
             and (forall a. forall b. forall c. G(a, b, c) -> (N(a) and N(b) and N(c))) \
             and (forall a. forall b. forall c. forall d. (G(a, b, c) and G(a, b, d)) -> c = d) \
             and G(x, Zero, {base}) \
             and (forall v. forall t. forall r. (G(x, t, r) and SuccRel(v, t)) -> (exists w. {step} and G(x, v, w)))"
        );
        formula_def(name, &["x", "y", "z"], &src)
    };
    vec![
        Definition {
            name: ZERO.into(),
            params: vec![],
            body: DefBody::Term(Term::Abs(AbsOp::Hash, SetTerm::Empty)),
        },
        formula_def(
            SUCC_REL,
            &["x", "y"],
            "exists X. exists Y. #X = x and #Y = y and (exists b. b in Y and \
             (exists Z. (forall v. v in Z <-> (v in Y and v != b)) and #X = #Z))",
        ),
        formula_def(
            NAT,
            &["x"],
            "forall X. (Zero in X and (forall y. forall z. (y in X and SuccRel(y, z)) -> z in X)) -> x in X",
        ),
        graph(PLUS_GRAPH, "x", "SuccRel(w, r)"),
        graph(TIMES_GRAPH, "Zero", "PlusGraph(w, x, r)"),
    ]
}

struct Translator {
    fresh: FreshNames,
}

impl Translator {
    /// A variable or `Zero` naming the value of `t`, with the graph facts
    /// that pin down the fresh names introduced on the way.
    fn simple(&mut self, t: &Term, facts: &mut Vec<Formula>, vars: &mut Vec<String>) -> Term {
        match t {
            Term::Num(0) => Term::Const(ZERO.into()),
            Term::Num(k) => {
                let inner = self.simple(&Term::Num(k - 1), facts, vars);
                self.fact(SUCC_REL, vec![inner], facts, vars)
            }
            Term::Succ(a) => {
                let a = self.simple(a, facts, vars);
                self.fact(SUCC_REL, vec![a], facts, vars)
            }
            Term::Add(a, b) | Term::Mul(a, b) => {
                let rel = if matches!(t, Term::Add(..)) { PLUS_GRAPH } else { TIMES_GRAPH };
                let a = self.simple(a, facts, vars);
                let b = self.simple(b, facts, vars);
                self.fact(rel, vec![a, b], facts, vars)
            }
            Term::Var(_) | Term::Const(_) | Term::Abs(..) | Term::Neg(_) => t.clone(),
        }
    }

    fn fact(&mut self, rel: &str, mut args: Vec<Term>, facts: &mut Vec<Formula>, vars: &mut Vec<String>) -> Term {
        let v = self.fresh.fresh("v");
        args.push(var(&v));
        facts.push(mem(args, rel));
        vars.push(v.clone());
        var(&v)
    }

    /// `t = u` with the outermost operation of a compound side read as a
    /// graph atom, so `s(x) = 0` becomes `SuccRel(x, Zero)`.
    fn equation(&mut self, t: &Term, u: &Term, facts: &mut Vec<Formula>, vars: &mut Vec<String>) -> Formula {
        let (t, u) = if is_compound(t) || !is_compound(u) { (t, u) } else { (u, t) };
        let rhs = self.simple(u, facts, vars);
        match t {
            Term::Succ(a) => {
                let a = self.simple(a, facts, vars);
                mem(vec![a, rhs], SUCC_REL)
            }
            Term::Num(k) if *k > 0 => {
                let a = self.simple(&Term::Num(k - 1), facts, vars);
                mem(vec![a, rhs], SUCC_REL)
            }
            Term::Add(a, b) | Term::Mul(a, b) => {
                let rel = if matches!(t, Term::Add(..)) { PLUS_GRAPH } else { TIMES_GRAPH };
                let a = self.simple(a, facts, vars);
                let b = self.simple(b, facts, vars);
                mem(vec![a, b, rhs], rel)
            }
            _ => {
                let lhs = self.simple(t, facts, vars);
                eq(lhs, rhs)
            }
        }
    }

    fn atom(&mut self, f: &Formula) -> Formula {
        let mut facts = Vec::new();
        let mut vars = Vec::new();
        let core = match f {
            Formula::Eq(a, b) => self.equation(a, b, &mut facts, &mut vars),
            // x <= y iff some z has z + x = y
            Formula::Le(a, b) => {
                let z = self.fresh.fresh("z");
                let a = self.simple(a, &mut facts, &mut vars);
                let b = self.simple(b, &mut facts, &mut vars);
                exists(&z, and(in_nat(var(&z)), mem(vec![var(&z), a, b], PLUS_GRAPH)))
            }
            Formula::Mem(ts, r) => {
                let ts = ts.iter().map(|t| self.simple(t, &mut facts, &mut vars)).collect();
                Formula::Mem(ts, r.clone())
            }
            other => return other.clone(),
        };
        facts.push(core);
        exists_many(&vars, conj(facts))
    }

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
            ForallObj(x, b) => forall(x, implies(in_nat(var(x)), self.formula(b))),
            ExistsObj(x, b) => exists(x, and(in_nat(var(x)), self.formula(b))),
            ForallRel(r, n, b) => forall_rel(r, *n, self.formula(b)),
            ExistsRel(r, n, b) => exists_rel(r, *n, self.formula(b)),
        }
    }
}

fn is_compound(t: &Term) -> bool {
    matches!(t, Term::Succ(_) | Term::Add(..) | Term::Mul(..)) || matches!(t, Term::Num(k) if *k > 0)
}

fn in_nat(t: Term) -> Formula {
    mem(vec![t], NAT)
}

pub fn frege_translate(f: &Formula) -> FregeTranslation {
    let mut fresh = FreshNames::seeded(&[f]);
    for name in [ZERO, SUCC_REL, NAT, PLUS_GRAPH, TIMES_GRAPH] {
        fresh.reserve(name);
    }
    let mut tr = Translator { fresh };
    FregeTranslation {
        translated: tr.formula(f),
        definitions: frege_definitions(),
    }
}

/// Expands every defined symbol, last definition first, then replaces
/// `Zero` by `#{}`.
pub fn flatten(t: &FregeTranslation) -> Formula {
    let mut fresh = FreshNames::seeded(&[&t.translated]);
    let mut out = t.translated.clone();
    for d in t.definitions.iter().rev() {
        match &d.body {
            DefBody::Formula(body) => {
                let def = RelDef {
                    params: d.params.clone(),
                    body: body.clone(),
                };
                out = expand_rel(&out, &d.name, &def, &mut fresh);
            }
            DefBody::Term(value) => {
                out = out.map_terms(&|term: &Term| {
                    term.rewrite(&|u| match u {
                        Term::Const(c) if c == d.name => value.clone(),
                        other => other,
                    })
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(src: &str) -> FregeTranslation {
        frege_translate(&parse_formula(src).unwrap())
    }

    #[test]
    fn q1_translates_to_negated_successor() {
        let t = tr("forall x. s(x) != 0");
        assert_eq!(print_formula(&t.translated), "forall x. x in N -> not SuccRel(x, Zero)");
        assert_eq!(t.definitions.len(), 5);
    }

    #[test]
    fn zero_equation_flattens_to_empty_numbers() {
        let t = tr("0 = 0");
        assert_eq!(print_formula(&t.translated), "Zero = Zero");
        let f = flatten(&t);
        assert_eq!(print_formula(&f), "#{} = #{}");
        assert_eq!(classify(&f), Level::Arithmetical);
    }

    #[test]
    fn addition_becomes_graph_membership() {
        let t = tr("x + 0 = x");
        assert_eq!(print_formula(&t.translated), "PlusGraph(x, Zero, x)");
        let t = tr("x + s(y) = s(x + y)");
        let text = print_formula(&t.translated);
        assert!(text.starts_with("exists v. exists v1. exists v2. "), "{text}");
        assert!(text.ends_with("SuccRel(y, v2)) and PlusGraph(x, v2, v1)"), "{text}");
    }

    #[test]
    fn order_goes_through_q8() {
        let t = tr("x <= y");
        assert_eq!(print_formula(&t.translated), "exists z. z in N and PlusGraph(z, x, y)");
    }

    #[test]
    fn flatten_removes_defined_symbols() {
        let f = flatten(&tr("forall x. forall y. x * s(y) = x * y + x"));
        let mut names = std::collections::BTreeSet::new();
        f.collect_names(&mut names);
        for d in [ZERO, SUCC_REL, NAT, PLUS_GRAPH, TIMES_GRAPH] {
            assert!(!names.contains(d), "{d} survives");
        }
        assert!(f.free_rel_vars().is_empty());
        assert!(f.is_sentence());
    }

    #[test]
    fn definitions_reference_only_earlier_symbols() {
        let defs = frege_definitions();
        for (i, d) in defs.iter().enumerate() {
            if let DefBody::Formula(body) = &d.body {
                let free = body.free_rel_vars();
                for later in &defs[i..] {
                    assert!(!free.contains_key(&later.name), "{} uses {}", d.name, later.name);
                }
            }
        }
    }
}
