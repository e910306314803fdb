//! Tagged JSON encoding of terms and formulas.
//!
//! Every node is an object with a `kind`; the remaining fields are drawn from
//! `name`, `arity`, `body` and `args`. Abstractions of the empty set omit `name`.

use super::ast::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed formula JSON: {0}")]
pub struct JsonError(pub String);

pub fn term_to_json(t: &Term) -> Value {
    match t {
        Term::Var(v) => json!({"kind": "var", "name": v}),
        Term::Num(n) => json!({"kind": "num", "name": n.to_string()}),
        Term::Const(c) => json!({"kind": "const", "name": c}),
        Term::Abs(op, s) => {
            let kind = match op {
                AbsOp::Hash => "hash",
                AbsOp::Ext => "ext",
            };
            match s {
                SetTerm::Var(v) => json!({"kind": kind, "name": v}),
                SetTerm::Empty => json!({"kind": kind}),
            }
        }
        Term::Succ(a) => json!({"kind": "succ", "args": [term_to_json(a)]}),
        Term::Neg(a) => json!({"kind": "neg", "args": [term_to_json(a)]}),
        Term::Add(a, b) => json!({"kind": "add", "args": [term_to_json(a), term_to_json(b)]}),
        Term::Mul(a, b) => json!({"kind": "mul", "args": [term_to_json(a), term_to_json(b)]}),
    }
}

pub fn to_json(f: &Formula) -> Value {
    use Formula::*;
    let bin = |k: &str, a: &Formula, b: &Formula| json!({"kind": k, "args": [to_json(a), to_json(b)]});
    match f {
        True => json!({"kind": "true"}),
        False => json!({"kind": "false"}),
        Mem(ts, r) => json!({
            "kind": "mem",
            "name": r,
            "arity": ts.len(),
            "args": ts.iter().map(term_to_json).collect::<Vec<_>>(),
        }),
        Eq(a, b) => json!({"kind": "eq", "args": [term_to_json(a), term_to_json(b)]}),
        Le(a, b) => json!({"kind": "le", "args": [term_to_json(a), term_to_json(b)]}),
        Not(a) => json!({"kind": "not", "body": to_json(a)}),
        And(a, b) => bin("and", a, b),
        Or(a, b) => bin("or", a, b),
        Implies(a, b) => bin("implies", a, b),
        Iff(a, b) => bin("iff", a, b),
        ForallObj(x, b) => json!({"kind": "forall", "name": x, "body": to_json(b)}),
        ExistsObj(x, b) => json!({"kind": "exists", "name": x, "body": to_json(b)}),
        ForallRel(r, n, b) => json!({"kind": "forall_rel", "name": r, "arity": n, "body": to_json(b)}),
        ExistsRel(r, n, b) => json!({"kind": "exists_rel", "name": r, "arity": n, "body": to_json(b)}),
    }
}

fn err(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, JsonError> {
    v.get(key).ok_or_else(|| err(format!("missing field '{key}'")))
}

fn name(v: &Value) -> Result<String, JsonError> {
    field(v, "name")?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| err("'name' must be a string"))
}

fn arity(v: &Value) -> Result<usize, JsonError> {
    match field(v, "arity")?.as_u64() {
        Some(n) if n >= 1 => Ok(n as usize),
        _ => Err(err("'arity' must be a positive integer")),
    }
}

fn args(v: &Value, n: usize) -> Result<&Vec<Value>, JsonError> {
    let a = field(v, "args")?
        .as_array()
        .ok_or_else(|| err("'args' must be an array"))?;
    if a.len() != n {
        return Err(err(format!("expected {n} args, found {}", a.len())));
    }
    Ok(a)
}

fn kind(v: &Value) -> Result<&str, JsonError> {
    field(v, "kind")?
        .as_str()
        .ok_or_else(|| err("'kind' must be a string"))
}

pub fn term_from_json(v: &Value) -> Result<Term, JsonError> {
    let boxed = |i: usize, n: usize| -> Result<Box<Term>, JsonError> {
        Ok(Box::new(term_from_json(&args(v, n)?[i])?))
    };
    Ok(match kind(v)? {
        "var" => Term::Var(name(v)?),
        "num" => Term::Num(name(v)?.parse().map_err(|_| err("bad numeral"))?),
        "const" => Term::Const(name(v)?),
        k @ ("hash" | "ext") => {
            let op = if k == "hash" { AbsOp::Hash } else { AbsOp::Ext };
            let set = match v.get("name") {
                None | Some(Value::Null) => SetTerm::Empty,
                Some(_) => SetTerm::Var(name(v)?),
            };
            Term::Abs(op, set)
        }
        "succ" => Term::Succ(boxed(0, 1)?),
        "neg" => Term::Neg(boxed(0, 1)?),
        "add" => Term::Add(boxed(0, 2)?, boxed(1, 2)?),
        "mul" => Term::Mul(boxed(0, 2)?, boxed(1, 2)?),
        k => return Err(err(format!("unknown term kind '{k}'"))),
    })
}

pub fn from_json(v: &Value) -> Result<Formula, JsonError> {
    let body = || -> Result<Box<Formula>, JsonError> { Ok(Box::new(from_json(field(v, "body")?)?)) };
    let sub = |i: usize| -> Result<Box<Formula>, JsonError> { Ok(Box::new(from_json(&args(v, 2)?[i])?)) };
    let term = |i: usize| term_from_json(&args(v, 2)?[i]);
    Ok(match kind(v)? {
        "true" => Formula::True,
        "false" => Formula::False,
        "mem" => {
            let n = arity(v)?;
            let ts = args(v, n)?.iter().map(term_from_json).collect::<Result<_, _>>()?;
            Formula::Mem(ts, name(v)?)
        }
        "eq" => Formula::Eq(term(0)?, term(1)?),
        "le" => Formula::Le(term(0)?, term(1)?),
        "not" => Formula::Not(body()?),
        "and" => Formula::And(sub(0)?, sub(1)?),
        "or" => Formula::Or(sub(0)?, sub(1)?),
        "implies" => Formula::Implies(sub(0)?, sub(1)?),
        "iff" => Formula::Iff(sub(0)?, sub(1)?),
        "forall" => Formula::ForallObj(name(v)?, body()?),
        "exists" => Formula::ExistsObj(name(v)?, body()?),
        "forall_rel" => Formula::ForallRel(name(v)?, arity(v)?, body()?),
        "exists_rel" => Formula::ExistsRel(name(v)?, arity(v)?, body()?),
        k => return Err(err(format!("unknown formula kind '{k}'"))),
    })
}

impl Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse::parse_formula;

    #[test]
    fn membership_encoding() {
        let f = parse_formula("R(x, #X)").unwrap();
        assert_eq!(
            to_json(&f).to_string(),
            r#"{"args":[{"kind":"var","name":"x"},{"kind":"hash","name":"X"}],"arity":2,"kind":"mem","name":"R"}"#
        );
    }

    #[test]
    fn round_trip() {
        let f = parse_formula("forall R:2. exists x. (R(x, x) and #{} = s(x + 1)) -> not ext(Y) <= -x").unwrap();
        assert_eq!(from_json(&to_json(&f)).unwrap(), f);
    }

    #[test]
    fn rejects_unknown_kind() {
        assert!(from_json(&json!({"kind": "xor"})).is_err());
        assert!(from_json(&json!({"kind": "mem", "name": "R", "arity": 2, "args": []})).is_err());
    }
}
