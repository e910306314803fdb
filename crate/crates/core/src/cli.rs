//! Command-line front end. Every report is a JSON value with sorted keys;
//! `--pretty` renders the same value as indented text.

use crate::acf::{acf_sa_report, acf_theta_prime, successor_witness, AcfSet, ThetaFamily};
use crate::eval::{blv_injection_search, eval, eval_arithmetic, full_family, russell_set, Env, FiniteStructure, Relation};
use crate::gen;
use crate::hmodel::{card_table, h_card, h_gamma_iso, h_pool, h_range_complement, h_swap_check, HSet, OrdElem};
use crate::interp::{
    boolos_translate_with, build_partial_abstraction, cantor_big, flatten, frege_translate, iota_chain, CardEncoding,
    FieldFamily, FiniteFamily,
};
use crate::logic::schema::{instantiate_choice, instantiate_comprehension, instantiate_delta11};
use crate::logic::{classify, parse_formula, print_formula, Formula};
use crate::poly::parse_rational;
use crate::rcf::{rcf_build_bijection, rcf_decompose, rcf_skolem_demo, RcfSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "hume", version, about = "Abstraction principles, interpretations and definable-set backends")]
pub struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Emit an indented text report.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for generated inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Level of a formula in the analytical hierarchy.
    Classify { formula: String },
    /// Comprehension, Δ¹₁-comprehension and choice instances.
    #[command(subcommand)]
    Instantiate(Instantiate),
    /// Frege and Boolos interpretations of a sentence.
    #[command(subcommand)]
    Translate(Translate),
    /// Evaluate a sentence on a structure read from a JSON file.
    Eval {
        #[arg(long)]
        structure: String,
        #[arg(long)]
        formula: String,
        /// Read `0, s, +, *, <=` on the atoms as numbers.
        #[arg(long)]
        arithmetic: bool,
    },
    /// Definable sets of an algebraically closed field.
    #[command(subcommand)]
    Acf(Acf),
    /// Definable sets of a real closed field.
    #[command(subcommand)]
    Rcf(Rcf),
    /// The canonical model on `ω+κ+1`.
    #[command(subcommand)]
    Hmodel(Hmodel),
    /// Worked finite examples.
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Subcommand, Debug)]
pub enum Instantiate {
    /// `∃R ∀x̄ (R(x̄) ↔ φ)`.
    Comprehension {
        #[arg(long)]
        phi: String,
        #[arg(long, default_value = "R")]
        rel: String,
        #[arg(long, default_value_t = 1)]
        arity: usize,
    },
    /// Comprehension guarded by `∀x̄ (φ ↔ ¬ψ)`.
    Delta11 {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long, default_value = "R")]
        rel: String,
        #[arg(long, default_value_t = 1)]
        arity: usize,
    },
    /// `∀x̄ ∃X φ → ∃R ∀x̄ φ[R_x̄/X]`.
    Choice {
        #[arg(long)]
        phi: String,
        /// The set variable chosen for each parameter tuple.
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "R")]
        rel: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum Translate {
    /// Arithmetic sentence into the language of `#`.
    Frege {
        formula: String,
        /// Also expand every defined symbol.
        #[arg(long)]
        flatten: bool,
    },
    /// Sentence with `#` into second-order arithmetic.
    Boolos {
        formula: String,
        #[arg(long)]
        flatten: bool,
        /// Spell out `|X| = k` up to this bound instead of coding sequences.
        #[arg(long)]
        bound: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Acf {
    /// `#X` for a set written `roots(p)`, `co-roots(p)`, `empty` or `k`.
    Number { set: String },
    /// Finite or cofinite, with the exception count.
    Card { set: String },
    /// Whether two sets are in bijection.
    Hume { x: String, y: String },
    /// Whether `m` succeeds `n` under the defined successor relation.
    Successor {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// Closure and heredity of candidate number sets in a window.
    SaReport {
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// The formula computing `#θ(·, ā)`, solved at `--args` when given.
    ThetaPrime {
        descriptor: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Rcf {
    /// Canonical form of cell notation or a sign-condition formula.
    Build { set: String },
    /// Dimension and Euler characteristic.
    Invariant { set: String },
    /// `#X` coded from the invariant.
    Number { set: String },
    /// Whether two sets are in definable bijection.
    Hume { x: String, y: String },
    /// A piecewise definable bijection between sets with equal invariants.
    Bijection { x: String, y: String },
    /// Common cell decomposition of several sets.
    Decompose { sets: Vec<String> },
    /// Definable choice for `x² = a` against the ACF case.
    SkolemDemo,
}

#[derive(Subcommand, Debug)]
pub enum Hmodel {
    /// `#X` for a set given as JSON `{"mode":..,"exceptions":[..]}`.
    Card {
        #[arg(long)]
        kappa: u32,
        set: String,
    },
    /// Elements of `ω+κ+1` outside the range of `#`.
    Complement {
        #[arg(long)]
        kappa: u32,
    },
    /// Swap two elements outside the range over the pool of sets with
    /// exceptions among `n:0..nats` and `w..w+kappa`.
    Swap {
        #[arg(long)]
        kappa: u32,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
        #[arg(long, default_value_t = 4)]
        nats: u64,
    },
    /// Compare `h_card` with a second abstraction map on the pool.
    Gamma {
        #[arg(long)]
        kappa: u32,
        #[arg(long, value_enum, default_value_t = Variant::Shift)]
        variant: Variant,
        #[arg(long, default_value_t = 3)]
        nats: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Variant {
    /// `h_card` itself.
    Identity,
    /// Finite numbers moved up by one.
    Shift,
    /// Sends both `n:1` and `n:2` to `n:1`.
    Merge,
}

#[derive(Subcommand, Debug)]
pub enum Demo {
    /// Full powerset, `∂∅ = 0` and `∂{i} = i+1` for `i < N-1`.
    Russell {
        #[arg(long, default_value_t = 3)]
        universe: usize,
        /// Atoms of `A`, which must lie in the range of `∂`.
        #[arg(long, value_delimiter = ',', default_value = "0")]
        a: Vec<usize>,
    },
    /// Injective `∂` on the full powerset of `{0..N-1}`.
    Pigeonhole {
        #[arg(long, default_value_t = 3)]
        universe: usize,
    },
    /// Pairwise disjointness of the injections `ι_0..ι_max_n`.
    Iota(IotaArgs),
    /// Partial extension operator on randomly generated descriptors.
    PartialDelta {
        #[arg(long, value_enum, default_value_t = Backend::Finite)]
        backend: Backend,
        #[arg(long, default_value_t = 4)]
        descriptors: usize,
    },
}

#[derive(Args, Debug)]
pub struct IotaArgs {
    #[arg(long, default_value_t = 3)]
    pub max_n: usize,
    #[arg(long, default_value_t = 5)]
    pub inputs: u32,
    #[arg(long, default_value_t = 0)]
    pub b: u32,
    #[arg(long, default_value_t = 1)]
    pub c: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Backend {
    Finite,
    Acf,
    Rcf,
}

/// A named module error.
#[derive(Debug)]
pub struct Failure {
    pub kind: String,
    pub message: String,
}

impl<E: fmt::Debug + fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        let debug = format!("{e:?}");
        let end = debug.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(debug.len());
        Failure {
            kind: debug[..end].to_string(),
            message: e.to_string(),
        }
    }
}

fn failure(kind: &str, message: impl Into<String>) -> Failure {
    Failure {
        kind: kind.to_string(),
        message: message.into(),
    }
}

type Out = Result<Value, Failure>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn formula(text: &str) -> Result<Formula, Failure> {
    Ok(parse_formula(text)?)
}

fn acf_set(text: &str) -> Result<AcfSet, Failure> {
    Ok(text.parse::<AcfSet>()?)
}

fn rcf_set(text: &str) -> Result<RcfSet, Failure> {
    Ok(text.parse::<RcfSet>()?)
}

fn ord(text: &str) -> Result<OrdElem, Failure> {
    Ok(text.parse::<OrdElem>()?)
}

/// Parses arguments, dispatches, and writes the report. Returns the exit code:
/// 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let (value, code) = match dispatch(&cli) {
        Ok(v) => (v, 0),
        Err(f) => (json!({"error": f.kind, "message": f.message}), 1),
    };
    let text = if cli.pretty {
        let mut s = String::new();
        render(&value, 0, &mut s);
        s
    } else {
        format!("{value}\n")
    };
    let _ = out.write_all(text.as_bytes());
    code
}

pub fn dispatch(cli: &Cli) -> Out {
    match &cli.command {
        Command::Classify { formula: f } => Ok(to_value(&classify(&formula(f)?))),
        Command::Instantiate(i) => instantiate(i),
        Command::Translate(t) => translate(t),
        Command::Eval {
            structure,
            formula: f,
            arithmetic,
        } => {
            let text = std::fs::read_to_string(structure).map_err(|e| failure("Io", format!("{structure}: {e}")))?;
            let v: Value = serde_json::from_str(&text)?;
            let s = FiniteStructure::from_json(&v)?;
            let f = formula(f)?;
            let value = if *arithmetic {
                eval_arithmetic(&s, &f, &Env::new())?
            } else {
                eval(&s, &f, &Env::new())?
            };
            Ok(json!({"formula": print_formula(&f), "value": value}))
        }
        Command::Acf(a) => acf(a),
        Command::Rcf(r) => rcf(r),
        Command::Hmodel(h) => hmodel(h),
        Command::Demo(d) => demo(d, cli.seed),
    }
}

fn instance_report(f: Formula) -> Value {
    json!({"instance": print_formula(&f), "level": to_value(&classify(&f))})
}

fn instantiate(i: &Instantiate) -> Out {
    Ok(instance_report(match i {
        Instantiate::Comprehension { phi, rel, arity } => instantiate_comprehension(&formula(phi)?, rel, *arity)?,
        Instantiate::Delta11 { phi, psi, rel, arity } => {
            instantiate_delta11(&formula(phi)?, &formula(psi)?, rel, *arity)?
        }
        Instantiate::Choice { phi, set, rel } => instantiate_choice(&formula(phi)?, set, rel)?,
    }))
}

fn translate(t: &Translate) -> Out {
    match t {
        Translate::Frege { formula: f, flatten: flat } => {
            let f = formula(f)?;
            let tr = frege_translate(&f);
            let mut report = to_value(&tr);
            report["levels"] = json!({
                "input": to_value(&classify(&f)),
                "translated": to_value(&classify(&tr.translated)),
            });
            if *flat {
                let g = flatten(&tr);
                report["flattened"] = json!(print_formula(&g));
                report["levels"]["flattened"] = to_value(&classify(&g));
            }
            Ok(report)
        }
        Translate::Boolos {
            formula: f,
            flatten: flat,
            bound,
        } => {
            let f = formula(f)?;
            let enc = bound.map_or(CardEncoding::Arithmetic, CardEncoding::Bounded);
            let g = boolos_translate_with(&f, enc)?;
            let mut report = json!({
                "translated": print_formula(&g),
                "definitions": [],
                "levels": {"input": to_value(&classify(&f)), "translated": to_value(&classify(&g))},
            });
            // The translation introduces no defined symbols.
            if *flat {
                report["flattened"] = json!(print_formula(&g));
                report["levels"]["flattened"] = to_value(&classify(&g));
            }
            Ok(report)
        }
    }
}

fn acf(a: &Acf) -> Out {
    match a {
        Acf::Number { set } => {
            let x = acf_set(set)?;
            Ok(json!({"set": x.to_string(), "number": x.number()}))
        }
        Acf::Card { set } => {
            let x = acf_set(set)?;
            Ok(json!({"set": x.to_string(), "card": to_value(&x.card())}))
        }
        Acf::Hume { x, y } => {
            let (x, y) = (acf_set(x)?, acf_set(y)?);
            Ok(json!({"numbers": [x.number(), y.number()], "equinumerous": x.hume_equiv(&y)}))
        }
        Acf::Successor { n, m } => {
            let w = successor_witness(*n, *m);
            Ok(json!({"n": n, "m": m, "holds": w.is_some(), "witness": to_value(&w)}))
        }
        Acf::SaReport { bound } => Ok(to_value(&acf_sa_report(*bound))),
        Acf::ThetaPrime { descriptor, args } => {
            let fam = ThetaFamily::parse(descriptor)?;
            let tp = acf_theta_prime(&fam);
            let mut report = json!({
                "formula": print_formula(&tp.formula),
                "n_theta": tp.n_theta,
                "output": tp.output,
                "params": tp.params,
            });
            if !args.is_empty() {
                let qs = args
                    .iter()
                    .map(|a| parse_rational(a).ok_or_else(|| failure("Syntax", format!("not a rational: {a}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                let set = fam.instance(&qs)?;
                report["instance"] = json!({"set": set.to_string(), "number": set.number()});
                report["solutions"] = to_value(&tp.solutions(&qs)?);
            }
            Ok(report)
        }
    }
}

fn rcf(r: &Rcf) -> Out {
    match r {
        Rcf::Build { set } => {
            let x = rcf_set(set)?;
            Ok(json!({"set": x.to_string(), "cells": to_value(&x.cells())}))
        }
        Rcf::Invariant { set } => Ok(to_value(&rcf_set(set)?.invariant())),
        Rcf::Number { set } => {
            let x = rcf_set(set)?;
            Ok(json!({"set": x.to_string(), "number": x.number()}))
        }
        Rcf::Hume { x, y } => {
            let (x, y) = (rcf_set(x)?, rcf_set(y)?);
            Ok(json!({
                "invariants": [to_value(&x.invariant()), to_value(&y.invariant())],
                "equinumerous": x.hume_equiv(&y),
            }))
        }
        Rcf::Bijection { x, y } => {
            let (x, y) = (rcf_set(x)?, rcf_set(y)?);
            let b = rcf_build_bijection(&x, &y)?;
            let shown: Vec<String> = b.pieces.iter().map(ToString::to_string).collect();
            let mut report = to_value(&b);
            report["shown"] = json!(shown);
            report["verified"] = json!(b.covers(&x, &y));
            Ok(report)
        }
        Rcf::Decompose { sets } => {
            let xs = sets.iter().map(|s| rcf_set(s)).collect::<Result<Vec<_>, _>>()?;
            let d = rcf_decompose(&xs);
            let mut report = to_value(&d);
            report["verified"] = json!(d.verify());
            Ok(report)
        }
        Rcf::SkolemDemo => Ok(to_value(&rcf_skolem_demo())),
    }
}

fn hset(text: &str) -> Result<HSet, Failure> {
    Ok(serde_json::from_str::<HSet>(text)?)
}

fn hmodel(h: &Hmodel) -> Out {
    match h {
        Hmodel::Card { kappa, set } => {
            let x = hset(set)?;
            if !x.in_universe(*kappa) {
                return Err(failure("OutOfUniverse", format!("{x} is not a subset of H_{kappa}")));
            }
            Ok(json!({"set": x.to_string(), "card": to_value(&h_card(*kappa, &x))}))
        }
        Hmodel::Complement { kappa } => {
            let c = h_range_complement(*kappa)?;
            Ok(json!({"kappa": kappa, "size": c.len(), "complement": to_value(&c)}))
        }
        Hmodel::Swap {
            kappa,
            beta,
            gamma,
            nats,
        } => Ok(to_value(&h_swap_check(*kappa, ord(beta)?, ord(gamma)?, &h_pool(*kappa, *nats))?)),
        Hmodel::Gamma { kappa, variant, nats } => {
            let pool = h_pool(*kappa, *nats);
            let sharp1 = card_table(*kappa, &pool);
            let sharp2: BTreeMap<HSet, OrdElem> = sharp1
                .iter()
                .map(|(x, &v)| {
                    let w = match (variant, v) {
                        (Variant::Shift, OrdElem::Nat(k)) => OrdElem::Nat(k + 1),
                        (Variant::Merge, OrdElem::Nat(2)) => OrdElem::Nat(1),
                        _ => v,
                    };
                    (x.clone(), w)
                })
                .collect();
            Ok(to_value(&h_gamma_iso(*kappa, &pool, &sharp1, &sharp2)?))
        }
    }
}

fn demo(d: &Demo, seed: u64) -> Out {
    match d {
        Demo::Russell { universe, a } => {
            let n = *universe;
            if n == 0 {
                return Err(failure("EmptyUniverse", "the universe needs at least one atom"));
            }
            let s = FiniteStructure::full(n)?;
            let index = |atoms: &[usize]| s.set_index(&Relation::from_set(n, atoms.iter().copied()));
            let mut pairs = vec![(index(&[]).expect("full family"), 0)];
            for i in 0..n - 1 {
                pairs.push((index(&[i]).expect("full family"), i + 1));
            }
            if let Some(&x) = a.iter().find(|&&x| x >= n) {
                return Err(failure("OutOfUniverse", format!("atom {x} is not below {n}")));
            }
            let a_index = index(a).expect("full family");
            let s = s.with_abstraction(crate::logic::AbsOp::Ext, &pairs)?;
            Ok(to_value(&russell_set(&s, a_index)?))
        }
        Demo::Pigeonhole { universe } => {
            let family: Vec<Vec<usize>> = full_family(*universe, 1)?.iter().map(Relation::atoms).collect();
            Ok(json!({
                "universe": universe,
                "sets": family.len(),
                "search": to_value(&blv_injection_search(*universe, &family)?),
            }))
        }
        Demo::Iota(args) => {
            let chain = iota_chain(cantor_big, args.b.into(), args.c.into())?;
            let mut rows = Vec::new();
            let mut seen: BTreeMap<BigUint, usize> = BTreeMap::new();
            let mut disjoint = true;
            for n in 0..=args.max_n {
                let values: Vec<BigUint> = (0..args.inputs).map(|x| chain.eval(n, &x.into())).collect();
                for v in &values {
                    if seen.insert(v.clone(), n).is_some() {
                        disjoint = false;
                    }
                }
                let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
                rows.push(json!({"n": n, "descriptor": chain.descriptor(n), "values": shown}));
            }
            Ok(json!({"chain": rows, "disjoint": disjoint}))
        }
        Demo::PartialDelta { backend, descriptors } => {
            let mut rng = gen::rng(seed);
            let chain = iota_chain(cantor_big, 0u32.into(), 1u32.into())?;
            let (d, ok) = match backend {
                Backend::Finite => {
                    let s = FiniteStructure::full(3)?;
                    let fam = FiniteFamily {
                        structure: &s,
                        descriptors: gen::finite_descriptors(&mut rng, *descriptors),
                    };
                    let d = build_partial_abstraction(&fam, &chain)?;
                    (to_value(&d), d.is_well_defined_injection())
                }
                Backend::Acf => {
                    let fam = FieldFamily {
                        descriptors: gen::acf_descriptors(&mut rng, *descriptors),
                        grid: field_grid(),
                    };
                    let d = build_partial_abstraction(&fam, &chain)?;
                    (to_value(&d), d.is_well_defined_injection())
                }
                Backend::Rcf => {
                    let fam = FieldFamily {
                        descriptors: gen::rcf_descriptors(&mut rng, *descriptors),
                        grid: field_grid(),
                    };
                    let d = build_partial_abstraction(&fam, &chain)?;
                    (to_value(&d), d.is_well_defined_injection())
                }
            };
            let mut report = d;
            report["well_defined_injection"] = json!(ok);
            Ok(report)
        }
    }
}

/// Parameter values shared by the field backends.
pub fn field_grid() -> Vec<crate::poly::Q> {
    [-1, 0, 1, 2].into_iter().map(crate::poly::q).collect()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Objects as `key: value` lines, arrays as `- item` lines, nested values
/// indented two spaces.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(c) if !c.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 2, out);
                    }
                    Value::Array(c) if !c.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match x {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hume").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify_prints_level() {
        let (code, text) = call(&["classify", "exists X. forall x. R(x, #X)"]);
        assert_eq!(code, 0);
        assert_eq!(text.trim(), r#"{"level":"Sigma","n":1}"#);
    }

    #[test]
    fn rcf_invariant_of_interval() {
        let (code, text) = call(&["rcf", "invariant", "x^2-2 < 0"]);
        assert_eq!(code, 0);
        assert_eq!(text.trim(), r#"{"dim":1,"euler":-1}"#);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["classify", "forall x."]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
        let (code, text) = call(&["hmodel", "complement", "--kappa", "99"]);
        assert_eq!(code, 1);
        assert!(text.contains(r#""error":"KappaTooLarge""#), "{text}");
    }

    #[test]
    fn pretty_is_text() {
        let (_, text) = call(&["--pretty", "classify", "forall X. X(0)"]);
        assert_eq!(text, "level: Pi\nn: 1\n");
    }

    #[test]
    fn russell_demo() {
        let (code, text) = call(&["demo", "russell", "--universe", "3"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdict"], "witness_found");
        assert_eq!(v["extension"], 1);
    }
}
