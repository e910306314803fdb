//! Canonical surface text. Binary connectives and quantifiers below the top
//! level are always parenthesized, so printing followed by parsing is the identity.

use super::ast::*;

pub fn print_term(t: &Term) -> String {
    match t {
        Term::Var(v) => v.clone(),
        Term::Num(n) => n.to_string(),
        Term::Const(c) => c.clone(),
        Term::Abs(op, s) => {
            let s = match s {
                SetTerm::Var(v) => v.clone(),
                SetTerm::Empty => "{}".to_string(),
            };
            match op {
                AbsOp::Hash => format!("#{s}"),
                AbsOp::Ext => format!("ext({s})"),
            }
        }
        Term::Succ(a) => format!("s({})", print_term(a)),
        Term::Add(a, b) => format!("({} + {})", print_term(a), print_term(b)),
        Term::Mul(a, b) => format!("({} * {})", print_term(a), print_term(b)),
        Term::Neg(a) => format!("-{}", print_term(a)),
    }
}

pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    go(f, true, &mut out);
    out
}

fn is_upper(name: &str) -> bool {
    name.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

fn quant(kw: &str, name: &str, arity: Option<usize>) -> String {
    match arity {
        None => format!("{kw} {name}. "),
        Some(1) if is_upper(name) => format!("{kw} {name}. "),
        Some(n) if is_upper(name) => format!("{kw} {name}:{n}. "),
        Some(n) => format!("{kw}2 {name}:{n}. "),
    }
}

fn go(f: &Formula, top: bool, out: &mut String) {
    let wrap = |out: &mut String, inner: &dyn Fn(&mut String)| {
        if !top {
            out.push('(');
        }
        inner(out);
        if !top {
            out.push(')');
        }
    };
    match f {
        Formula::True => out.push_str("true"),
        Formula::False => out.push_str("false"),
        Formula::Mem(ts, r) => {
            if ts.len() == 1 {
                out.push_str(&print_term(&ts[0]));
                out.push_str(" in ");
                out.push_str(r);
            } else {
                out.push_str(r);
                out.push('(');
                let args: Vec<String> = ts.iter().map(print_term).collect();
                out.push_str(&args.join(", "));
                out.push(')');
            }
        }
        Formula::Eq(a, b) => {
            out.push_str(&format!("{} = {}", print_term(a), print_term(b)));
        }
        Formula::Le(a, b) => {
            out.push_str(&format!("{} <= {}", print_term(a), print_term(b)));
        }
        Formula::Not(a) => {
            out.push_str("not ");
            go(a, false, out);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            let op = match f {
                Formula::And(..) => " and ",
                Formula::Or(..) => " or ",
                Formula::Implies(..) => " -> ",
                _ => " <-> ",
            };
            wrap(out, &|out: &mut String| {
                go(a, false, out);
                out.push_str(op);
                go(b, false, out);
            });
        }
        Formula::ForallObj(x, b)
        | Formula::ExistsObj(x, b)
        | Formula::ForallRel(x, _, b)
        | Formula::ExistsRel(x, _, b) => {
            let head = match f {
                Formula::ForallObj(..) => quant("forall", x, None),
                Formula::ExistsObj(..) => quant("exists", x, None),
                Formula::ForallRel(_, n, _) => quant("forall", x, Some(*n)),
                Formula::ExistsRel(_, n, _) => quant("exists", x, Some(*n)),
                _ => unreachable!(),
            };
            wrap(out, &|out: &mut String| {
                out.push_str(&head);
                go(b, true, out);
            });
        }
    }
}
