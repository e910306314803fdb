//! Recursive-descent parser for the surface syntax.
//!
//! ```text
//! input    := ("rel" NAME ":" NUM ";")* formula
//! formula  := imp ("<->" imp)*
//! imp      := or ("->" imp)?
//! or       := and ("or" and)*
//! and      := unary ("and" unary)*
//! unary    := "not" unary | quant | "(" formula ")" | atom
//! quant    := ("forall" | "exists" | "forall2" | "exists2") NAME (":" NUM)? "." formula
//! atom     := "true" | "false" | "bijection" "(" NAME "," NAME "," NAME ")"
//!           | NAME "(" term ("," term)* ")" | term ("=" | "!=" | "<=") term | term "in" NAME
//! term     := prod ("+" prod)*
//! prod     := neg ("*" neg)*
//! neg      := "-" neg | NUM | name | "s" "(" term ")" | "#" set | "ext" "(" set ")" | "(" term ")"
//! set      := NAME | "{" "}"
//! ```
//!
//! A lowercase name after `forall`/`exists` binds an object variable unless an
//! arity is given; an uppercase name binds a relation variable. A relation
//! binder without an arity takes the arity of its first use, defaulting to 1.

use super::ast::*;
use std::cell::Cell;
use std::collections::BTreeMap;
use std::rc::Rc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arity mismatch at {pos}: relation variable '{name}' has arity {expected}, used with {found}")]
    ArityMismatch {
        pos: usize,
        name: String,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    Sym(&'static str),
    End,
}

const SYMBOLS: [&str; 16] = [
    "<->", "->", "<=", "!=", "(", ")", ",", ".", ":", ";", "=", "#", "{", "}", "+", "*",
];

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'\'') {
                i += 1;
            }
            out.push((Tok::Ident(src[s..i].to_string()), s));
            continue;
        }
        if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[s..i].parse().map_err(|_| ParseError::Syntax {
                pos: s,
                msg: "numeral too large".into(),
            })?;
            out.push((Tok::Num(n), s));
            continue;
        }
        for sym in SYMBOLS {
            if src[i..].starts_with(sym) {
                out.push((Tok::Sym(sym), i));
                i += sym.len();
                continue 'outer;
            }
        }
        if c == b'-' {
            out.push((Tok::Sym("-"), i));
            i += 1;
            continue;
        }
        return Err(ParseError::Syntax {
            pos: i,
            msg: format!("unexpected character '{}'", c as char),
        });
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

const KEYWORDS: [&str; 12] = [
    "forall", "exists", "forall2", "exists2", "not", "and", "or", "in", "ext", "rel", "true",
    "false",
];

type Slot = Rc<Cell<Option<usize>>>;

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    rel_scope: Vec<(String, Slot)>,
    free_rel: BTreeMap<String, usize>,
}

/// Parses a formula; relation arities are checked across the whole input.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        i: 0,
        rel_scope: Vec::new(),
        free_rel: BTreeMap::new(),
    };
    while p.is_ident("rel") {
        p.i += 1;
        let (name, _) = p.ident()?;
        p.expect(":")?;
        let n = p.number()?;
        p.expect(";")?;
        p.free_rel.insert(name, n as usize);
    }
    let f = p.formula()?;
    if p.peek() != &Tok::End {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

fn is_upper(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(x) if *x == s)
    }

    fn is_ident(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Ident(x) if x == s)
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.is_sym(s) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{s}'")))
        }
    }

    fn ident(&mut self) -> Result<(String, usize), ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let p = self.pos();
                self.i += 1;
                Ok((s, p))
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.i += 1;
                Ok(n)
            }
            _ => Err(self.err("expected a number")),
        }
    }

    fn use_rel(&mut self, name: &str, n: usize, pos: usize) -> Result<(), ParseError> {
        let mismatch = |expected| ParseError::ArityMismatch {
            pos,
            name: name.to_string(),
            expected,
            found: n,
        };
        if let Some((_, slot)) = self.rel_scope.iter().rev().find(|(r, _)| r == name) {
            match slot.get() {
                None => slot.set(Some(n)),
                Some(a) if a != n => return Err(mismatch(a)),
                Some(_) => {}
            }
            return Ok(());
        }
        let a = *self.free_rel.entry(name.to_string()).or_insert(n);
        if a != n {
            return Err(mismatch(a));
        }
        Ok(())
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.imp()?;
        while self.is_sym("<->") {
            self.i += 1;
            let rhs = self.imp()?;
            lhs = iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.is_sym("->") {
            self.i += 1;
            let rhs = self.imp()?;
            return Ok(implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.is_ident("or") {
            self.i += 1;
            let rhs = self.and()?;
            lhs = or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.is_ident("and") {
            self.i += 1;
            let rhs = self.unary()?;
            lhs = and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.is_ident("not") {
            self.i += 1;
            return Ok(not(self.unary()?));
        }
        for kw in ["forall", "exists", "forall2", "exists2"] {
            if self.is_ident(kw) {
                self.i += 1;
                return self.quantifier(kw);
            }
        }
        if self.is_sym("(") {
            let save = self.i;
            if let Ok(f) = self.term_atom() {
                return Ok(f);
            }
            self.i = save;
            self.i += 1;
            let f = self.formula()?;
            self.expect(")")?;
            return Ok(f);
        }
        self.atom()
    }

    fn quantifier(&mut self, kw: &str) -> Result<Formula, ParseError> {
        let (name, _) = self.ident()?;
        let arity = if self.is_sym(":") {
            self.i += 1;
            let n = self.number()?;
            if n == 0 {
                return Err(self.err("relation arity must be positive"));
            }
            Some(n as usize)
        } else {
            None
        };
        self.expect(".")?;
        let second_order = kw.ends_with('2') || arity.is_some() || is_upper(&name);
        let universal = kw.starts_with("forall");
        if !second_order {
            let body = self.formula()?;
            return Ok(if universal {
                forall(&name, body)
            } else {
                exists(&name, body)
            });
        }
        let slot: Slot = Rc::new(Cell::new(arity));
        self.rel_scope.push((name.clone(), slot.clone()));
        let body = self.formula();
        self.rel_scope.pop();
        let body = body?;
        let n = slot.get().unwrap_or(1);
        Ok(if universal {
            forall_rel(&name, n, body)
        } else {
            exists_rel(&name, n, body)
        })
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        if self.is_ident("true") {
            self.i += 1;
            return Ok(Formula::True);
        }
        if self.is_ident("false") {
            self.i += 1;
            return Ok(Formula::False);
        }
        if self.is_ident("bijection") && matches!(self.toks[self.i + 1].0, Tok::Sym("(")) {
            self.i += 2;
            let mut names = Vec::new();
            for k in 0..3 {
                if k > 0 {
                    self.expect(",")?;
                }
                let (n, p) = self.ident()?;
                self.use_rel(&n, if k == 0 { 2 } else { 1 }, p)?;
                names.push(n);
            }
            self.expect(")")?;
            return Ok(bijection(&names[0], &names[1], &names[2]));
        }
        if let Tok::Ident(name) = self.peek().clone() {
            let next_paren = matches!(self.toks[self.i + 1].0, Tok::Sym("("));
            if next_paren && name != "s" && !KEYWORDS.contains(&name.as_str()) {
                let pos = self.pos();
                self.i += 2;
                let mut args = vec![self.term()?];
                while self.is_sym(",") {
                    self.i += 1;
                    args.push(self.term()?);
                }
                self.expect(")")?;
                self.use_rel(&name, args.len(), pos)?;
                return Ok(Formula::Mem(args, name));
            }
        }
        self.term_atom()
    }

    fn term_atom(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.term()?;
        if self.is_sym("=") {
            self.i += 1;
            return Ok(eq(lhs, self.term()?));
        }
        if self.is_sym("!=") {
            self.i += 1;
            return Ok(not(eq(lhs, self.term()?)));
        }
        if self.is_sym("<=") {
            self.i += 1;
            return Ok(le(lhs, self.term()?));
        }
        if self.is_ident("in") {
            self.i += 1;
            let (r, p) = self.ident()?;
            self.use_rel(&r, 1, p)?;
            return Ok(Formula::Mem(vec![lhs], r));
        }
        Err(self.err("expected '=', '!=', '<=' or 'in'"))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.prod()?;
        while self.is_sym("+") {
            self.i += 1;
            t = add(t, self.prod()?);
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut t = self.neg()?;
        while self.is_sym("*") {
            self.i += 1;
            t = mul(t, self.neg()?);
        }
        Ok(t)
    }

    fn neg(&mut self) -> Result<Term, ParseError> {
        if self.is_sym("-") {
            self.i += 1;
            return Ok(Term::Neg(Box::new(self.neg()?)));
        }
        match self.peek().clone() {
            Tok::Num(n) => {
                self.i += 1;
                Ok(Term::Num(n))
            }
            Tok::Sym("(") => {
                self.i += 1;
                let t = self.term()?;
                self.expect(")")?;
                Ok(t)
            }
            Tok::Sym("#") => {
                self.i += 1;
                let s = self.set_term()?;
                Ok(Term::Abs(AbsOp::Hash, s))
            }
            Tok::Ident(s) if s == "ext" => {
                self.i += 1;
                self.expect("(")?;
                let st = self.set_term()?;
                self.expect(")")?;
                Ok(Term::Abs(AbsOp::Ext, st))
            }
            Tok::Ident(s) if s == "s" && matches!(self.toks[self.i + 1].0, Tok::Sym("(")) => {
                self.i += 2;
                let t = self.term()?;
                self.expect(")")?;
                Ok(succ(t))
            }
            Tok::Ident(_) => {
                let (name, _) = self.ident()?;
                if is_upper(&name) {
                    Ok(Term::Const(name))
                } else {
                    Ok(Term::Var(name))
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn set_term(&mut self) -> Result<SetTerm, ParseError> {
        if self.is_sym("{") {
            self.i += 1;
            self.expect("}")?;
            return Ok(SetTerm::Empty);
        }
        let (name, p) = self.ident()?;
        self.use_rel(&name, 1, p)?;
        Ok(SetTerm::Var(name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::print::print_formula;

    #[test]
    fn parses_simple_examples() {
        let f = parse_formula("exists X. forall x. R(x, #X)").unwrap();
        assert_eq!(
            f,
            exists_rel("X", 1, forall("x", mem(vec![var("x"), hash("X")], "R")))
        );
        let g = parse_formula("forall x. x = x").unwrap();
        assert_eq!(g, forall("x", eq(var("x"), var("x"))));
    }

    #[test]
    fn hp_sentence_expands_bijection() {
        let f = parse_formula("#X = #Y <-> exists2 f. bijection(f, X, Y)").unwrap();
        assert_eq!(
            f,
            iff(eq(hash("X"), hash("Y")), exists_rel("f", 2, bijection("f", "X", "Y")))
        );
    }

    #[test]
    fn arity_is_inferred_from_use() {
        let f = parse_formula("forall R. exists x. R(x, x)").unwrap();
        assert!(matches!(f, Formula::ForallRel(_, 2, _)));
    }

    #[test]
    fn arity_mismatch_names_the_variable() {
        match parse_formula("R(x) and R(x, y)") {
            Err(ParseError::ArityMismatch { name, .. }) => assert_eq!(name, "R"),
            other => panic!("{other:?}"),
        }
        assert!(parse_formula("rel R:2; x in R").is_err());
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_formula("forall x x = x") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parenthesized_terms_and_formulas() {
        let f = parse_formula("(x + y) = z and (x = y)").unwrap();
        assert_eq!(
            f,
            and(eq(add(var("x"), var("y")), var("z")), eq(var("x"), var("y")))
        );
        let g = parse_formula("s(x) != 0").unwrap();
        assert_eq!(g, not(eq(succ(var("x")), Term::Num(0))));
    }

    #[test]
    fn round_trip_through_printer() {
        for s in [
            "forall R. forall X. exists y. (forall x. R(x, y)) -> y = ext(X)",
            "exists X. forall R:2. (exists x. R(x, x)) -> R(#X, #X)",
            "#{} = #{}",
            "forall x. (x in N -> not SuccRel(x, Zero))",
            "x <= s((y * -3))",
        ] {
            let f = parse_formula(s).unwrap();
            let printed = print_formula(&f);
            assert_eq!(parse_formula(&printed).unwrap(), f, "{printed}");
        }
    }
}
