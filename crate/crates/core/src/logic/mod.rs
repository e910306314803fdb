//! Two-sorted second-order formulas over the shared signature of arithmetic,
//! Hume's Principle and Basic Law V.

pub mod ast;
pub mod classify;
pub mod json;
pub mod parse;
pub mod print;
pub mod schema;
pub mod subst;
pub mod theory;

pub use ast::*;
pub use classify::{classify, Level};
pub use parse::{parse_formula, ParseError};
pub use print::{print_formula, print_term};
