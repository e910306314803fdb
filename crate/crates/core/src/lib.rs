//! Second-order logic workbench for abstraction principles.
//!
//! Formulas over objects, relations and an abstraction operator, finite
//! Henkin-style evaluation, theory translations, and exact backends where the
//! abstraction operator is computable on definable sets.

pub mod acf;
pub mod cli;
pub mod eval;
pub mod gen;
pub mod hmodel;
pub mod interp;
pub mod logic;
pub mod poly;
pub mod rcf;
