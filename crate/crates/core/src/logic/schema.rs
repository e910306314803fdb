//! Instances of the comprehension, Δ¹₁-comprehension and Σ¹₁-choice schemas.

use super::ast::*;
use super::classify::{classify, Level};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Phi,
    Psi,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Phi => "phi",
            Side::Psi => "psi",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemaError {
    #[error("relation variable '{0}' occurs free in the schema body")]
    RelationFree(String),
    #[error("{side} classifies {found}, which is not within {allowed}")]
    Classification {
        side: Side,
        found: Level,
        allowed: Level,
    },
    #[error("body has {found} free object variables, {needed} required")]
    TooFewFreeVars { needed: usize, found: usize },
    #[error("arity must be positive")]
    ZeroArity,
    #[error("'{0}' is not a free relation variable of the body")]
    NotFreeSetVar(String),
}

fn distinguished(phi: &Formula, arity: usize) -> Result<Vec<String>, SchemaError> {
    if arity == 0 {
        return Err(SchemaError::ZeroArity);
    }
    let vs = phi.free_obj_vars_ordered();
    if vs.len() < arity {
        return Err(SchemaError::TooFewFreeVars {
            needed: arity,
            found: vs.len(),
        });
    }
    Ok(vs[..arity].to_vec())
}

fn ensure_not_free(r: &str, fs: &[&Formula]) -> Result<(), SchemaError> {
    if fs.iter().any(|f| f.free_rel_vars().contains_key(r)) {
        return Err(SchemaError::RelationFree(r.to_string()));
    }
    Ok(())
}

fn ensure_level(side: Side, f: &Formula, allowed: Level) -> Result<(), SchemaError> {
    let found = classify(f);
    if !found.fits_within(allowed) {
        return Err(SchemaError::Classification {
            side,
            found,
            allowed,
        });
    }
    Ok(())
}

fn vars(xs: &[String]) -> Vec<Term> {
    xs.iter().map(|x| var(x)).collect()
}

/// `∃R ∀v̄ (R(v̄) ↔ phi)` where v̄ are the first `arity` free variables of `phi`
/// in order of occurrence.
pub fn instantiate_comprehension(phi: &Formula, r: &str, arity: usize) -> Result<Formula, SchemaError> {
    let vs = distinguished(phi, arity)?;
    comprehension_over(phi, r, &vs)
}

/// Comprehension with the bound tuple named explicitly.
pub fn comprehension_over(phi: &Formula, r: &str, vs: &[String]) -> Result<Formula, SchemaError> {
    if vs.is_empty() {
        return Err(SchemaError::ZeroArity);
    }
    ensure_not_free(r, &[phi])?;
    Ok(exists_rel(
        r,
        vs.len(),
        forall_many(vs, iff(mem(vars(vs), r), phi.clone())),
    ))
}

/// `[∀v̄ (phi ↔ psi)] → [∃R ∀v̄ (R(v̄) ↔ phi)]` with phi Σ¹₁ and psi Π¹₁.
pub fn instantiate_delta11(
    phi: &Formula,
    psi: &Formula,
    r: &str,
    arity: usize,
) -> Result<Formula, SchemaError> {
    ensure_level(Side::Phi, phi, Level::Sigma(1))?;
    ensure_level(Side::Psi, psi, Level::Pi(1))?;
    ensure_not_free(r, &[phi, psi])?;
    let vs = distinguished(phi, arity)?;
    let premise = forall_many(&vs, iff(phi.clone(), psi.clone()));
    Ok(implies(premise, comprehension_over(phi, r, &vs)?))
}

/// Choice instance where the parameters are all free object variables of `phi`.
pub fn instantiate_choice(phi: &Formula, p: &str, r: &str) -> Result<Formula, SchemaError> {
    let params = phi.free_obj_vars_ordered();
    choice_over(phi, &params, p, r)
}

/// `[∀n̄ ∃P phi] → [∃R ∀n̄ ∀P ((∀m̄ (P(m̄) ↔ R(n̄ m̄))) → phi)]`.
pub fn choice_over(phi: &Formula, params: &[String], p: &str, r: &str) -> Result<Formula, SchemaError> {
    ensure_level(Side::Phi, phi, Level::Sigma(1))?;
    let k = *phi
        .free_rel_vars()
        .get(p)
        .ok_or_else(|| SchemaError::NotFreeSetVar(p.to_string()))?;
    ensure_not_free(r, &[phi])?;
    let mut fresh = FreshNames::seeded(&[phi]);
    for n in params {
        fresh.reserve(n);
    }
    fresh.reserve(r);
    let ms: Vec<String> = (0..k).map(|_| fresh.fresh("m")).collect();
    let mut row = vars(params);
    row.extend(vars(&ms));
    let column = forall_many(&ms, iff(mem(vars(&ms), p), mem(row, r)));
    let premise = forall_many(params, exists_rel(p, k, phi.clone()));
    let conclusion = exists_rel(
        r,
        params.len() + k,
        forall_many(params, forall_rel(p, k, implies(column, phi.clone()))),
    );
    Ok(implies(premise, conclusion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn russell_instance() {
        let phi = p("exists Y. ext(Y) = x and not x in Y");
        let inst = instantiate_comprehension(&phi, "F", 1).unwrap();
        assert_eq!(
            inst,
            p("exists F. forall x. (x in F <-> (exists Y. ext(Y) = x and not x in Y))")
        );
    }

    #[test]
    fn diagonal_instance() {
        let inst = instantiate_comprehension(&p("x = y"), "R", 2).unwrap();
        assert_eq!(inst, p("exists R:2. forall x. forall y. R(x, y) <-> x = y"));
    }

    #[test]
    fn free_relation_rejected() {
        let err = instantiate_comprehension(&p("x in F"), "F", 1).unwrap_err();
        assert_eq!(err, SchemaError::RelationFree("F".into()));
    }

    #[test]
    fn delta11_singleton_pair() {
        let phi = p("exists X. (forall z. z in X <-> z = x) and ext(X) = y");
        let psi = p("forall Y. (forall z. z in Y <-> z = x) -> ext(Y) = y");
        let inst = instantiate_delta11(&phi, &psi, "S", 2).unwrap();
        assert_eq!(classify(&inst), Level::Sigma(3));
        assert_eq!(crate::logic::classify::classify_absorbing(&inst), Level::Sigma(2));
        let err = instantiate_delta11(&psi, &phi, "S", 2).unwrap_err();
        assert!(matches!(err, SchemaError::Classification { side: Side::Phi, .. }));
    }

    #[test]
    fn choice_shape() {
        let inst = instantiate_choice(&p("n in P"), "P", "R").unwrap();
        assert_eq!(
            inst,
            p("(forall n. exists P. n in P) -> (exists R:2. forall n. forall P. (forall m. (m in P <-> R(n, m))) -> n in P)")
        );
        let bad = p("forall Q. n in P and Q(n)");
        assert!(instantiate_choice(&bad, "P", "R").is_err());
    }
}
