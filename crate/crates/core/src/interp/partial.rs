//! A partial extension operator on the sets defined by a finite list of
//! parametric descriptors `θ_0, θ_1, …`, each over a finite parameter grid.
//!
//! An instance `θ_n(·, ā)` is routed to the least `m` such that some grid
//! parameter `b̄` of `θ_m` defines the same set; that is the `U_{n,m}` the
//! instance falls in. Its value is `ι_m(k)`, `k` being the grid position of
//! the first such `b̄`. Equal sets therefore share a value, distinct sets
//! routed to the same `m` get distinct `k`, and different `m` use disjoint
//! ranges.

use super::iota::IotaChain;
use crate::acf::{AcfSet, ThetaFamily};
use crate::eval::{eval, Env, FiniteStructure};
use crate::logic::{print_formula, Formula};
use crate::poly::{format_rational, Q};
use crate::rcf::{RcfSet, RcfTheta};
use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartialError {
    #[error("descriptor {index} cannot be instantiated at ({params}): {reason}")]
    Representative {
        index: usize,
        params: String,
        reason: String,
    },
}

/// Parametric set descriptors with decidable extensional equality.
pub trait DescriptorFamily {
    type Set: Clone + PartialEq + fmt::Display;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Printed descriptor `n`.
    fn label(&self, n: usize) -> String;

    /// Grid parameters of descriptor `n`, in enumeration order, with the set
    /// each defines.
    fn instances(&self, n: usize) -> Result<Vec<(Vec<String>, Self::Set)>, PartialError>;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// Descriptor whose instance was first seen with this set.
    pub n: usize,
    /// Least descriptor defining the set.
    pub m: usize,
    pub params: Vec<String>,
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "S: fmt::Display")]
pub struct Entry<S: fmt::Display> {
    #[serde(serialize_with = "ser_display")]
    pub set: S,
    #[serde(serialize_with = "ser_display")]
    pub value: BigUint,
    pub provenance: Provenance,
}

/// Where one grid instance was routed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Route {
    pub n: usize,
    pub params: Vec<String>,
    pub m: usize,
    pub entry: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "S: fmt::Display")]
pub struct PartialDelta<S: fmt::Display> {
    pub descriptors: Vec<String>,
    pub entries: Vec<Entry<S>>,
    pub routes: Vec<Route>,
}

impl<S: Clone + PartialEq + fmt::Display> PartialDelta<S> {
    pub fn value_of(&self, set: &S) -> Option<&BigUint> {
        self.entries.iter().find(|e| e.set == *set).map(|e| &e.value)
    }

    /// No two entries share a set and no two share a value.
    pub fn is_well_defined_injection(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                self.entries[i].set != self.entries[j].set && self.entries[i].value != self.entries[j].value
            })
        })
    }
}

pub fn build_partial_abstraction<F: DescriptorFamily>(
    family: &F,
    iota: &IotaChain,
) -> Result<PartialDelta<F::Set>, PartialError> {
    let mut entries: Vec<Entry<F::Set>> = Vec::new();
    let mut routes = Vec::new();
    for n in 0..family.len() {
        for (k, (params, set)) in family.instances(n)?.into_iter().enumerate() {
            let entry = match entries.iter().position(|e| e.set == set) {
                Some(i) => i,
                None => {
                    // Every earlier descriptor's grid has been scanned, so an
                    // unseen set is first defined here.
                    entries.push(Entry {
                        value: iota.eval(n, &BigUint::from(k)),
                        set,
                        provenance: Provenance {
                            n,
                            m: n,
                            params: params.clone(),
                        },
                    });
                    entries.len() - 1
                }
            };
            routes.push(Route {
                n,
                params,
                m: entries[entry].provenance.m,
                entry,
            });
        }
    }
    Ok(PartialDelta {
        descriptors: (0..family.len()).map(|n| family.label(n)).collect(),
        entries,
        routes,
    })
}

/// All tuples of length `arity` over `values`, lexicographic.
pub fn grid<T: Clone>(values: &[T], arity: usize) -> Vec<Vec<T>> {
    (0..arity).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                values.iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect()
    })
}

/// A finite set of atoms, printed with the structure labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSet(pub Vec<i64>);

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Formulas `φ(x, ȳ)` over a finite structure, `ȳ` ranging over all atoms.
pub struct FiniteFamily<'a> {
    pub structure: &'a FiniteStructure,
    pub descriptors: Vec<Formula>,
}

fn params_of(f: &Formula) -> Vec<String> {
    f.free_obj_vars_ordered().into_iter().filter(|v| v != "x").collect()
}

impl DescriptorFamily for FiniteFamily<'_> {
    type Set = AtomSet;

    fn len(&self) -> usize {
        self.descriptors.len()
    }

    fn label(&self, n: usize) -> String {
        print_formula(&self.descriptors[n])
    }

    fn instances(&self, n: usize) -> Result<Vec<(Vec<String>, AtomSet)>, PartialError> {
        let s = self.structure;
        let f = &self.descriptors[n];
        let names = params_of(f);
        let atoms: Vec<usize> = (0..s.size()).collect();
        grid(&atoms, names.len())
            .into_iter()
            .map(|args| {
                let env = names.iter().zip(&args).fold(Env::new(), |e, (v, &a)| e.object(v, a));
                let shown: Vec<String> = args.iter().map(|&a| s.labels[a].to_string()).collect();
                let mut members = Vec::new();
                for a in 0..s.size() {
                    let holds = eval(s, f, &env.clone().object("x", a)).map_err(|e| PartialError::Representative {
                        index: n,
                        params: shown.join(", "),
                        reason: e.to_string(),
                    })?;
                    if holds {
                        members.push(s.labels[a]);
                    }
                }
                Ok((shown, AtomSet(members)))
            })
            .collect()
    }
}

/// Parametric descriptors over a field, parameters from a rational grid.
pub struct FieldFamily<D> {
    pub descriptors: Vec<D>,
    pub grid: Vec<Q>,
}

fn field_instances<D, S, E: fmt::Display>(
    n: usize,
    arity: usize,
    values: &[Q],
    inst: impl Fn(&[Q]) -> Result<S, E>,
) -> Result<Vec<(Vec<String>, S)>, PartialError> {
    grid(values, arity)
        .into_iter()
        .map(|args| {
            let shown: Vec<String> = args.iter().map(format_rational).collect();
            inst(&args)
                .map(|set| (shown.clone(), set))
                .map_err(|e| PartialError::Representative {
                    index: n,
                    params: shown.join(", "),
                    reason: e.to_string(),
                })
        })
        .collect()
}

impl DescriptorFamily for FieldFamily<ThetaFamily> {
    type Set = AcfSet;

    fn len(&self) -> usize {
        self.descriptors.len()
    }

    fn label(&self, n: usize) -> String {
        print_formula(self.descriptors[n].descriptor())
    }

    fn instances(&self, n: usize) -> Result<Vec<(Vec<String>, AcfSet)>, PartialError> {
        let d = &self.descriptors[n];
        field_instances::<ThetaFamily, _, _>(n, d.params().len(), &self.grid, |a| d.instance(a))
    }
}

impl DescriptorFamily for FieldFamily<RcfTheta> {
    type Set = RcfSet;

    fn len(&self) -> usize {
        self.descriptors.len()
    }

    fn label(&self, n: usize) -> String {
        print_formula(self.descriptors[n].descriptor())
    }

    fn instances(&self, n: usize) -> Result<Vec<(Vec<String>, RcfSet)>, PartialError> {
        let d = &self.descriptors[n];
        field_instances::<RcfTheta, _, _>(n, d.params().len(), &self.grid, |a| d.instance(a))
    }
}
