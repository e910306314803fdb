//! Explicit finite structures `(M, S₁, S₂, …, ∂)`.

use crate::logic::AbsOp;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

use super::EvalError;

/// An `arity`-ary relation on `{0, …, size-1}` as a bitset over tuples, the
/// tuple `(a₀, …, aₖ)` having index `Σ aᵢ·sizeⁱ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    size: usize,
    arity: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(size: usize, arity: usize) -> Relation {
        let n = size.pow(arity as u32);
        Relation {
            size,
            arity,
            bits: vec![0; n.div_ceil(64).max(1)],
        }
    }

    pub fn from_tuples<'t>(size: usize, arity: usize, tuples: impl IntoIterator<Item = &'t [usize]>) -> Relation {
        let mut r = Relation::empty(size, arity);
        for t in tuples {
            r.insert(t);
        }
        r
    }

    pub fn from_set(size: usize, atoms: impl IntoIterator<Item = usize>) -> Relation {
        let mut r = Relation::empty(size, 1);
        for a in atoms {
            r.insert(&[a]);
        }
        r
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn index(&self, t: &[usize]) -> usize {
        debug_assert_eq!(t.len(), self.arity);
        t.iter().rev().fold(0, |acc, &a| {
            debug_assert!(a < self.size);
            acc * self.size + a
        })
    }

    pub fn contains(&self, t: &[usize]) -> bool {
        let i = self.index(t);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, t: &[usize]) {
        let i = self.index(t);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, t: &[usize]) {
        let i = self.index(t);
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Member tuples in increasing index order.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        let total = self.size.pow(self.arity as u32);
        (0..total)
            .filter(|i| self.bits[i / 64] >> (i % 64) & 1 == 1)
            .map(|mut i| {
                (0..self.arity)
                    .map(|_| {
                        let a = i % self.size;
                        i /= self.size;
                        a
                    })
                    .collect()
            })
            .collect()
    }

    /// Members of a unary relation, ascending.
    pub fn atoms(&self) -> Vec<usize> {
        self.tuples().into_iter().map(|t| t[0]).collect()
    }

    /// Image under a permutation of the universe.
    pub fn permuted(&self, perm: &[usize]) -> Relation {
        let mut r = Relation::empty(self.size, self.arity);
        for t in self.tuples() {
            let u: Vec<usize> = t.iter().map(|&a| perm[a]).collect();
            r.insert(&u);
        }
        r
    }
}

/// Partial map from `S₁` (by index) into the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abstraction {
    pub kind: AbsOp,
    pub values: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteStructure {
    /// Display labels of the atoms `0..n`.
    pub labels: Vec<i64>,
    /// `families[&n]` is the range of the `n`-ary relation quantifiers.
    pub families: BTreeMap<usize, Vec<Relation>>,
    pub abstraction: Option<Abstraction>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("relation of arity {0} has a tuple of the wrong length")]
    TupleLength(usize),
    #[error("atom {0} is not in the universe")]
    UnknownAtom(i64),
    #[error("abstraction refers to set index {0}, but S1 has fewer members")]
    BadSetIndex(usize),
    #[error("extension map sends two sets to atom {0}")]
    NotInjective(i64),
    #[error("full family of arity {arity} over {size} atoms is too large")]
    TooLarge { size: usize, arity: usize },
    #[error("malformed structure JSON: {0}")]
    Json(String),
    #[error("duplicate atom {0} in universe")]
    DuplicateAtom(i64),
}

impl FiniteStructure {
    /// Universe `{0..size-1}` with the given families and no abstraction map.
    pub fn new(size: usize, families: BTreeMap<usize, Vec<Relation>>) -> FiniteStructure {
        FiniteStructure {
            labels: (0..size as i64).collect(),
            families,
            abstraction: None,
        }
    }

    /// Full powersets for arities 1 and 2 (the standard finite shadow of a
    /// full second-order model).
    pub fn full(size: usize) -> Result<FiniteStructure, StructureError> {
        let mut fam = BTreeMap::new();
        fam.insert(1, full_family(size, 1)?);
        fam.insert(2, full_family(size, 2)?);
        Ok(FiniteStructure::new(size, fam))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn family(&self, arity: usize) -> &[Relation] {
        self.families.get(&arity).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn sets(&self) -> &[Relation] {
        self.family(1)
    }

    pub fn set_index(&self, r: &Relation) -> Option<usize> {
        self.sets().iter().position(|s| s == r)
    }

    /// Attaches a map; `pairs` are (set index in S₁, atom).
    pub fn with_abstraction(
        mut self,
        kind: AbsOp,
        pairs: &[(usize, usize)],
    ) -> Result<FiniteStructure, StructureError> {
        let mut values = vec![None; self.sets().len()];
        for &(i, a) in pairs {
            if i >= values.len() {
                return Err(StructureError::BadSetIndex(i));
            }
            if a >= self.size() {
                return Err(StructureError::UnknownAtom(a as i64));
            }
            values[i] = Some(a);
        }
        let abs = Abstraction { kind, values };
        if kind == AbsOp::Ext {
            if let Some(a) = first_collision(&abs.values) {
                return Err(StructureError::NotInjective(self.labels[a]));
            }
        }
        self.abstraction = Some(abs);
        Ok(self)
    }

    /// Abstraction value of a set in S₁, if defined.
    pub fn abstract_of(&self, set_index: usize) -> Option<usize> {
        self.abstraction.as_ref()?.values.get(set_index).copied().flatten()
    }

    pub fn is_injective(&self) -> bool {
        self.abstraction
            .as_ref()
            .is_none_or(|a| first_collision(&a.values).is_none())
    }

    /// Range of the abstraction map, ascending.
    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self
            .abstraction
            .iter()
            .flat_map(|a| a.values.iter().flatten().copied())
            .collect();
        r.sort_unstable();
        r.dedup();
        r
    }

    /// Same structure with atoms renamed by `perm` (labels stay positional).
    pub fn permuted(&self, perm: &[usize]) -> FiniteStructure {
        FiniteStructure {
            labels: self.labels.clone(),
            families: self
                .families
                .iter()
                .map(|(&n, rs)| (n, rs.iter().map(|r| r.permuted(perm)).collect()))
                .collect(),
            abstraction: self.abstraction.as_ref().map(|a| Abstraction {
                kind: a.kind,
                values: a.values.iter().map(|v| v.map(|x| perm[x])).collect(),
            }),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut rels = serde_json::Map::new();
        for (n, rs) in &self.families {
            let enc: Vec<Value> = rs
                .iter()
                .map(|r| {
                    if *n == 1 {
                        Value::from(r.atoms().iter().map(|&a| self.labels[a]).collect::<Vec<_>>())
                    } else {
                        Value::from(
                            r.tuples()
                                .iter()
                                .map(|t| t.iter().map(|&a| self.labels[a]).collect::<Vec<_>>())
                                .collect::<Vec<_>>(),
                        )
                    }
                })
                .collect();
            rels.insert(n.to_string(), Value::from(enc));
        }
        let mut out = serde_json::json!({"universe": self.labels, "relations": rels});
        if let Some(a) = &self.abstraction {
            let pairs: Vec<(usize, i64)> = a
                .values
                .iter()
                .enumerate()
                .filter_map(|(i, v)| v.map(|x| (i, self.labels[x])))
                .collect();
            let kind = match a.kind {
                AbsOp::Hash => "hash",
                AbsOp::Ext => "ext",
            };
            out["abstraction"] = serde_json::json!({"kind": kind, "pairs": pairs});
        }
        out
    }

    pub fn from_json(v: &Value) -> Result<FiniteStructure, StructureError> {
        let raw: RawStructure =
            serde_json::from_value(v.clone()).map_err(|e| StructureError::Json(e.to_string()))?;
        let size = raw.universe.len();
        let pos = |l: i64| -> Result<usize, StructureError> {
            raw.universe
                .iter()
                .position(|&x| x == l)
                .ok_or(StructureError::UnknownAtom(l))
        };
        for (i, l) in raw.universe.iter().enumerate() {
            if raw.universe[..i].contains(l) {
                return Err(StructureError::DuplicateAtom(*l));
            }
        }
        let mut families = BTreeMap::new();
        for (k, members) in &raw.relations {
            let n: usize = k
                .parse()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| StructureError::Json(format!("bad arity key '{k}'")))?;
            let mut rs = Vec::new();
            for m in members {
                let mut r = Relation::empty(size, n);
                for item in m {
                    let t: Vec<i64> = match item {
                        Value::Number(x) if n == 1 => vec![x.as_i64().ok_or(StructureError::TupleLength(n))?],
                        Value::Array(xs) => xs
                            .iter()
                            .map(|x| x.as_i64().ok_or(StructureError::TupleLength(n)))
                            .collect::<Result<_, _>>()?,
                        _ => return Err(StructureError::TupleLength(n)),
                    };
                    if t.len() != n {
                        return Err(StructureError::TupleLength(n));
                    }
                    let idx: Vec<usize> = t.into_iter().map(pos).collect::<Result<_, _>>()?;
                    r.insert(&idx);
                }
                rs.push(r);
            }
            families.insert(n, rs);
        }
        let s = FiniteStructure {
            labels: raw.universe.clone(),
            families,
            abstraction: None,
        };
        match raw.abstraction {
            None => Ok(s),
            Some(a) => {
                let kind = match a.kind.as_str() {
                    "hash" | "#" => AbsOp::Hash,
                    "ext" => AbsOp::Ext,
                    k => return Err(StructureError::Json(format!("unknown abstraction kind '{k}'"))),
                };
                let pairs: Vec<(usize, usize)> = a
                    .pairs
                    .iter()
                    .map(|&(i, l)| pos(l).map(|p| (i, p)))
                    .collect::<Result<_, _>>()?;
                s.with_abstraction(kind, &pairs)
            }
        }
    }
}

#[derive(Deserialize, Serialize)]
struct RawAbstraction {
    kind: String,
    pairs: Vec<(usize, i64)>,
}

#[derive(Deserialize, Serialize)]
struct RawStructure {
    universe: Vec<i64>,
    #[serde(default)]
    relations: BTreeMap<String, Vec<Vec<Value>>>,
    #[serde(default)]
    abstraction: Option<RawAbstraction>,
}

fn first_collision(values: &[Option<usize>]) -> Option<usize> {
    let mut seen = std::collections::BTreeSet::new();
    values.iter().flatten().find(|&&a| !seen.insert(a)).copied()
}

/// Every `arity`-ary relation on `size` atoms, in bitmask order.
pub fn full_family(size: usize, arity: usize) -> Result<Vec<Relation>, StructureError> {
    let cells = size.pow(arity as u32);
    if cells > 16 {
        return Err(StructureError::TooLarge { size, arity });
    }
    Ok((0..1u64 << cells)
        .map(|mask| {
            let mut r = Relation::empty(size, arity);
            r.bits[0] = mask;
            r
        })
        .collect())
}

pub(super) fn undefined_set(s: &FiniteStructure, r: &Relation) -> EvalError {
    let members: Vec<String> = r.atoms().iter().map(|&a| s.labels[a].to_string()).collect();
    EvalError::AbstractionUndefined(format!("{{{}}}", members.join(",")))
}
