//! The canonical models `H_κ = ω + κ + 1` for finite `κ`, with `#` sending a
//! set to its cardinality, on the finite-or-cofinite sets.
//!
//! Every infinite subset of a countable ordinal has cardinality `ω`, so `#`
//! only ever hits the naturals and `ω`; `ω+1, …, ω+κ` are left over.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

pub const MAX_KAPPA: u32 = 20;

/// `Nat(n) < OmegaPlus(j)` for all `n`, `j`; `OmegaPlus(0)` is `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrdElem {
    Nat(u64),
    OmegaPlus(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HMode {
    Finite,
    Cofinite,
}

/// `exceptions` are the members of a finite set and the non-members of a
/// cofinite one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HSet {
    pub mode: HMode,
    pub exceptions: BTreeSet<OrdElem>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HModelError {
    #[error("kappa {0} exceeds the cap {MAX_KAPPA}")]
    KappaTooLarge(u32),
    #[error("{0} is not an element of H_{1}")]
    OutOfUniverse(OrdElem, u32),
    #[error("{0} is in the range of #")]
    InRange(OrdElem),
    #[error("map {map} {kind} the classes of {a} and {b}")]
    HumeViolation {
        map: u8,
        kind: &'static str,
        a: String,
        b: String,
    },
    #[error("map {map} has no value on {set}")]
    Undefined { map: u8, set: String },
    #[error("cannot parse ordinal element '{0}'")]
    Parse(String),
}

impl OrdElem {
    pub fn in_universe(self, kappa: u32) -> bool {
        match self {
            OrdElem::Nat(_) => true,
            OrdElem::OmegaPlus(j) => j <= kappa,
        }
    }
}

impl fmt::Display for OrdElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdElem::Nat(n) => write!(f, "n:{n}"),
            OrdElem::OmegaPlus(j) => write!(f, "w+{j}"),
        }
    }
}

impl FromStr for OrdElem {
    type Err = HModelError;

    fn from_str(s: &str) -> Result<OrdElem, HModelError> {
        let t = s.trim();
        let bad = || HModelError::Parse(t.to_string());
        if t == "w" {
            return Ok(OrdElem::OmegaPlus(0));
        }
        if let Some(n) = t.strip_prefix("n:") {
            return n.parse().map(OrdElem::Nat).map_err(|_| bad());
        }
        if let Some(j) = t.strip_prefix("w+") {
            return j.parse().map(OrdElem::OmegaPlus).map_err(|_| bad());
        }
        Err(bad())
    }
}

impl Serialize for OrdElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for OrdElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<OrdElem, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl HSet {
    pub fn finite(xs: impl IntoIterator<Item = OrdElem>) -> HSet {
        HSet {
            mode: HMode::Finite,
            exceptions: xs.into_iter().collect(),
        }
    }

    pub fn cofinite(xs: impl IntoIterator<Item = OrdElem>) -> HSet {
        HSet {
            mode: HMode::Cofinite,
            exceptions: xs.into_iter().collect(),
        }
    }

    pub fn empty() -> HSet {
        HSet::finite([])
    }

    pub fn contains(&self, x: OrdElem) -> bool {
        self.exceptions.contains(&x) == (self.mode == HMode::Finite)
    }

    pub fn complement(&self) -> HSet {
        HSet {
            mode: match self.mode {
                HMode::Finite => HMode::Cofinite,
                HMode::Cofinite => HMode::Finite,
            },
            exceptions: self.exceptions.clone(),
        }
    }

    pub fn union(&self, other: &HSet) -> HSet {
        use HMode::*;
        let (a, b) = (&self.exceptions, &other.exceptions);
        match (self.mode, other.mode) {
            (Finite, Finite) => HSet::finite(a.union(b).copied()),
            (Cofinite, Cofinite) => HSet::cofinite(a.intersection(b).copied()),
            (Finite, Cofinite) => HSet::cofinite(b.difference(a).copied()),
            (Cofinite, Finite) => HSet::cofinite(a.difference(b).copied()),
        }
    }

    pub fn intersect(&self, other: &HSet) -> HSet {
        self.complement().union(&other.complement()).complement()
    }

    /// Image under a bijection of `H_κ` that moves finitely many points.
    pub fn image(&self, f: impl Fn(OrdElem) -> OrdElem) -> HSet {
        HSet {
            mode: self.mode,
            exceptions: self.exceptions.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn in_universe(&self, kappa: u32) -> bool {
        self.exceptions.iter().all(|x| x.in_universe(kappa))
    }
}

impl fmt::Display for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.exceptions.iter().map(OrdElem::to_string).collect();
        match self.mode {
            HMode::Finite => write!(f, "{{{}}}", xs.join(", ")),
            HMode::Cofinite => write!(f, "H - {{{}}}", xs.join(", ")),
        }
    }
}

fn check_kappa(kappa: u32) -> Result<(), HModelError> {
    if kappa > MAX_KAPPA {
        return Err(HModelError::KappaTooLarge(kappa));
    }
    Ok(())
}

pub fn h_card(_kappa: u32, x: &HSet) -> OrdElem {
    match x.mode {
        HMode::Finite => OrdElem::Nat(x.exceptions.len() as u64),
        HMode::Cofinite => OrdElem::OmegaPlus(0),
    }
}

/// Elements `Nat(0..=κ+2)` and `ω..ω+κ` that no set of the fragment reaches.
///
/// `h_card` depends only on the mode and the number of exceptions, so one set
/// per (mode, count) covers every value the fragment can produce below the
/// scanned bound.
pub fn h_range_complement(kappa: u32) -> Result<Vec<OrdElem>, HModelError> {
    check_kappa(kappa)?;
    let bound = kappa as u64 + 2;
    let candidates: Vec<OrdElem> = (0..=bound)
        .map(OrdElem::Nat)
        .chain((0..=kappa).map(OrdElem::OmegaPlus))
        .collect();
    let mut hit = BTreeSet::new();
    for k in 0..=candidates.len() {
        let xs = candidates[..k].iter().copied();
        hit.insert(h_card(kappa, &HSet::finite(xs.clone())));
        hit.insert(h_card(kappa, &HSet::cofinite(xs)));
    }
    Ok(candidates.into_iter().filter(|e| !hit.contains(e)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapReport {
    pub kappa: u32,
    pub beta: OrdElem,
    pub gamma: OrdElem,
    pub checked: usize,
    /// Test sets on which `f(#X) ≠ #(f̄ X)`.
    pub failures: Vec<HSet>,
    pub passed: bool,
}

fn outside_range(kappa: u32, e: OrdElem) -> Result<(), HModelError> {
    if !e.in_universe(kappa) {
        return Err(HModelError::OutOfUniverse(e, kappa));
    }
    match e {
        OrdElem::OmegaPlus(j) if j >= 1 => Ok(()),
        _ => Err(HModelError::InRange(e)),
    }
}

/// Checks that the transposition of `β` and `γ` commutes with `#`.
pub fn h_swap_check(kappa: u32, beta: OrdElem, gamma: OrdElem, tests: &[HSet]) -> Result<SwapReport, HModelError> {
    check_kappa(kappa)?;
    outside_range(kappa, beta)?;
    outside_range(kappa, gamma)?;
    let f = |x: OrdElem| {
        if x == beta {
            gamma
        } else if x == gamma {
            beta
        } else {
            x
        }
    };
    let failures: Vec<HSet> = tests
        .iter()
        .filter(|x| f(h_card(kappa, x)) != h_card(kappa, &x.image(f)))
        .cloned()
        .collect();
    Ok(SwapReport {
        kappa,
        beta,
        gamma,
        checked: tests.len(),
        passed: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    /// `(#₁X, #₂X)` once per equinumerosity class.
    pub mapping: Vec<(OrdElem, OrdElem)>,
    pub well_defined: bool,
    pub bijective: bool,
    pub commutes: bool,
}

/// Both maps must be constant on equinumerosity classes and separate them.
fn check_hume(map: u8, family: &[HSet], sharp: &BTreeMap<HSet, OrdElem>, kappa: u32) -> Result<(), HModelError> {
    let value = |x: &HSet| {
        sharp.get(x).copied().ok_or_else(|| HModelError::Undefined {
            map,
            set: x.to_string(),
        })
    };
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            let same_class = h_card(kappa, a) == h_card(kappa, b);
            let same_value = value(a)? == value(b)?;
            if same_class != same_value {
                return Err(HModelError::HumeViolation {
                    map,
                    kind: if same_class { "splits" } else { "merges" },
                    a: a.to_string(),
                    b: b.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// `Γ(#₁X) = #₂X` on a finite family, checked exhaustively.
pub fn h_gamma_iso(
    kappa: u32,
    family: &[HSet],
    sharp1: &BTreeMap<HSet, OrdElem>,
    sharp2: &BTreeMap<HSet, OrdElem>,
) -> Result<GammaReport, HModelError> {
    check_kappa(kappa)?;
    check_hume(1, family, sharp1, kappa)?;
    check_hume(2, family, sharp2, kappa)?;
    let mut gamma: BTreeMap<OrdElem, OrdElem> = BTreeMap::new();
    let mut well_defined = true;
    for x in family {
        let (a, b) = (sharp1[x], sharp2[x]);
        if *gamma.entry(a).or_insert(b) != b {
            well_defined = false;
        }
    }
    let image: BTreeSet<OrdElem> = gamma.values().copied().collect();
    let targets: BTreeSet<OrdElem> = family.iter().map(|x| sharp2[x]).collect();
    let bijective = image.len() == gamma.len() && image == targets;
    let commutes = family.iter().all(|x| gamma.get(&sharp1[x]) == Some(&sharp2[x]));
    Ok(GammaReport {
        mapping: gamma.into_iter().collect(),
        well_defined,
        bijective,
        commutes,
    })
}

/// `h_card` as a table on `family`.
pub fn card_table(kappa: u32, family: &[HSet]) -> BTreeMap<HSet, OrdElem> {
    family.iter().map(|x| (x.clone(), h_card(kappa, x))).collect()
}

/// Every finite and cofinite set with exceptions among `Nat(0..nats)` and
/// `ω..ω+κ`.
pub fn h_pool(kappa: u32, nats: u64) -> Vec<HSet> {
    let elems: Vec<OrdElem> = (0..nats)
        .map(OrdElem::Nat)
        .chain((0..=kappa).map(OrdElem::OmegaPlus))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << elems.len() {
        let xs: Vec<OrdElem> = (0..elems.len()).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]).collect();
        out.push(HSet::finite(xs.clone()));
        out.push(HSet::cofinite(xs));
    }
    out
}

impl PartialOrd for HSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |x: &HSet| (x.mode == HMode::Cofinite, x.exceptions.clone());
        key(self).cmp(&key(other))
    }
}
