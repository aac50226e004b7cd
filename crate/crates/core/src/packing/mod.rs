//! Predicates and exact solvers for k-limited packings, open packings and
//! (total) dominating sets.
//!
//! Two solver tiers exist. [`exhaustive`] enumerates every vertex subset and
//! is the reference used in tests. [`search`] is a branch-and-bound over
//! ascending vertex ids with bitset neighborhood counting, and backs the
//! top-level functions in this module. Both work on graphs with at most 64
//! vertices (the exhaustive tier is further capped at
//! [`exhaustive::LIMIT`]); the `k >= Δ + 1` short-circuit for k-limited
//! packings applies at any size.

mod anchored;
pub mod exhaustive;
mod masks;
mod predicates;
pub mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use anchored::{
    designated_pendants, packing_anchors, pendant_anchored_max_open_packing,
    pendant_anchored_max_packing, AnchoredPacking,
};
pub use predicates::{
    is_dominating, is_k_limited_packing, is_maximal_k_limited_packing, is_open_packing,
    is_total_dominating, lemma21_maximality, satisfies,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("graph has {n} vertices, solver limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {0} is isolated, so no total dominating set exists")]
    IsolatedVertex(usize),
    #[error("total domination needs at least 2 vertices")]
    TooSmall,
    #[error("not a k-limited packing")]
    NotAPacking,
    #[error("not a tree")]
    NotATree,
    #[error("no maximum {0} contains every designated pendant")]
    AnchoringFailed(PackingKind),
    #[error("internal verification failed: {0}")]
    Internal(String),
}

/// Which defining predicate a vertex set is claimed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum PackingKind {
    /// `|N[v] ∩ B| <= k` for every `v`. A packing is `KLimited(1)`.
    KLimited(u32),
    /// `|N(v) ∩ B| <= 1` for every `v`.
    OpenPacking,
    Dominating,
    TotalDominating,
}

impl PackingKind {
    pub const PACKING: PackingKind = PackingKind::KLimited(1);
}

impl fmt::Display for PackingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackingKind::KLimited(1) => write!(f, "packing"),
            PackingKind::KLimited(k) => write!(f, "{k}-limited packing"),
            PackingKind::OpenPacking => write!(f, "open packing"),
            PackingKind::Dominating => write!(f, "dominating set"),
            PackingKind::TotalDominating => write!(f, "total dominating set"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Optimality {
    Maximum,
    MinimumMaximal,
    Minimum,
    WitnessOnly,
}

/// A vertex set together with the role it is claimed to play.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingCertificate {
    pub kind: PackingKind,
    pub set: VertexSet,
    pub optimality: Optimality,
    pub value: usize,
    pub verified: bool,
}

impl PackingCertificate {
    /// Unverified certificate.
    pub fn new(kind: PackingKind, optimality: Optimality, set: VertexSet) -> Self {
        PackingCertificate {
            kind,
            value: set.len(),
            set,
            optimality,
            verified: false,
        }
    }

    /// Re-checks the defining predicate (and maximality for
    /// `MinimumMaximal`) on `g`, updating and returning `verified`.
    /// Optimality itself is not re-proved here.
    pub fn verify(&mut self, g: &Graph) -> bool {
        let in_range = self.set.check_range(g.order()).is_ok();
        let mut ok = in_range && self.value == self.set.len() && satisfies(g, &self.set, self.kind);
        if ok && self.optimality == Optimality::MinimumMaximal {
            if let PackingKind::KLimited(k) = self.kind {
                ok = is_maximal_k_limited_packing(g, &self.set, k).unwrap_or(false);
            }
        }
        self.verified = ok;
        ok
    }

    /// Builds and verifies, failing loudly if the set does not check out.
    pub(crate) fn certify(
        g: &Graph,
        kind: PackingKind,
        optimality: Optimality,
        set: VertexSet,
    ) -> Result<Self, SolveError> {
        let mut cert = PackingCertificate::new(kind, optimality, set);
        if cert.verify(g) {
            Ok(cert)
        } else {
            Err(SolveError::Internal(format!(
                "{} {:?} failed verification as a {kind}",
                cert.set, optimality
            )))
        }
    }
}

/// The seven invariants, with `k` where it applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    /// `L_k`: maximum k-limited packing.
    LimitedPacking(u32),
    /// `L^ℓ_k`: minimum maximal k-limited packing.
    LowerLimitedPacking(u32),
    /// `ρ = L_1`.
    Packing,
    /// `ρ_L = L^ℓ_1`.
    LowerPacking,
    /// `ρ^o`.
    OpenPacking,
    /// `γ`.
    Domination,
    /// `γ_t`.
    TotalDomination,
}

impl Invariant {
    /// Short name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Invariant::LimitedPacking(_) => "Lk",
            Invariant::LowerLimitedPacking(_) => "LLk",
            Invariant::Packing => "rho",
            Invariant::LowerPacking => "rhoL",
            Invariant::OpenPacking => "rhoO",
            Invariant::Domination => "gamma",
            Invariant::TotalDomination => "gammaT",
        }
    }

    pub fn k(&self) -> Option<u32> {
        match *self {
            Invariant::LimitedPacking(k) | Invariant::LowerLimitedPacking(k) => Some(k),
            _ => None,
        }
    }

    /// Parses a command-line name; `k` is used by `Lk` and `LLk` only.
    pub fn from_name(name: &str, k: u32) -> Option<Self> {
        Some(match name {
            "Lk" => Invariant::LimitedPacking(k),
            "LLk" => Invariant::LowerLimitedPacking(k),
            "rho" => Invariant::Packing,
            "rhoL" => Invariant::LowerPacking,
            "rhoO" => Invariant::OpenPacking,
            "gamma" => Invariant::Domination,
            "gammaT" => Invariant::TotalDomination,
            _ => return None,
        })
    }

    /// Whether the value needs a minimum-maximal search, which is the most
    /// expensive family.
    pub fn is_lower(&self) -> bool {
        matches!(
            self,
            Invariant::LowerLimitedPacking(_) | Invariant::LowerPacking
        )
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Exhaustive,
    BranchAndBound,
}

impl FromStr for Tier {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Tier::Exhaustive),
            "bnb" | "branch-and-bound" => Ok(Tier::BranchAndBound),
            _ => Err(format!("unknown solver tier {s:?}")),
        }
    }
}

/// Computes `invariant` on `g` with the chosen tier.
pub fn solve(
    g: &Graph,
    invariant: Invariant,
    tier: Tier,
) -> Result<PackingCertificate, SolveError> {
    match tier {
        Tier::BranchAndBound => match invariant {
            Invariant::LimitedPacking(k) => max_k_limited_packing(g, k),
            Invariant::LowerLimitedPacking(k) => min_maximal_k_limited_packing(g, k),
            Invariant::Packing => max_packing(g),
            Invariant::LowerPacking => min_maximal_packing(g),
            Invariant::OpenPacking => max_open_packing(g),
            Invariant::Domination => domination_number(g),
            Invariant::TotalDomination => total_domination_number(g),
        },
        Tier::Exhaustive => match invariant {
            Invariant::LimitedPacking(k) => exhaustive::max_k_limited_packing(g, k),
            Invariant::LowerLimitedPacking(k) => exhaustive::min_maximal_k_limited_packing(g, k),
            Invariant::Packing => exhaustive::max_k_limited_packing(g, 1),
            Invariant::LowerPacking => exhaustive::min_maximal_k_limited_packing(g, 1),
            Invariant::OpenPacking => exhaustive::max_open_packing(g),
            Invariant::Domination => exhaustive::domination_number(g),
            Invariant::TotalDomination => exhaustive::total_domination_number(g),
        },
    }
}

/// `true` when `k >= Δ + 1`, where every vertex set is a k-limited packing.
fn k_exceeds_closed_degrees(g: &Graph, k: u32) -> bool {
    k as usize > g.max_degree()
}

fn whole_vertex_set(
    g: &Graph,
    k: u32,
    optimality: Optimality,
) -> Result<PackingCertificate, SolveError> {
    PackingCertificate::certify(
        g,
        PackingKind::KLimited(k),
        optimality,
        g.vertices().collect(),
    )
}

/// `L_k(g)` with a maximum k-limited packing as witness.
pub fn max_k_limited_packing(g: &Graph, k: u32) -> Result<PackingCertificate, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK);
    }
    if k_exceeds_closed_degrees(g, k) {
        return whole_vertex_set(g, k, Optimality::Maximum);
    }
    let masks = masks::Masks::new(g, masks::LIMIT)?;
    let set = search::max_limited(&masks.closed, k);
    PackingCertificate::certify(
        g,
        PackingKind::KLimited(k),
        Optimality::Maximum,
        VertexSet::from_mask(set),
    )
}

/// `L^ℓ_k(g)`: a smallest k-limited packing that admits no further vertex.
pub fn min_maximal_k_limited_packing(g: &Graph, k: u32) -> Result<PackingCertificate, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK);
    }
    if k_exceeds_closed_degrees(g, k) {
        return whole_vertex_set(g, k, Optimality::MinimumMaximal);
    }
    let masks = masks::Masks::new(g, masks::LIMIT)?;
    let set = search::min_maximal_limited(&masks.closed, k);
    PackingCertificate::certify(
        g,
        PackingKind::KLimited(k),
        Optimality::MinimumMaximal,
        VertexSet::from_mask(set),
    )
}

/// `ρ(g)`.
pub fn max_packing(g: &Graph) -> Result<PackingCertificate, SolveError> {
    max_k_limited_packing(g, 1)
}

/// `ρ_L(g)`.
pub fn min_maximal_packing(g: &Graph) -> Result<PackingCertificate, SolveError> {
    min_maximal_k_limited_packing(g, 1)
}

/// `ρ^o(g)`.
pub fn max_open_packing(g: &Graph) -> Result<PackingCertificate, SolveError> {
    let masks = masks::Masks::new(g, masks::LIMIT)?;
    let set = search::max_limited(&masks.open, 1);
    PackingCertificate::certify(
        g,
        PackingKind::OpenPacking,
        Optimality::Maximum,
        VertexSet::from_mask(set),
    )
}

/// `γ(g)`; the null graph has `γ = 0`.
pub fn domination_number(g: &Graph) -> Result<PackingCertificate, SolveError> {
    let masks = masks::Masks::new(g, masks::LIMIT)?;
    let set = search::min_cover(&masks.closed);
    PackingCertificate::certify(
        g,
        PackingKind::Dominating,
        Optimality::Minimum,
        VertexSet::from_mask(set),
    )
}

/// `γ_t(g)`. Requires `n >= 2` and no isolated vertex.
pub fn total_domination_number(g: &Graph) -> Result<PackingCertificate, SolveError> {
    check_total_domination_input(g)?;
    let masks = masks::Masks::new(g, masks::LIMIT)?;
    let set = search::min_cover(&masks.open);
    PackingCertificate::certify(
        g,
        PackingKind::TotalDominating,
        Optimality::Minimum,
        VertexSet::from_mask(set),
    )
}

fn check_total_domination_input(g: &Graph) -> Result<(), SolveError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(SolveError::IsolatedVertex(v));
    }
    if g.order() < 2 {
        return Err(SolveError::TooSmall);
    }
    Ok(())
}
