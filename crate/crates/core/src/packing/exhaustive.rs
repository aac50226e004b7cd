//! Reference tier: enumerate every subset of `V` in ascending bitmask order
//! and keep the first optimum. Exponential by construction; intended for
//! small graphs and for checking the branch-and-bound tier.

use crate::graph::{Graph, VertexSet};

use super::masks::{self, full, within_budget, Masks};
use super::{
    check_total_domination_input, Optimality, PackingCertificate, PackingKind, SolveError,
};

/// Largest order accepted by this tier.
pub const LIMIT: usize = 24;

fn all_subsets(n: usize) -> impl Iterator<Item = u64> {
    0..=full(n)
}

fn best_by<F, P>(n: usize, accept: P, better: F) -> Option<u64>
where
    P: Fn(u64) -> bool,
    F: Fn(u32, u32) -> bool,
{
    let mut best: Option<u64> = None;
    for set in all_subsets(n).filter(|&s| accept(s)) {
        if best.map_or(true, |b| better(set.count_ones(), b.count_ones())) {
            best = Some(set);
        }
    }
    best
}

fn is_maximal(nbhd: &[u64], set: u64, k: u32) -> bool {
    masks::bits(full(nbhd.len()) & !set).all(|v| !within_budget(nbhd, set | 1 << v, k))
}

fn covers(nbhd: &[u64], set: u64) -> bool {
    let covered = masks::bits(set).fold(0, |acc, v| acc | nbhd[v]);
    covered == full(nbhd.len())
}

fn finish(
    g: &Graph,
    kind: PackingKind,
    optimality: Optimality,
    set: Option<u64>,
) -> Result<PackingCertificate, SolveError> {
    let set = set.ok_or_else(|| SolveError::Internal(format!("no feasible {kind} found")))?;
    PackingCertificate::certify(g, kind, optimality, VertexSet::from_mask(set))
}

pub fn max_k_limited_packing(g: &Graph, k: u32) -> Result<PackingCertificate, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK);
    }
    let m = Masks::new(g, LIMIT)?;
    let best = best_by(g.order(), |s| within_budget(&m.closed, s, k), |a, b| a > b);
    finish(g, PackingKind::KLimited(k), Optimality::Maximum, best)
}

pub fn min_maximal_k_limited_packing(g: &Graph, k: u32) -> Result<PackingCertificate, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidK);
    }
    let m = Masks::new(g, LIMIT)?;
    let best = best_by(
        g.order(),
        |s| within_budget(&m.closed, s, k) && is_maximal(&m.closed, s, k),
        |a, b| a < b,
    );
    finish(
        g,
        PackingKind::KLimited(k),
        Optimality::MinimumMaximal,
        best,
    )
}

pub fn max_open_packing(g: &Graph) -> Result<PackingCertificate, SolveError> {
    let m = Masks::new(g, LIMIT)?;
    let best = best_by(g.order(), |s| within_budget(&m.open, s, 1), |a, b| a > b);
    finish(g, PackingKind::OpenPacking, Optimality::Maximum, best)
}

pub fn domination_number(g: &Graph) -> Result<PackingCertificate, SolveError> {
    let m = Masks::new(g, LIMIT)?;
    let best = best_by(g.order(), |s| covers(&m.closed, s), |a, b| a < b);
    finish(g, PackingKind::Dominating, Optimality::Minimum, best)
}

pub fn total_domination_number(g: &Graph) -> Result<PackingCertificate, SolveError> {
    check_total_domination_input(g)?;
    let m = Masks::new(g, LIMIT)?;
    let best = best_by(g.order(), |s| covers(&m.open, s), |a, b| a < b);
    finish(g, PackingKind::TotalDominating, Optimality::Minimum, best)
}

/// Every k-limited packing of `g`, as vertex sets in ascending mask order.
pub fn all_k_limited_packings(g: &Graph, k: u32) -> Result<Vec<VertexSet>, SolveError> {
    let m = Masks::new(g, LIMIT)?;
    Ok(all_subsets(g.order())
        .filter(|&s| within_budget(&m.closed, s, k))
        .map(VertexSet::from_mask)
        .collect())
}

/// First set (ascending mask order) of exactly `size` vertices that contains
/// `required` and satisfies `kind`.
pub fn find_containing(
    g: &Graph,
    kind: PackingKind,
    size: usize,
    required: &VertexSet,
) -> Result<Option<VertexSet>, SolveError> {
    let m = Masks::new(g, LIMIT)?;
    let required = required.to_mask();
    let (nbhd, k) = match kind {
        PackingKind::KLimited(k) => (&m.closed, k),
        PackingKind::OpenPacking => (&m.open, 1),
        _ => {
            return Ok(all_subsets(g.order())
                .filter(|&s| s & required == required && s.count_ones() as usize == size)
                .map(VertexSet::from_mask)
                .find(|s| super::satisfies(g, s, kind)))
        }
    };
    Ok(all_subsets(g.order())
        .find(|&s| {
            s & required == required && s.count_ones() as usize == size && within_budget(nbhd, s, k)
        })
        .map(VertexSet::from_mask))
}
