use crate::graph::{Graph, VertexSet};

use super::{PackingKind, SolveError};

/// Counts `|N[u] ∩ b|` for every vertex `u`.
fn closed_loads(g: &Graph, member: &[bool]) -> Vec<usize> {
    g.vertices()
        .map(|u| g.closed_neighbors(u).filter(|&w| member[w]).count())
        .collect()
}

fn open_loads(g: &Graph, member: &[bool]) -> Vec<usize> {
    g.vertices()
        .map(|u| g.neighbors(u).iter().filter(|&&w| member[w]).count())
        .collect()
}

fn in_range(g: &Graph, b: &VertexSet) -> bool {
    b.check_range(g.order()).is_ok()
}

/// `|N[u] ∩ b| <= k` for every vertex `u`.
pub fn is_k_limited_packing(g: &Graph, b: &VertexSet, k: u32) -> bool {
    in_range(g, b)
        && closed_loads(g, &b.indicator(g.order()))
            .into_iter()
            .all(|load| load <= k as usize)
}

/// Maximality by the add-test: no vertex outside `b` can be added without
/// breaking the k-limited condition.
pub fn is_maximal_k_limited_packing(g: &Graph, b: &VertexSet, k: u32) -> Result<bool, SolveError> {
    if !is_k_limited_packing(g, b, k) {
        return Err(SolveError::NotAPacking);
    }
    let mut member = b.indicator(g.order());
    for v in g.vertices().filter(|&v| !b.contains(v)) {
        member[v] = true;
        let still_packing = closed_loads(g, &member)
            .into_iter()
            .all(|load| load <= k as usize);
        member[v] = false;
        if still_packing {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximality by the saturation condition: every vertex outside `b` lies in
/// `N[u]` for some `u` with `|N[u] ∩ b| = k`.
pub fn lemma21_maximality(g: &Graph, b: &VertexSet, k: u32) -> Result<bool, SolveError> {
    if !is_k_limited_packing(g, b, k) {
        return Err(SolveError::NotAPacking);
    }
    let loads = closed_loads(g, &b.indicator(g.order()));
    Ok(g.vertices()
        .filter(|&v| !b.contains(v))
        .all(|v| g.closed_neighbors(v).any(|u| loads[u] == k as usize)))
}

/// `|N(v) ∩ b| <= 1` for every vertex `v`.
pub fn is_open_packing(g: &Graph, b: &VertexSet) -> bool {
    in_range(g, b)
        && open_loads(g, &b.indicator(g.order()))
            .into_iter()
            .all(|load| load <= 1)
}

pub fn is_dominating(g: &Graph, b: &VertexSet) -> bool {
    in_range(g, b)
        && closed_loads(g, &b.indicator(g.order()))
            .into_iter()
            .all(|load| load >= 1)
}

/// Every vertex, including members of `b`, has a neighbor in `b`.
pub fn is_total_dominating(g: &Graph, b: &VertexSet) -> bool {
    in_range(g, b)
        && open_loads(g, &b.indicator(g.order()))
            .into_iter()
            .all(|load| load >= 1)
}

/// Dispatches on `kind`.
pub fn satisfies(g: &Graph, b: &VertexSet, kind: PackingKind) -> bool {
    match kind {
        PackingKind::KLimited(k) => k >= 1 && is_k_limited_packing(g, b, k),
        PackingKind::OpenPacking => is_open_packing(g, b),
        PackingKind::Dominating => is_dominating(g, b),
        PackingKind::TotalDominating => is_total_dominating(g, b),
    }
}
