use super::{Graph, VertexSet};

/// Degree statistics and the pendant/support structure used by the bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// Minimum degree over vertices that are not pendant. `None` when there
    /// is no such vertex or `n < 2`.
    pub delta_prime: Option<usize>,
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub leaf_count: usize,
    pub support_count: usize,
    pub is_tree: bool,
    pub is_connected: bool,
    /// Common degree when every vertex has the same degree (and `n >= 1`).
    pub regular_degree: Option<usize>,
}

pub fn structural_summary(g: &Graph) -> StructuralSummary {
    let n = g.order();
    let leaves: VertexSet = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let supports: VertexSet = g
        .vertices()
        .filter(|&v| g.neighbors(v).iter().any(|&u| g.degree(u) == 1))
        .collect();
    let delta_prime = if n < 2 {
        None
    } else {
        g.vertices().map(|v| g.degree(v)).filter(|&d| d != 1).min()
    };
    let max_degree = g.max_degree();
    let min_degree = g.min_degree();
    StructuralSummary {
        n,
        m: g.size(),
        max_degree,
        min_degree,
        delta_prime,
        leaf_count: leaves.len(),
        support_count: supports.len(),
        leaves,
        supports,
        is_tree: g.is_tree(),
        is_connected: g.is_connected(),
        regular_degree: (n >= 1 && max_degree == min_degree).then_some(max_degree),
    }
}

impl StructuralSummary {
    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaves.contains(v)
    }

    pub fn is_support(&self, v: usize) -> bool {
        self.supports.contains(v)
    }
}
