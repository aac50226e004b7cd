use crate::graph::Graph;

use super::SolveError;

/// Largest order the bitset solvers accept.
pub(crate) const LIMIT: usize = 64;

/// Closed and open neighborhoods as `u64` bitsets.
pub(crate) struct Masks {
    pub closed: Vec<u64>,
    pub open: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph, limit: usize) -> Result<Self, SolveError> {
        let n = g.order();
        let limit = limit.min(LIMIT);
        if n > limit {
            return Err(SolveError::TooLarge { n, limit });
        }
        let open: Vec<u64> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
            .collect();
        let closed = open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
        Ok(Masks { closed, open })
    }
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// `|nbhd[u] ∩ set| <= k` for every `u`.
pub(crate) fn within_budget(nbhd: &[u64], set: u64, k: u32) -> bool {
    nbhd.iter().all(|&nb| (nb & set).count_ones() <= k)
}
