//! Maximum packings and open packings that contain a pendant neighbor of
//! every support vertex, built by exchanging vertices of an arbitrary optimum.

use crate::graph::{Graph, VertexSet};

use super::{
    exhaustive, max_open_packing, max_packing, satisfies, Optimality, PackingCertificate,
    PackingKind, SolveError,
};

/// Result of the anchoring procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredPacking {
    pub certificate: PackingCertificate,
    /// `(support, pendant)` pairs the set is required to honor.
    pub anchors: Vec<(usize, usize)>,
    /// `(removed, added)` exchanges performed, in order.
    pub swaps: Vec<(usize, usize)>,
    /// Set when the exchange procedure got stuck and the exhaustive anchored
    /// search produced the set instead.
    pub used_fallback: bool,
}

/// `(support, pendant)` for every support vertex, ascending by support, where
/// the pendant is the lowest-id pendant neighbor of that support.
pub fn designated_pendants(g: &Graph) -> Vec<(usize, usize)> {
    g.vertices()
        .filter_map(|v| {
            g.neighbors(v)
                .iter()
                .find(|&&u| g.degree(u) == 1)
                .map(|&leaf| (v, leaf))
        })
        .collect()
}

/// The anchors a packing can honor. In a `K2` component each endpoint is the
/// other's designated pendant and no packing holds both, so only the pair
/// whose support has the lower id is kept there.
pub fn packing_anchors(g: &Graph) -> Vec<(usize, usize)> {
    designated_pendants(g)
        .into_iter()
        .filter(|&(support, leaf)| !(g.degree(support) == 1 && leaf < support))
        .collect()
}

pub fn pendant_anchored_max_packing(g: &Graph) -> Result<AnchoredPacking, SolveError> {
    let start = max_packing(g)?;
    anchor(g, PackingKind::PACKING, start, packing_anchors(g))
}

pub fn pendant_anchored_max_open_packing(g: &Graph) -> Result<AnchoredPacking, SolveError> {
    let start = max_open_packing(g)?;
    anchor(g, PackingKind::OpenPacking, start, designated_pendants(g))
}

/// The vertices whose membership can block `leaf`: for a packing the closed
/// neighborhood of its support, for an open packing the open one.
fn blockers(g: &Graph, kind: PackingKind, support: usize, set: &VertexSet) -> Vec<usize> {
    match kind {
        PackingKind::OpenPacking => g
            .neighbors(support)
            .iter()
            .copied()
            .filter(|&u| set.contains(u))
            .collect(),
        _ => g
            .closed_neighbors(support)
            .filter(|&u| set.contains(u))
            .collect(),
    }
}

fn anchor(
    g: &Graph,
    kind: PackingKind,
    start: PackingCertificate,
    anchors: Vec<(usize, usize)>,
) -> Result<AnchoredPacking, SolveError> {
    let value = start.value;
    let mut set = start.set;
    let mut swaps = Vec::new();
    let mut stuck = false;

    for (i, &(support, leaf)) in anchors.iter().enumerate() {
        if set.contains(leaf) {
            continue;
        }
        // The set is maximum, so the leaf is blocked by exactly one vertex.
        let [blocker] = blockers(g, kind, support, &set)[..] else {
            stuck = true;
            break;
        };
        set.remove(blocker);
        set.insert(leaf);
        swaps.push((blocker, leaf));
        let earlier_kept = anchors[..i].iter().all(|&(_, l)| set.contains(l));
        if !(earlier_kept && set.len() == value && satisfies(g, &set, kind)) {
            stuck = true;
            break;
        }
    }

    let used_fallback = stuck;
    if stuck {
        let required: VertexSet = anchors.iter().map(|&(_, leaf)| leaf).collect();
        set = exhaustive::find_containing(g, kind, value, &required)?
            .ok_or(SolveError::AnchoringFailed(kind))?;
    }
    let certificate = PackingCertificate::certify(g, kind, Optimality::Maximum, set)?;
    Ok(AnchoredPacking {
        certificate,
        anchors,
        swaps,
        used_fallback,
    })
}

impl AnchoredPacking {
    /// Every anchored pendant is in the set.
    pub fn honors_anchors(&self) -> bool {
        self.anchors
            .iter()
            .all(|&(_, leaf)| self.certificate.set.contains(leaf))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn designated_pendant_is_lowest_leaf() {
        assert_eq!(designated_pendants(&star(5)), vec![(0, 1)]);
        assert_eq!(designated_pendants(&path(4)), vec![(1, 0), (2, 3)]);
    }

    #[test]
    fn star_packing_uses_a_leaf() {
        let a = pendant_anchored_max_packing(&star(5)).unwrap();
        assert_eq!(a.certificate.set.as_slice(), &[1]);
        assert_eq!(a.certificate.value, 1);
        assert!(!a.used_fallback);
    }

    #[test]
    fn p4_packing_is_both_ends() {
        let a = pendant_anchored_max_packing(&path(4)).unwrap();
        assert_eq!(a.certificate.set.as_slice(), &[0, 3]);
        assert!(a.honors_anchors());
    }

    #[test]
    fn star_open_packing() {
        let a = pendant_anchored_max_open_packing(&star(5)).unwrap();
        assert_eq!(a.certificate.value, 2);
        assert!(a.certificate.set.contains(1));
        assert!(!a.used_fallback);
    }

    #[test]
    fn p4_open_packing_contains_ends() {
        let a = pendant_anchored_max_open_packing(&path(4)).unwrap();
        assert_eq!(a.certificate.value, 2);
        assert!(a.certificate.set.contains(0) && a.certificate.set.contains(3));
    }

    #[test]
    fn k2_keeps_one_anchor_for_packings() {
        let k2 = path(2);
        assert_eq!(designated_pendants(&k2), vec![(0, 1), (1, 0)]);
        assert_eq!(packing_anchors(&k2), vec![(0, 1)]);
        let a = pendant_anchored_max_packing(&k2).unwrap();
        assert_eq!(a.certificate.set.as_slice(), &[1]);
        let o = pendant_anchored_max_open_packing(&k2).unwrap();
        assert_eq!(o.certificate.set.as_slice(), &[0, 1]);
        assert!(o.honors_anchors());
    }

    #[test]
    fn vacuous_without_supports() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let a = pendant_anchored_max_open_packing(&c6).unwrap();
        assert!(a.anchors.is_empty() && a.swaps.is_empty());
        assert_eq!(a.certificate.value, 2);
    }
}
