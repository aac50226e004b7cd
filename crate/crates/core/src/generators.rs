//! Deterministic graph families: the regular three-part construction that
//! attains the lower k-limited packing bound, the sharpness families for the
//! packing and domination bounds, and seeded random graphs and trees.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::packing::lemma21_maximality;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("need 1 <= k <= r (got k={k}, r={r})")]
    KOutOfRange { k: u32, r: u32 },
    #[error("multiplier t must be positive")]
    ZeroMultiplier,
    #[error("|V3| = {size} is smaller than k = {k}: V2 vertices would need repeated V3 neighbors")]
    V3TooSmall { size: usize, k: u32 },
    #[error("|V1| = {size} cannot carry an {degree}-regular graph (needs at least {degree} + 1 vertices)")]
    V1TooSmall { size: usize, degree: u32 },
    #[error("|V1| = {size} is odd but the V1 part must be {degree}-regular with odd degree")]
    V1Parity { size: usize, degree: u32 },
    #[error("{family} needs n >= {min} (got {n})")]
    OrderTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("base graph is not a tree")]
    BaseNotTree,
    #[error("at least one pendant per base vertex is required")]
    NoPendants,
    #[error("at least one copy is required")]
    NoCopies,
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("generated graph failed its own check: {0}")]
    Internal(String),
}

/// Parameters and part sizes of the r-regular three-part graph `G_{k,r}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkrBlueprint {
    pub k: u32,
    pub r: u32,
    pub t: usize,
    pub g: usize,
    pub size_v1: usize,
    pub size_v2: usize,
    pub size_v3: usize,
    pub n: usize,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub v3: VertexSet,
}

impl GkrBlueprint {
    fn sizes(k: u32, r: u32, t: usize) -> (usize, usize, usize, usize) {
        let g = (k as usize).gcd(&(r as usize));
        let v2 = t * r as usize / g;
        let v3 = t * k as usize / g;
        let v1 = (r - k) as usize * v2;
        (g, v1, v2, v3)
    }

    /// Feasibility of the wiring for a given multiplier.
    fn check(k: u32, r: u32, t: usize) -> Result<(), GenError> {
        let (_, v1, _, v3) = Self::sizes(k, r, t);
        if v3 < k as usize {
            return Err(GenError::V3TooSmall { size: v3, k });
        }
        let degree = r - 1;
        if v1 > 0 {
            if v1 < r as usize {
                return Err(GenError::V1TooSmall { size: v1, degree });
            }
            if degree % 2 == 1 && v1 % 2 == 1 {
                return Err(GenError::V1Parity { size: v1, degree });
            }
        }
        Ok(())
    }
}

/// Builds `G_{k,r}`. Vertex ids run through `V1`, then `V2`, then `V3`.
///
/// * `V1` carries the circulant `(r-1)`-regular graph with jumps
///   `±1..=±⌊(r-1)/2⌋`, plus the antipodal chord when `r-1` is odd.
/// * `V2` vertex `i` takes `V1` block `[i(r-k), (i+1)(r-k))`.
/// * `V2` vertex `i` is joined to `V3` vertices `(ik + j) mod |V3|`,
///   `j = 0..k`.
///
/// Without `t`, the smallest feasible multiplier is used.
pub fn gen_gkr(k: u32, r: u32, t: Option<usize>) -> Result<(Graph, GkrBlueprint), GenError> {
    if k == 0 || k > r {
        return Err(GenError::KOutOfRange { k, r });
    }
    let t = match t {
        Some(0) => return Err(GenError::ZeroMultiplier),
        Some(t) => {
            GkrBlueprint::check(k, r, t)?;
            t
        }
        None => {
            // t = 2·gcd(k, r) is always feasible, so the search terminates.
            let g = (k as usize).gcd(&(r as usize));
            (1..=2 * g)
                .find(|&t| GkrBlueprint::check(k, r, t).is_ok())
                .expect("t = 2g is feasible")
        }
    };
    let (g, size_v1, size_v2, size_v3) = GkrBlueprint::sizes(k, r, t);
    let n = size_v1 + size_v2 + size_v3;
    let v2_start = size_v1;
    let v3_start = size_v1 + size_v2;

    let mut edges = Vec::new();
    if size_v1 > 0 {
        let half = ((r - 1) / 2) as usize;
        for i in 0..size_v1 {
            for jump in 1..=half {
                edges.push((i, (i + jump) % size_v1));
            }
            if (r - 1) % 2 == 1 {
                edges.push((i, (i + size_v1 / 2) % size_v1));
            }
        }
    }
    let block = (r - k) as usize;
    for i in 0..size_v2 {
        for a in i * block..(i + 1) * block {
            edges.push((a, v2_start + i));
        }
        for j in 0..k as usize {
            edges.push((v2_start + i, v3_start + (i * k as usize + j) % size_v3));
        }
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| GenError::Internal(e.to_string()))?;

    let blueprint = GkrBlueprint {
        k,
        r,
        t,
        g,
        size_v1,
        size_v2,
        size_v3,
        n,
        v1: (0..v2_start).collect(),
        v2: (v2_start..v3_start).collect(),
        v3: (v3_start..n).collect(),
    };
    verify_gkr(&graph, &blueprint)?;
    Ok((graph, blueprint))
}

fn verify_gkr(graph: &Graph, bp: &GkrBlueprint) -> Result<(), GenError> {
    let fail = |what: String| Err(GenError::Internal(what));
    let r = bp.r as usize;
    let k = bp.k as usize;
    let count_in = |v: usize, part: &VertexSet| {
        graph
            .neighbors(v)
            .iter()
            .filter(|&&u| part.contains(u))
            .count()
    };
    if let Some(v) = graph.vertices().find(|&v| graph.degree(v) != r) {
        return fail(format!(
            "vertex {v} has degree {} instead of {r}",
            graph.degree(v)
        ));
    }
    for v in bp.v1.iter() {
        if count_in(v, &bp.v2) != 1 {
            return fail(format!(
                "V1 vertex {v} does not have exactly one V2 neighbor"
            ));
        }
    }
    for v in bp.v2.iter() {
        if count_in(v, &bp.v1) != r - k || count_in(v, &bp.v3) != k {
            return fail(format!(
                "V2 vertex {v} has the wrong split between V1 and V3"
            ));
        }
    }
    for v in bp.v3.iter() {
        if count_in(v, &bp.v2) != r {
            return fail(format!("V3 vertex {v} does not have {r} V2 neighbors"));
        }
    }
    if k * bp.size_v2 != r * bp.size_v3 {
        return fail("V2-V3 edge count mismatch".into());
    }
    if bp.size_v3 * (r * (r - k + 1) + k) != k * bp.n {
        return fail("|V3| differs from kn/(r(r-k+1)+k)".into());
    }
    match lemma21_maximality(graph, &bp.v3, bp.k) {
        Ok(true) => Ok(()),
        _ => fail("V3 is not a maximal k-limited packing".into()),
    }
}

/// `K_{1,n-1}` with center 0.
pub fn gen_star(n: usize) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(GenError::OrderTooSmall {
            family: "star",
            min: 2,
            n,
        });
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("valid star"))
}

pub fn gen_complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::OrderTooSmall {
            family: "complete graph",
            min: 1,
            n,
        });
    }
    Ok(Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid"))
}

pub fn gen_cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::OrderTooSmall {
            family: "cycle",
            min: 3,
            n,
        });
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid"))
}

pub fn gen_path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::OrderTooSmall {
            family: "path",
            min: 1,
            n,
        });
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid"))
}

/// Outer cycle 0..5, inner pentagram 5..10 (step 2), spokes `i, i+5`.
pub fn gen_petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("valid")
}

/// Attaches `per_vertex` new pendants to every vertex of the tree `base`.
/// New ids follow the base ids, grouped by base vertex.
pub fn gen_corona_tree(base: &Graph, per_vertex: usize) -> Result<Graph, GenError> {
    if !base.is_tree() {
        return Err(GenError::BaseNotTree);
    }
    if per_vertex == 0 {
        return Err(GenError::NoPendants);
    }
    let b = base.order();
    let pendants = (0..b).flat_map(|v| (0..per_vertex).map(move |j| (v, b + v * per_vertex + j)));
    Graph::from_edges(b * (1 + per_vertex), base.edges().chain(pendants))
        .map_err(|e| GenError::Internal(e.to_string()))
}

/// `copies` vertex-disjoint copies of `g`; copy `c` uses ids `c·n..(c+1)·n`.
pub fn gen_disjoint_copies(g: &Graph, copies: usize) -> Result<Graph, GenError> {
    if copies == 0 {
        return Err(GenError::NoCopies);
    }
    Ok((1..copies).fold(g.clone(), |acc, _| acc.disjoint_union(g)))
}

/// `G(n, p)`: each pair `u < v`, in lexicographic order, is an edge with
/// probability `p`. The stream is ChaCha8 seeded via `seed_from_u64`, which
/// is fixed across platforms.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("valid"))
}

/// Uniform labeled tree on `n` vertices, decoded from a ChaCha8-drawn Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    match n {
        0 => {
            return Err(GenError::OrderTooSmall {
                family: "tree",
                min: 1,
                n,
            })
        }
        1 => return Ok(Graph::empty(1)),
        2 => return Ok(Graph::from_edges(2, [(0, 1)]).expect("valid")),
        _ => {}
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Ok(Graph::from_edges(n, decode_pruefer(n, &code)).expect("valid"))
}

/// Linear-time Prüfer decoding.
fn decode_pruefer(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &v in code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::structural_summary;

    #[test]
    fn gkr_2_3() {
        let (g, bp) = gen_gkr(2, 3, Some(1)).unwrap();
        assert_eq!((bp.n, bp.size_v1, bp.size_v2, bp.size_v3), (8, 3, 3, 2));
        assert_eq!(g.order(), 8);
        // V1 is a triangle
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));
        assert_eq!(gen_gkr(2, 3, None).unwrap().1.t, 1);
    }

    #[test]
    fn gkr_3_3_is_k33() {
        let (g, bp) = gen_gkr(3, 3, None).unwrap();
        assert_eq!(bp.t, 3);
        assert_eq!((bp.size_v1, bp.size_v2, bp.size_v3), (0, 3, 3));
        assert_eq!(g.size(), 9);
    }

    #[test]
    fn gkr_1_2_is_c5() {
        let (g, bp) = gen_gkr(1, 2, Some(1)).unwrap();
        assert_eq!(bp.n, 5);
        assert!(g.is_connected());
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn gkr_rejects_bad_parameters() {
        assert_eq!(
            gen_gkr(3, 2, None).unwrap_err(),
            GenError::KOutOfRange { k: 3, r: 2 }
        );
        assert_eq!(
            gen_gkr(0, 2, None).unwrap_err(),
            GenError::KOutOfRange { k: 0, r: 2 }
        );
        assert_eq!(
            gen_gkr(2, 3, Some(0)).unwrap_err(),
            GenError::ZeroMultiplier
        );
        assert!(matches!(
            gen_gkr(3, 3, Some(1)),
            Err(GenError::V3TooSmall { .. })
        ));
        // k=1, r=4: |V1| = 3·4t, degree 3 odd, but |V1| is always even; t=1 ok.
        assert!(gen_gkr(1, 4, Some(1)).is_ok());
        // k=2, r=4, t=1: |V2| = 2, |V3| = 1 < 2.
        assert!(matches!(
            gen_gkr(2, 4, Some(1)),
            Err(GenError::V3TooSmall { .. })
        ));
    }

    #[test]
    fn gkr_parity_condition() {
        // k=3, r=4 (g=1), t=1: |V1| = 1·4 = 4 even; degree 3 odd -> fine.
        assert!(gen_gkr(3, 4, Some(1)).is_ok());
        // k=1, r=2 leaves degree 1 on V1; |V1| = 2t is even for every t.
        assert!(gen_gkr(1, 2, Some(3)).is_ok());
        // k=2, r=6 (g=2), t=3: |V1| = 4·9 = 36, ok; t=1: |V3|=1 < 2.
        assert!(matches!(
            gen_gkr(2, 6, Some(1)),
            Err(GenError::V3TooSmall { .. })
        ));
    }

    #[test]
    fn gkr_many_parameters() {
        for r in 1..=6 {
            for k in 1..=r {
                let (g, bp) = gen_gkr(k, r, None).unwrap();
                assert_eq!(g.order(), bp.n);
                assert_eq!(
                    bp.size_v3 * (r * (r - k + 1) + k) as usize,
                    k as usize * bp.n
                );
            }
        }
    }

    #[test]
    fn stars() {
        assert_eq!(gen_star(2).unwrap(), gen_path(2).unwrap());
        let s = structural_summary(&gen_star(5).unwrap());
        assert_eq!((s.max_degree, s.leaf_count, s.support_count), (4, 4, 1));
        assert!(gen_star(1).is_err());
    }

    #[test]
    fn named_families() {
        assert_eq!(gen_cycle(3).unwrap(), gen_complete(3).unwrap());
        assert!(gen_cycle(2).is_err());
        let p = gen_petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
    }

    #[test]
    fn petersen_has_girth_five() {
        let p = gen_petersen();
        // no triangles and no 4-cycles: adjacent vertices share no neighbor,
        // non-adjacent vertices share exactly one.
        for u in p.vertices() {
            for v in u + 1..10 {
                let common = p
                    .neighbors(u)
                    .iter()
                    .filter(|w| p.neighbors(v).contains(w))
                    .count();
                assert_eq!(common, if p.has_edge(u, v) { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn corona_trees() {
        let p3 = gen_path(3).unwrap();
        let t = gen_corona_tree(&p3, 1).unwrap();
        let s = structural_summary(&t);
        assert_eq!((s.n, s.support_count, s.leaf_count), (6, 3, 3));
        assert!(s.is_tree);
        assert_eq!(
            gen_corona_tree(&Graph::empty(1), 4).unwrap(),
            gen_star(5).unwrap()
        );
        let t = gen_corona_tree(&gen_path(2).unwrap(), 2).unwrap();
        let s = structural_summary(&t);
        assert_eq!((s.n, s.leaf_count, s.support_count), (6, 4, 2));
        assert_eq!(
            gen_corona_tree(&gen_cycle(4).unwrap(), 1),
            Err(GenError::BaseNotTree)
        );
    }

    #[test]
    fn disjoint_copies() {
        let p = gen_petersen();
        assert_eq!(gen_disjoint_copies(&p, 1).unwrap(), p);
        let three = gen_disjoint_copies(&p, 3).unwrap();
        assert_eq!((three.order(), three.size()), (30, 45));
        assert!(!three.has_edge(9, 10));
        assert!(gen_disjoint_copies(&p, 0).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(5, 0.0, 7).unwrap(), Graph::empty(5));
        assert_eq!(random_graph(5, 1.0, 7).unwrap(), gen_complete(5).unwrap());
        assert!(random_graph(5, 1.5, 7).is_err());
        assert_eq!(
            random_graph(9, 0.4, 11).unwrap(),
            random_graph(9, 0.4, 11).unwrap()
        );
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..100 {
            for n in [1, 2, 3, 7, 20] {
                let t = random_tree(n, seed).unwrap();
                assert!(t.is_tree(), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn pruefer_known_decoding() {
        // The sequence [3, 3, 3] on 5 vertices is the star centred at 3
        // with 4 joined to 3 last.
        let mut edges = decode_pruefer(5, &[3, 3, 3]);
        edges.sort();
        assert_eq!(edges, vec![(0, 3), (1, 3), (2, 3), (3, 4)]);
    }
}
