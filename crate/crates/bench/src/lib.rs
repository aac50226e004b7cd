//! Fixed inputs shared by the benchmarks.

use limpack::generators::{gen_gkr, gen_path, gen_petersen, random_graph, random_tree};
use limpack::{emit_graph6, Graph};

/// Named graphs of 10 to 20 vertices for the exponential solvers.
pub fn solver_inputs() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", gen_petersen()),
        ("gkr_2_3", gen_gkr(2, 3, Some(2)).unwrap().0),
        ("gnp_14_0.3", random_graph(14, 0.3, 7).unwrap()),
        ("gnp_18_0.2", random_graph(18, 0.2, 11).unwrap()),
        ("tree_20", random_tree(20, 5).unwrap()),
    ]
}

pub fn long_path(n: usize) -> Graph {
    gen_path(n).unwrap()
}

pub fn big_tree(n: usize) -> Graph {
    random_tree(n, 1).unwrap()
}

/// graph6 lines of `count` random graphs with 4 to 10 vertices.
pub fn audit_corpus(count: u64) -> Vec<String> {
    (0..count)
        .map(|s| emit_graph6(&random_graph(4 + (s % 7) as usize, 0.4, s).unwrap()))
        .collect()
}
