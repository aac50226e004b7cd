//! Exact computation of k-limited packing, packing, open packing, domination
//! and total domination numbers of small graphs, generators for the graph
//! families that make the classical bounds on them tight, and an audit engine
//! that evaluates those bounds with exact rational arithmetic.
//!
//! ```
//! use limpack::{generators, packing};
//!
//! let petersen = generators::gen_petersen();
//! assert_eq!(packing::max_packing(&petersen).unwrap().value, 1);
//! ```

pub mod audit;
pub mod generators;
pub mod graph;
pub mod packing;
pub mod tree;

pub use audit::{AuditConfig, AuditReport, BoundCheck, Rational, TheoremId};
pub use generators::{GenError, GkrBlueprint};
pub use graph::{
    emit_graph6, parse_edge_list, parse_graph6, structural_summary, Graph, GraphError,
    StructuralSummary, VertexSet,
};
pub use packing::{Invariant, Optimality, PackingCertificate, PackingKind, SolveError, Tier};
