//! Extremal graph toolkit for unions of wheels: constructions of the
//! extremal families, exact evaluators for their edge-count formulas,
//! forbidden-subgraph detectors, and a small-n brute-force oracle tying
//! the three together.

pub mod canon;
pub mod codec;
pub mod construct;
pub mod error;
pub mod formula;
pub mod graph;
pub mod oracle;
pub mod pattern;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{disjoint_union, induced_subgraph, join_graphs, Graph, GraphBuilder, VertexSet};
