//! Sparse-graph PageRank solvers and the tooling around them.
//!
//! The crate solves the fixed-point system `x = d·P·x + (1-d)/N` on large
//! sparse directed graphs with five schemes: power iteration by rows and by
//! columns, Gauss-Seidel, and two D-iteration (fluid diffusion) variants.
//! Around the solvers sit an edge-list loader with a compact binary format,
//! the graph statistics used to characterize web graphs, a synthetic
//! web-like graph generator, and a benchmark harness that produces
//! comparison tables.

pub mod bench;
mod error;
pub mod graph;
pub mod solvers;
pub mod synth;

pub use error::{Error, FormatError, SolverError};
pub use graph::{
    build_graph, compute_stats, parse_edge_list, read_binary, transpose, write_binary,
    zero_in_degree_closure, EdgeList, Graph, GraphStats, NodeId,
};
pub use solvers::{Algorithm, RankVector, SolverConfig, SolverResult};
