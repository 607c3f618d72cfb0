use std::path::PathBuf;

use thiserror::Error;

/// Errors raised while decoding text or binary edge lists.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("bad magic bytes: not a binary edge list")]
    BadMagic,
    #[error("truncated payload: expected {expected} bytes, found {found}")]
    Truncated { expected: u64, found: u64 },
    #[error("edge count mismatch: header declares {declared} edges, payload holds {actual} bytes")]
    EdgeCountMismatch { declared: u64, actual: u64 },
    #[error("node id {id} out of range for a graph of {n} nodes")]
    NodeOutOfRange { id: u64, n: u64 },
    #[error("node id {0} exceeds the supported range")]
    IdOverflow(u64),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("degenerate normalization at cycle {cycle}: 1 - d - d*e = {denominator:e}")]
    DegenerateNormalization { cycle: usize, denominator: f64 },
    #[error("dense oracle limited to {limit} nodes, graph has {n}")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("vector sums to zero")]
    ZeroSum,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// Top-level error for operations that touch the filesystem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("invalid benchmark plan: {0}")]
    Plan(String),
}
