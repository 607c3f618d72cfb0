//! Directed graphs stored as contiguous adjacency arrays.
//!
//! Edge lists come from a plain text format (`source destination` per line,
//! `#` comments) or from a fixed little-endian binary format. A [`Graph`]
//! keeps both the out-lists (columns of the transition matrix) and the
//! in-lists (rows), so row-oriented and column-oriented solvers traverse
//! the same structure.

mod binary;
mod csr;
mod edge_list;
mod stats;

pub use binary::{read_binary, write_binary, BINARY_MAGIC};
pub use csr::{build_graph, transpose, Graph};
pub use edge_list::{parse_edge_list, read_edge_list, write_text, EdgeList};
pub use stats::{compute_stats, zero_in_degree_closure, GraphStats, ZeroInClosure};

use std::path::Path;

use crate::error::{Error, FormatError};

/// Dense node identifier.
pub type NodeId = u32;

/// On-disk edge list encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputFormat {
    Text,
    Binary,
}

impl InputFormat {
    /// Guess the encoding from the leading bytes.
    pub fn detect(bytes: &[u8]) -> InputFormat {
        if bytes.starts_with(BINARY_MAGIC) {
            InputFormat::Binary
        } else {
            InputFormat::Text
        }
    }
}

/// Decode an edge list from raw bytes, auto-detecting the format unless one
/// is forced.
pub fn decode_edge_list(bytes: &[u8], format: Option<InputFormat>) -> Result<EdgeList, FormatError> {
    match format.unwrap_or_else(|| InputFormat::detect(bytes)) {
        InputFormat::Binary => read_binary(bytes),
        InputFormat::Text => {
            let text = std::str::from_utf8(bytes).map_err(|e| FormatError::Parse {
                line: line_of_offset(bytes, e.valid_up_to()),
                reason: "invalid UTF-8".to_string(),
            })?;
            parse_edge_list(text)
        }
    }
}

fn line_of_offset(bytes: &[u8], offset: usize) -> usize {
    bytes[..offset].iter().filter(|&&b| b == b'\n').count() + 1
}

/// Read an edge list file from disk.
pub fn load_edge_list(path: &Path, format: Option<InputFormat>) -> Result<EdgeList, Error> {
    let bytes = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    decode_edge_list(&bytes, format).map_err(|source| Error::Format {
        path: path.to_path_buf(),
        source,
    })
}
