//! Fixed little-endian binary edge list.
//!
//! Layout: the 6 magic bytes `DITER1`, a `u64` node count, a `u64` edge
//! count, then one `(u64 source, u64 destination)` pair per edge.

use super::{EdgeList, NodeId};
use crate::error::FormatError;

pub const BINARY_MAGIC: &[u8; 6] = b"DITER1";

const HEADER_LEN: usize = 6 + 8 + 8;
const PAIR_LEN: usize = 16;

pub fn write_binary(edges: &EdgeList) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + PAIR_LEN * edges.len());
    out.extend_from_slice(BINARY_MAGIC);
    out.extend_from_slice(&(edges.declared_n() as u64).to_le_bytes());
    out.extend_from_slice(&(edges.len() as u64).to_le_bytes());
    for &(s, t) in edges.edges() {
        out.extend_from_slice(&(s as u64).to_le_bytes());
        out.extend_from_slice(&(t as u64).to_le_bytes());
    }
    out
}

pub fn read_binary(bytes: &[u8]) -> Result<EdgeList, FormatError> {
    if bytes.len() < BINARY_MAGIC.len() || &bytes[..BINARY_MAGIC.len()] != BINARY_MAGIC {
        return Err(FormatError::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(FormatError::Truncated {
            expected: HEADER_LEN as u64,
            found: bytes.len() as u64,
        });
    }
    let n = read_u64(&bytes[6..14]);
    let l = read_u64(&bytes[14..22]);
    let payload = &bytes[HEADER_LEN..];
    let expected = l.checked_mul(PAIR_LEN as u64).ok_or(FormatError::EdgeCountMismatch {
        declared: l,
        actual: payload.len() as u64,
    })?;
    if (payload.len() as u64) < expected {
        return Err(FormatError::Truncated {
            expected: HEADER_LEN as u64 + expected,
            found: bytes.len() as u64,
        });
    }
    if payload.len() as u64 != expected {
        return Err(FormatError::EdgeCountMismatch {
            declared: l,
            actual: payload.len() as u64,
        });
    }
    if n > NodeId::MAX as u64 {
        return Err(FormatError::IdOverflow(n));
    }
    let edges = payload
        .chunks_exact(PAIR_LEN)
        .map(|pair| {
            let s = read_u64(&pair[..8]);
            let t = read_u64(&pair[8..]);
            for id in [s, t] {
                if id >= n {
                    return Err(FormatError::NodeOutOfRange { id, n });
                }
            }
            Ok((s as NodeId, t as NodeId))
        })
        .collect::<Result<Vec<_>, _>>()?;
    EdgeList::with_declared_n(edges, n as usize)
}

fn read_u64(bytes: &[u8]) -> u64 {
    u64::from_le_bytes(bytes.try_into().expect("8-byte slice"))
}
