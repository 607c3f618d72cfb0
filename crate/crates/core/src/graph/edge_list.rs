use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use super::NodeId;
use crate::error::FormatError;

/// Comment directive carrying a node count larger than `max id + 1`.
const NODES_DIRECTIVE: &str = "# nodes:";

/// Parsed `(source, destination)` pairs in file order.
///
/// Parallel edges and self-loops are kept as-is.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeList {
    edges: Vec<(NodeId, NodeId)>,
    declared_n: usize,
}

impl EdgeList {
    /// Builds an edge list whose node count is `max id + 1`.
    pub fn from_edges(edges: Vec<(NodeId, NodeId)>) -> EdgeList {
        let declared_n = edges
            .iter()
            .map(|&(s, t)| s.max(t) as usize + 1)
            .max()
            .unwrap_or(0);
        EdgeList { edges, declared_n }
    }

    /// Builds an edge list with an explicit node count. Fails if an edge
    /// references a node `>= declared_n`.
    pub fn with_declared_n(
        edges: Vec<(NodeId, NodeId)>,
        declared_n: usize,
    ) -> Result<EdgeList, FormatError> {
        if let Some(&(s, t)) = edges
            .iter()
            .find(|&&(s, t)| s as usize >= declared_n || t as usize >= declared_n)
        {
            return Err(FormatError::NodeOutOfRange {
                id: s.max(t) as u64,
                n: declared_n as u64,
            });
        }
        Ok(EdgeList { edges, declared_n })
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn declared_n(&self) -> usize {
        self.declared_n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The same edges with every direction flipped, in the same order.
    pub fn reversed(&self) -> EdgeList {
        EdgeList {
            edges: self.edges.iter().map(|&(s, t)| (t, s)).collect(),
            declared_n: self.declared_n,
        }
    }

    pub fn into_edges(self) -> Vec<(NodeId, NodeId)> {
        self.edges
    }
}

/// Parses the whitespace-separated text format.
///
/// Blank lines and lines starting with `#` are skipped. A `# nodes: N`
/// comment raises the node count to at least `N`, so that trailing isolated
/// nodes survive a text round trip.
pub fn parse_edge_list(text: &str) -> Result<EdgeList, FormatError> {
    let mut parser = TextParser::default();
    for (idx, line) in text.lines().enumerate() {
        parser.line(idx + 1, line)?;
    }
    Ok(parser.finish())
}

/// Streaming variant of [`parse_edge_list`].
pub fn read_edge_list<R: BufRead>(reader: R) -> io::Result<Result<EdgeList, FormatError>> {
    let mut parser = TextParser::default();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if let Err(e) = parser.line(idx + 1, &line) {
            return Ok(Err(e));
        }
    }
    Ok(Ok(parser.finish()))
}

#[derive(Default)]
struct TextParser {
    edges: Vec<(NodeId, NodeId)>,
    max_seen: Option<NodeId>,
    declared_floor: usize,
}

impl TextParser {
    fn line(&mut self, line_no: usize, line: &str) -> Result<(), FormatError> {
        let line = line.trim();
        if line.is_empty() {
            return Ok(());
        }
        if let Some(rest) = line.strip_prefix(NODES_DIRECTIVE) {
            if let Ok(n) = rest.trim().parse::<usize>() {
                self.declared_floor = self.declared_floor.max(n);
            }
            return Ok(());
        }
        if line.starts_with('#') {
            return Ok(());
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(FormatError::Parse {
                line: line_no,
                reason: format!("expected two node ids, got {:?}", line),
            });
        };
        let s = parse_id(a, line_no)?;
        let t = parse_id(b, line_no)?;
        self.max_seen = Some(self.max_seen.map_or(s.max(t), |m| m.max(s).max(t)));
        self.edges.push((s, t));
        Ok(())
    }

    fn finish(self) -> EdgeList {
        let from_ids = self.max_seen.map_or(0, |m| m as usize + 1);
        EdgeList {
            edges: self.edges,
            declared_n: from_ids.max(self.declared_floor),
        }
    }
}

fn parse_id(token: &str, line: usize) -> Result<NodeId, FormatError> {
    if token.starts_with('-') && token.len() > 1 && token[1..].bytes().all(|b| b.is_ascii_digit()) {
        return Err(FormatError::Parse {
            line,
            reason: format!("negative node id {token}"),
        });
    }
    let value: u64 = token.parse().map_err(|_| FormatError::Parse {
        line,
        reason: format!("not a node id: {token:?}"),
    })?;
    // u32::MAX is reserved so that `id + 1` always fits a node count.
    if value >= NodeId::MAX as u64 {
        return Err(FormatError::IdOverflow(value));
    }
    Ok(value as NodeId)
}

/// Writes the text format, with a `# nodes:` header so the node count is
/// preserved exactly.
pub fn write_text<W: Write>(edges: &EdgeList, mut out: W) -> io::Result<()> {
    writeln!(out, "#origin_node\tdestination_node")?;
    writeln!(out, "{NODES_DIRECTIVE} {}", edges.declared_n)?;
    let mut buf = String::with_capacity(64 * 1024);
    for &(s, t) in &edges.edges {
        let _ = writeln!(buf, "{s}\t{t}");
        if buf.len() > 60 * 1024 {
            out.write_all(buf.as_bytes())?;
            buf.clear();
        }
    }
    out.write_all(buf.as_bytes())
}
