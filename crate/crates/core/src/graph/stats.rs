use std::collections::VecDeque;
use std::fmt;

use super::{Graph, NodeId};

/// Nodes that only receive mass from sources which themselves stop
/// receiving mass after finitely many diffusion steps.
///
/// Built as a least fixpoint: start with in-degree-0 nodes, then add any
/// node all of whose in-neighbors are already members. A self-loop is an
/// in-edge from the node itself and therefore keeps it out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroInClosure {
    members: Vec<NodeId>,
    depth: Vec<u32>,
}

impl ZeroInClosure {
    /// Member ids in increasing order.
    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.depth[i] > 0
    }

    /// Longest in-path length ending at `i` inside the closure (in-degree-0
    /// nodes have depth 1); `None` for non-members.
    pub fn depth(&self, i: usize) -> Option<u32> {
        (self.depth[i] > 0).then_some(self.depth[i])
    }

    pub fn max_depth(&self) -> u32 {
        self.depth.iter().copied().max().unwrap_or(0)
    }
}

pub fn zero_in_degree_closure(g: &Graph) -> ZeroInClosure {
    let n = g.node_count();
    let mut pending: Vec<usize> = g.in_degrees().collect();
    let mut depth = vec![0u32; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| pending[i] == 0).collect();
    for &i in &queue {
        depth[i] = 1;
    }
    while let Some(i) = queue.pop_front() {
        for &j in g.out_neighbors(i) {
            let j = j as usize;
            pending[j] -= 1;
            if pending[j] == 0 {
                // Every in-neighbor of j is a member with a final depth.
                depth[j] = 1 + g
                    .in_neighbors(j)
                    .iter()
                    .map(|&k| depth[k as usize])
                    .max()
                    .unwrap_or(0);
                queue.push_back(j);
            }
        }
    }
    let members = (0..n).filter(|&i| depth[i] > 0).map(|i| i as NodeId).collect();
    ZeroInClosure { members, depth }
}

/// The per-graph counts used to characterize a web graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GraphStats {
    pub n: usize,
    /// Links, L.
    pub l: usize,
    /// Dangling (out-degree 0) nodes, D.
    pub d_count: usize,
    /// Members of the zero-in-degree closure, E.
    pub e_count: usize,
    /// Nodes carrying a self-loop, O.
    pub o_count: usize,
    pub max_in: usize,
    pub max_out: usize,
}

impl GraphStats {
    fn ratio(&self, count: usize) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            count as f64 / self.n as f64
        }
    }

    pub fn l_per_n(&self) -> f64 {
        self.ratio(self.l)
    }

    pub fn d_per_n(&self) -> f64 {
        self.ratio(self.d_count)
    }

    pub fn e_per_n(&self) -> f64 {
        self.ratio(self.e_count)
    }

    pub fn o_per_n(&self) -> f64 {
        self.ratio(self.o_count)
    }

    /// Header matching [`GraphStats::table_row`].
    pub fn table_header() -> &'static str {
        "N\tL/N\tD/N\tE/N\tO/N\tmax_in\tmax_out"
    }

    pub fn table_row(&self) -> String {
        format!(
            "{}\t{:.2}\t{:.3}\t{:.3}\t{:.3}\t{}\t{}",
            self.n,
            self.l_per_n(),
            self.d_per_n(),
            self.e_per_n(),
            self.o_per_n(),
            self.max_in,
            self.max_out
        )
    }
}

impl fmt::Display for GraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} l={} d={} e={} o={} max_in={} max_out={}",
            self.n, self.l, self.d_count, self.e_count, self.o_count, self.max_in, self.max_out
        )
    }
}

pub fn compute_stats(g: &Graph) -> GraphStats {
    let n = g.node_count();
    GraphStats {
        n,
        l: g.link_count(),
        d_count: (0..n).filter(|&i| g.is_dangling(i)).count(),
        e_count: zero_in_degree_closure(g).len(),
        o_count: (0..n).filter(|&i| g.has_self_loop(i)).count(),
        max_in: g.in_degrees().max().unwrap_or(0),
        max_out: g.out_degrees().max().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, transpose, EdgeList};

    fn graph(edges: &[(NodeId, NodeId)]) -> Graph {
        build_graph(&EdgeList::from_edges(edges.to_vec()), None)
    }

    #[test]
    fn cycle_has_empty_closure() {
        assert!(zero_in_degree_closure(&graph(&[(0, 1), (1, 2), (2, 0)])).is_empty());
    }

    #[test]
    fn self_loop_blocks_membership() {
        let c = zero_in_degree_closure(&graph(&[(0, 1), (1, 2), (2, 2)]));
        assert_eq!(c.members(), &[0, 1]);
        assert_eq!(c.depth(0), Some(1));
        assert_eq!(c.depth(1), Some(2));
        assert_eq!(c.depth(2), None);
    }

    #[test]
    fn edgeless_graph_is_all_closure() {
        let g = build_graph(&EdgeList::default(), Some(4));
        let c = zero_in_degree_closure(&g);
        assert_eq!(c.members(), &[0, 1, 2, 3]);
        assert_eq!(c.max_depth(), 1);
    }

    #[test]
    fn parallel_edges_need_all_copies_resolved() {
        // 1 -> 2 twice; 2 joins only after 1 does.
        let c = zero_in_degree_closure(&graph(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(c.members(), &[0, 1, 2]);
        assert_eq!(c.depth(2), Some(3));
    }

    #[test]
    fn stats_of_three_node_example() {
        let s = compute_stats(&graph(&[(0, 1), (1, 2), (2, 2)]));
        assert_eq!(
            s,
            GraphStats {
                n: 3,
                l: 3,
                d_count: 0,
                e_count: 2,
                o_count: 1,
                max_in: 2,
                max_out: 1
            }
        );
        assert_eq!(s.to_string(), "n=3 l=3 d=0 e=2 o=1 max_in=2 max_out=1");
    }

    #[test]
    fn stats_of_single_isolated_node() {
        let s = compute_stats(&build_graph(&EdgeList::default(), Some(1)));
        assert_eq!((s.l, s.d_count, s.e_count, s.o_count), (0, 1, 1, 0));
    }

    #[test]
    fn transpose_swaps_dangling_for_sources() {
        let g = graph(&[(0, 1), (1, 2), (2, 2)]);
        let s = compute_stats(&transpose(&g));
        assert_eq!(s.o_count, 1);
        assert_eq!(s.d_count, 1);
        assert_eq!((s.max_in, s.max_out), (1, 2));
    }
}
