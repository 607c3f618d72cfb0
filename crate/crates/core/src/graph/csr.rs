use super::{EdgeList, NodeId};

/// One direction of adjacency in compressed sparse row layout.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl Adjacency {
    /// Groups `(key, value)` pairs by key, keeping input order inside each
    /// group (a stable counting sort).
    fn from_pairs<I>(n: usize, len: usize, pairs: I) -> Adjacency
    where
        I: Iterator<Item = (NodeId, NodeId)> + Clone,
    {
        let mut offsets = vec![0usize; n + 1];
        for (k, _) in pairs.clone() {
            offsets[k as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0; len];
        for (k, v) in pairs {
            let slot = &mut cursor[k as usize];
            targets[*slot] = v;
            *slot += 1;
        }
        Adjacency { offsets, targets }
    }

    #[inline]
    fn list(&self, i: usize) -> &[NodeId] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    #[inline]
    fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }
}

/// Immutable directed multigraph on nodes `0..n`.
///
/// Out-lists are the columns of the transition matrix, in-lists its rows.
/// Parallel edges are kept, so `out_degree` counts multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    out: Adjacency,
    inc: Adjacency,
    self_loops: Vec<u32>,
}

impl Graph {
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Number of links, L.
    pub fn link_count(&self) -> usize {
        self.out.targets.len()
    }

    #[inline]
    pub fn out_neighbors(&self, i: usize) -> &[NodeId] {
        self.out.list(i)
    }

    #[inline]
    pub fn in_neighbors(&self, i: usize) -> &[NodeId] {
        self.inc.list(i)
    }

    #[inline]
    pub fn out_degree(&self, i: usize) -> usize {
        self.out.degree(i)
    }

    #[inline]
    pub fn in_degree(&self, i: usize) -> usize {
        self.inc.degree(i)
    }

    /// How many `i -> i` edges node `i` carries.
    #[inline]
    pub fn self_loops(&self, i: usize) -> u32 {
        self.self_loops[i]
    }

    #[inline]
    pub fn has_self_loop(&self, i: usize) -> bool {
        self.self_loops[i] > 0
    }

    #[inline]
    pub fn is_dangling(&self, i: usize) -> bool {
        self.out.degree(i) == 0
    }

    pub fn out_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(|i| self.out.degree(i))
    }

    pub fn in_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(|i| self.inc.degree(i))
    }

    /// All edges in source order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.n).flat_map(move |i| self.out_neighbors(i).iter().map(move |&j| (i as NodeId, j)))
    }
}

fn count_self_loops(n: usize, adj: &Adjacency) -> Vec<u32> {
    (0..n)
        .map(|i| adj.list(i).iter().filter(|&&j| j as usize == i).count() as u32)
        .collect()
}

/// Builds the adjacency structure of the first `node_limit` nodes (all
/// declared nodes when `None`).
///
/// Only edges whose two endpoints are below the limit are kept. A limit
/// beyond the declared node count pads the graph with isolated nodes.
pub fn build_graph(edges: &EdgeList, node_limit: Option<usize>) -> Graph {
    let n = node_limit.unwrap_or(edges.declared_n());
    let keep = move |&&(s, t): &&(NodeId, NodeId)| (s as usize) < n && (t as usize) < n;
    let kept = edges.edges().iter().filter(keep);
    let len = kept.clone().count();
    let out = Adjacency::from_pairs(n, len, kept.clone().copied());
    let inc = Adjacency::from_pairs(n, len, kept.map(|&(s, t)| (t, s)));
    let self_loops = count_self_loops(n, &out);
    Graph {
        n,
        out,
        inc,
        self_loops,
    }
}

/// Reverses every edge by swapping the out- and in-lists.
pub fn transpose(g: &Graph) -> Graph {
    Graph {
        n: g.n,
        out: g.inc.clone(),
        inc: g.out.clone(),
        self_loops: g.self_loops.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_node() -> EdgeList {
        EdgeList::from_edges(vec![(0, 1), (1, 2), (2, 2)])
    }

    #[test]
    fn builds_three_node_example() {
        let g = build_graph(&three_node(), None);
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.out_degrees().collect::<Vec<_>>(), vec![1, 1, 1]);
        assert_eq!(
            (0..3).map(|i| g.has_self_loop(i)).collect::<Vec<_>>(),
            vec![false, false, true]
        );
        assert!((0..3).all(|i| !g.is_dangling(i)));
        assert_eq!(g.in_neighbors(2), &[1, 2]);
    }

    #[test]
    fn truncation_keeps_induced_subgraph() {
        let g = build_graph(&three_node(), Some(2));
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(g.is_dangling(1));
        assert!(!g.is_dangling(0));
    }

    #[test]
    fn limit_pads_with_isolated_nodes() {
        let g = build_graph(&EdgeList::default(), Some(5));
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.link_count(), 0);
        assert!((0..5).all(|i| g.is_dangling(i)));
    }

    #[test]
    fn in_lists_follow_file_order() {
        let e = EdgeList::from_edges(vec![(3, 0), (1, 0), (2, 0), (1, 0)]);
        let g = build_graph(&e, None);
        assert_eq!(g.in_neighbors(0), &[3, 1, 2, 1]);
        assert_eq!(g.out_degree(1), 2);
    }

    #[test]
    fn transpose_of_chain() {
        let g = build_graph(&EdgeList::from_edges(vec![(0, 1)]), None);
        let t = transpose(&g);
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![(1, 0)]);
        assert!(t.is_dangling(0));
        assert_eq!(transpose(&t), g);
    }

    #[test]
    fn self_loop_graph_is_its_own_transpose() {
        let g = build_graph(&EdgeList::from_edges(vec![(0, 0), (1, 1)]), None);
        assert_eq!(transpose(&g), g);
    }

    #[test]
    fn parallel_self_loops_are_counted() {
        let g = build_graph(&EdgeList::from_edges(vec![(0, 0), (0, 0), (0, 1)]), None);
        assert_eq!(g.self_loops(0), 2);
        assert_eq!(g.out_degree(0), 3);
    }
}
