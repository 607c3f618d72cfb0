#![allow(dead_code)]

use std::collections::BTreeSet;

use diter_core::{build_graph, EdgeList, Graph, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DAMPINGS: [f64; 3] = [0.5, 0.85, 0.95];

/// A random multigraph of the shared test corpus.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub seed: u64,
    pub edges: EdgeList,
    pub graph: Graph,
    pub damping: f64,
}

/// `count` graphs with n in [1, 50], between 0 and 4n edges drawn with
/// uniform endpoints (self-loops and parallel edges occur naturally), plus
/// an extra sprinkling of explicit self-loops and duplicates.
pub fn corpus(count: usize, seed: u64) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(1..=50usize);
            let m = rng.gen_range(0..=4 * n);
            let mut edges: Vec<(NodeId, NodeId)> = (0..m)
                .map(|_| (rng.gen_range(0..n) as NodeId, rng.gen_range(0..n) as NodeId))
                .collect();
            for _ in 0..rng.gen_range(0..=n / 5) {
                let i = rng.gen_range(0..n) as NodeId;
                edges.push((i, i));
            }
            if !edges.is_empty() {
                for _ in 0..rng.gen_range(0..=3) {
                    let e = edges[rng.gen_range(0..edges.len())];
                    edges.push(e);
                }
            }
            let edges = EdgeList::with_declared_n(edges, n).unwrap();
            let graph = build_graph(&edges, None);
            CorpusGraph {
                seed: seed.wrapping_mul(1000).wrapping_add(k as u64),
                edges,
                graph,
                damping: DAMPINGS[k % DAMPINGS.len()],
            }
        })
        .collect()
}

/// Naive least fixpoint: repeatedly scan all nodes until nothing changes.
pub fn brute_force_closure(g: &Graph) -> BTreeSet<usize> {
    let n = g.node_count();
    let mut set = BTreeSet::new();
    loop {
        let mut changed = false;
        for i in 0..n {
            if !set.contains(&i) && g.in_neighbors(i).iter().all(|&j| set.contains(&(j as usize))) {
                set.insert(i);
                changed = true;
            }
        }
        if !changed {
            return set;
        }
    }
}

/// A DAG "fringe" of `fringe` nodes feeding a strongly connected core.
/// Fringe nodes only link to higher-numbered fringe nodes or into the core,
/// in shuffled id positions so the closure is not aligned with sweep order.
pub fn dag_fringe(n: usize, fringe: usize, seed: u64) -> EdgeList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<NodeId> = (0..n as NodeId).collect();
    use rand::seq::SliceRandom;
    ids.shuffle(&mut rng);
    let (dag, core) = ids.split_at(fringe.min(n));
    let mut edges = Vec::new();
    for (pos, &u) in dag.iter().enumerate() {
        for _ in 0..rng.gen_range(1..=3) {
            let later = &dag[pos + 1..];
            let to_core = later.is_empty() || (!core.is_empty() && rng.gen_bool(0.4));
            let v = if to_core {
                if core.is_empty() {
                    continue;
                }
                core[rng.gen_range(0..core.len())]
            } else {
                later[rng.gen_range(0..later.len())]
            };
            edges.push((u, v));
        }
    }
    for (k, &u) in core.iter().enumerate() {
        edges.push((u, core[(k + 1) % core.len()]));
        if rng.gen_bool(0.5) {
            edges.push((u, core[rng.gen_range(0..core.len())]));
        }
    }
    EdgeList::with_declared_n(edges, n).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
