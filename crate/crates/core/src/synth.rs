//! Seeded generators for synthetic test graphs.
//!
//! [`web_like`] mimics the traits that matter to the solvers on crawled web
//! graphs: heavy-tailed out- and in-degrees, clustering into hosts (runs of
//! consecutive ids that mostly link among themselves), a few percent
//! dangling pages, and self-loops on a fraction of nodes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{EdgeList, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct WebGraphParams {
    pub nodes: usize,
    /// Target L/N.
    pub mean_out_degree: f64,
    pub dangling_fraction: f64,
    pub self_loop_fraction: f64,
    /// Mean number of pages per host; hosts are contiguous id blocks.
    pub mean_host_size: f64,
    /// Probability that a link stays inside its source's host.
    pub intra_host: f64,
    /// Fraction of hosts with no links leaving them at all.
    pub closed_hosts: f64,
    /// Skew of intra-host targets toward the host's popular pages (>= 1,
    /// 1 is uniform).
    pub host_skew: f64,
    /// Skew of inter-host targets toward globally popular pages.
    pub global_skew: f64,
    /// Tail index of the out-degree and host-size distributions (> 1).
    pub tail: f64,
    pub seed: u64,
}

impl Default for WebGraphParams {
    fn default() -> Self {
        WebGraphParams {
            nodes: 10_000,
            mean_out_degree: 12.5,
            dangling_fraction: 0.01,
            self_loop_fraction: 0.11,
            mean_host_size: 40.0,
            intra_host: 0.8,
            closed_hosts: 0.2,
            host_skew: 2.0,
            global_skew: 3.0,
            tail: 1.6,
            seed: 0,
        }
    }
}

/// Draws from a Pareto law with the given mean, rounded and clamped.
fn pareto<R: Rng>(rng: &mut R, mean: f64, tail: f64, max: usize) -> usize {
    let tail = tail.max(1.01);
    let xmin = (mean * (tail - 1.0) / tail).max(0.5);
    let u: f64 = 1.0 - rng.gen::<f64>();
    ((xmin * u.powf(-1.0 / tail)).round() as usize).clamp(1, max.max(1))
}

/// Picks an index in `0..len`, biased toward 0 when `skew > 1`.
fn skewed<R: Rng>(rng: &mut R, len: usize, skew: f64) -> usize {
    ((rng.gen::<f64>().powf(skew.max(1.0)) * len as f64) as usize).min(len - 1)
}

/// Generates a directed scale-free graph with host-level clustering.
///
/// Edges are emitted grouped by source in increasing id order, like a crawl
/// dump.
pub fn web_like(params: &WebGraphParams) -> EdgeList {
    let n = params.nodes;
    if n == 0 {
        return EdgeList::default();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let mut host_start = Vec::new();
    let mut start = 0;
    while start < n {
        host_start.push(start);
        start += pareto(&mut rng, params.mean_host_size, params.tail, n / 10);
    }
    host_start.push(n);

    let mut popularity: Vec<NodeId> = (0..n as NodeId).collect();
    popularity.shuffle(&mut rng);

    let linking_mean = params.mean_out_degree / (1.0 - params.dangling_fraction).max(1e-9);
    let mut edges = Vec::with_capacity((params.mean_out_degree * n as f64) as usize);
    for host in host_start.windows(2) {
        let (lo, hi) = (host[0], host[1]);
        // Popular pages of a host sit anywhere in its id range.
        let mut local_rank: Vec<usize> = (lo..hi).collect();
        local_rank.shuffle(&mut rng);
        let intra = if rng.gen::<f64>() < params.closed_hosts {
            1.0
        } else {
            params.intra_host
        };
        for i in lo..hi {
            if rng.gen::<f64>() < params.dangling_fraction {
                continue;
            }
            let mut remaining = pareto(&mut rng, linking_mean, params.tail, n / 4);
            if n > 1 && rng.gen::<f64>() < params.self_loop_fraction {
                edges.push((i as NodeId, i as NodeId));
                remaining -= 1;
            }
            for _ in 0..remaining {
                let j = if hi - lo > 1 && rng.gen::<f64>() < intra {
                    let j = local_rank[skewed(&mut rng, hi - lo, params.host_skew)];
                    // Self-links only come from the explicit draw above.
                    if j == i {
                        lo + (j - lo + 1) % (hi - lo)
                    } else {
                        j
                    }
                } else {
                    popularity[skewed(&mut rng, n, params.global_skew)] as usize
                };
                edges.push((i as NodeId, j as NodeId));
            }
        }
    }
    EdgeList::with_declared_n(edges, n).expect("generated ids are below n")
}

/// Uniform random multigraph: `edges` links with independently uniform
/// endpoints (self-loops and parallel edges included).
pub fn uniform(nodes: usize, edges: usize, seed: u64) -> EdgeList {
    if nodes == 0 {
        return EdgeList::default();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let list = (0..edges)
        .map(|_| (rng.gen_range(0..nodes) as NodeId, rng.gen_range(0..nodes) as NodeId))
        .collect();
    EdgeList::with_declared_n(list, nodes).expect("generated ids are below n")
}
