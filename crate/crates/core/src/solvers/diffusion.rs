//! D-iteration: solve the fixed point by diffusing fluid along out-links.
//!
//! Every node starts with `(1-d)/N` units of fluid. Processing a node moves
//! its fluid into its history and sends a `d/out` share to each
//! out-neighbor. History converges monotonically to the raw solution while
//! the remaining fluid bounds the error. Dangling nodes keep what they
//! receive; the running total of that absorbed mass is `e`.

use super::{
    prepare, Algorithm, CycleState, Observer, Progress, SolverConfig, SolverResult, DEGENERATE_DENOMINATOR,
};
use crate::error::SolverError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionState {
    /// Accumulated history H, the raw score estimate.
    pub hist: Vec<f64>,
    /// Residual fluid F not yet diffused.
    pub fluid: Vec<f64>,
    /// Cumulative transit through dangling nodes, e.
    pub absorbed: f64,
}

impl DiffusionState {
    pub fn remaining_fluid(&self) -> f64 {
        self.fluid.iter().sum()
    }

    /// Deviation from the conservation law
    /// `ΣF + (1-d)·Σ_{non-dangling} H + Σ_{dangling} H = 1-d`.
    pub fn conservation_residual(&self, g: &Graph, damping: f64) -> f64 {
        let mut diffused = 0.0;
        let mut kept = 0.0;
        for (i, h) in self.hist.iter().enumerate() {
            if g.is_dangling(i) {
                kept += h;
            } else {
                diffused += h;
            }
        }
        self.remaining_fluid() + (1.0 - damping) * diffused + kept - (1.0 - damping)
    }
}

/// Which nodes a sweep processes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Selection {
    /// Every node holding fluid.
    Cyclic,
    /// Nodes whose fluid exceeds the average diffusion cost `r·out/L`.
    AverageCost,
}

/// A diffusion in progress over a borrowed graph.
///
/// [`di_cyclic`] and [`di_sop`] drive this to convergence; it is public so
/// that callers can step sweeps by hand and inspect the state in between.
#[derive(Debug, Clone)]
pub struct Diffusion<'g> {
    graph: &'g Graph,
    damping: f64,
    out: Vec<f64>,
    state: DiffusionState,
    link_traversals: u64,
}

impl<'g> Diffusion<'g> {
    pub fn new(graph: &'g Graph, damping: f64) -> Self {
        let n = graph.node_count();
        let initial = (1.0 - damping) / n.max(1) as f64;
        Diffusion {
            graph,
            damping,
            out: graph.out_degrees().map(|k| k as f64).collect(),
            state: DiffusionState {
                hist: vec![0.0; n],
                fluid: vec![initial; n],
                absorbed: 0.0,
            },
            link_traversals: 0,
        }
    }

    pub fn state(&self) -> &DiffusionState {
        &self.state
    }

    pub fn link_traversals(&self) -> u64 {
        self.link_traversals
    }

    /// Diffuses the fluid held by node `i`.
    #[inline]
    fn process(&mut self, i: usize) {
        let d = self.damping;
        let fluid = &mut self.state.fluid;
        let loops = self.graph.self_loops(i);
        let transit = if loops > 0 {
            // Sum of the geometric series of fluid returning through the
            // node's own loops.
            fluid[i] * self.out[i] / (self.out[i] - loops as f64 * d)
        } else {
            fluid[i]
        };
        self.state.hist[i] += transit;
        fluid[i] = 0.0;
        let targets = self.graph.out_neighbors(i);
        if targets.is_empty() {
            self.state.absorbed += transit;
            return;
        }
        let sent = transit * d / self.out[i];
        for &j in targets {
            if j as usize != i {
                fluid[j as usize] += sent;
            }
        }
        self.link_traversals += targets.len() as u64;
    }

    /// One pass over `0..N` processing every node with positive fluid.
    /// Returns how many nodes were processed.
    pub fn cyclic_sweep(&mut self) -> usize {
        let mut processed = 0;
        for i in 0..self.graph.node_count() {
            if self.state.fluid[i] > 0.0 {
                self.process(i);
                processed += 1;
            }
        }
        processed
    }

    /// One pass over `0..N` processing node `i` only when its fluid exceeds
    /// `r·out_i/L`, with `r` the total fluid at the start of the pass.
    /// Dangling nodes have a zero threshold.
    pub fn average_cost_sweep(&mut self) -> usize {
        let r = self.state.remaining_fluid();
        let links = self.graph.link_count() as f64;
        let mut processed = 0;
        for i in 0..self.graph.node_count() {
            let threshold = if self.out[i] == 0.0 { 0.0 } else { r / links * self.out[i] };
            if self.state.fluid[i] > threshold {
                self.process(i);
                processed += 1;
            }
        }
        processed
    }

    /// Remaining fluid scaled to the normalized solution:
    /// `ΣF / (1 - d - d·e)`.
    pub fn error_estimate(&self) -> Result<f64, f64> {
        let denominator = 1.0 - self.damping - self.damping * self.state.absorbed;
        if denominator <= DEGENERATE_DENOMINATOR {
            Err(denominator)
        } else {
            Ok(self.state.remaining_fluid() / denominator)
        }
    }

    pub fn into_state(self) -> DiffusionState {
        self.state
    }
}

/// D-iteration with cyclic node order (DI-CYC).
pub fn di_cyclic(g: &Graph, config: &SolverConfig) -> Result<SolverResult, SolverError> {
    run(g, config, Selection::Cyclic, &mut |_| {})
}

/// D-iteration processing only nodes above the average diffusion cost
/// (DI-SOP).
pub fn di_sop(g: &Graph, config: &SolverConfig) -> Result<SolverResult, SolverError> {
    run(g, config, Selection::AverageCost, &mut |_| {})
}

pub(super) fn run(
    g: &Graph,
    config: &SolverConfig,
    selection: Selection,
    observer: Observer<'_>,
) -> Result<SolverResult, SolverError> {
    let target = prepare(g, config)?;
    let mut progress = Progress::new(target, config);
    let mut engine = Diffusion::new(g, config.damping);

    while progress.unfinished() {
        match selection {
            Selection::Cyclic => {
                engine.cyclic_sweep();
            }
            Selection::AverageCost => {
                // All fluid sitting exactly on its threshold selects nothing;
                // a plain sweep keeps the iteration moving.
                if engine.average_cost_sweep() == 0 {
                    engine.cyclic_sweep();
                }
            }
        }
        let error = engine
            .error_estimate()
            .map_err(|denominator| SolverError::DegenerateNormalization {
                cycle: progress.cycles + 1,
                denominator,
            })?;
        progress.link_traversals = engine.link_traversals();
        progress.record(error);
        observer(&progress.report(CycleState::Diffusion(engine.state())));
    }

    let algorithm = match selection {
        Selection::Cyclic => Algorithm::DiCyclic,
        Selection::AverageCost => Algorithm::DiSop,
    };
    progress.finish(algorithm, g, engine.into_state().hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeList};

    fn graph(edges: &[(u32, u32)], n: usize) -> Graph {
        build_graph(&EdgeList::with_declared_n(edges.to_vec(), n).unwrap(), None)
    }

    #[test]
    fn single_dangling_node() {
        let g = graph(&[], 1);
        for solve in [di_cyclic, di_sop] {
            let r = solve(&g, &SolverConfig::default()).unwrap();
            assert!((r.scores[0] - 0.15).abs() < 1e-15);
            assert_eq!(r.normalized_scores.to_vec(), vec![1.0]);
            assert_eq!(r.cycles, 1);
            assert_eq!(r.final_error(), 0.0);
            assert_eq!(r.equivalent_iterations(), 1.0);
        }
        let mut engine = Diffusion::new(&g, 0.85);
        engine.cyclic_sweep();
        assert!((engine.state().absorbed - 0.15).abs() < 1e-15);
    }

    #[test]
    fn self_loop_only_node() {
        let r = di_cyclic(&graph(&[(0, 0)], 1), &SolverConfig::default()).unwrap();
        assert!((r.scores[0] - 1.0).abs() < 1e-15);
        assert_eq!(r.cycles, 1);
        assert!(r.converged);
        assert_eq!(r.link_traversals, 1);
    }

    #[test]
    fn chain_history() {
        let g = graph(&[(0, 1)], 2);
        let r = di_cyclic(&g, &SolverConfig::default()).unwrap();
        assert!((r.scores[0] - 0.075).abs() < 1e-15);
        assert!((r.scores[1] - 0.13875).abs() < 1e-15);
        assert!(r.converged && r.cycles <= 2);
    }

    #[test]
    fn parallel_self_loops_fold_into_transit() {
        // Node 0: two self-loops and one link to 1. Fixed point:
        // x0 = (1-d)/2 + d·(2/3)·x0, x1 = (1-d)/2 + d·x0/3.
        let d = 0.85;
        let g = graph(&[(0, 0), (0, 0), (0, 1)], 2);
        let r = di_cyclic(&g, &SolverConfig::with_damping(d).target(1e-14)).unwrap();
        let x0 = (1.0 - d) / 2.0 / (1.0 - 2.0 * d / 3.0);
        let x1 = (1.0 - d) / 2.0 + d * x0 / 3.0;
        assert!((r.scores[0] - x0).abs() < 1e-14);
        assert!((r.scores[1] - x1).abs() < 1e-14);
    }

    #[test]
    fn conservation_holds_each_sweep() {
        let g = graph(&[(0, 1), (1, 2), (2, 0), (2, 2), (1, 3), (0, 4), (4, 4), (4, 4)], 6);
        let d = 0.85;
        let mut engine = Diffusion::new(&g, d);
        for _ in 0..20 {
            engine.average_cost_sweep();
            assert!(engine.state().conservation_residual(&g, d).abs() < 1e-12);
            engine.cyclic_sweep();
            assert!(engine.state().conservation_residual(&g, d).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_normalization_aborts() {
        let g = graph(&[], 1);
        let config = SolverConfig::with_damping(1.0 - 1e-7).target(1e-30);
        assert!(matches!(
            di_cyclic(&g, &config),
            Err(SolverError::DegenerateNormalization { cycle: 1, .. })
        ));
        assert!(matches!(
            super::super::gauss_seidel(&g, &config),
            Err(SolverError::DegenerateNormalization { cycle: 1, .. })
        ));
    }

    #[test]
    fn sop_never_costs_more_on_a_cycle() {
        let g = graph(&[(0, 1), (1, 2), (2, 0)], 3);
        let config = SolverConfig::default().target(1e-9);
        let cyc = di_cyclic(&g, &config).unwrap();
        let sop = di_sop(&g, &config).unwrap();
        assert!(sop.equivalent_iterations() <= cyc.equivalent_iterations());
        for v in sop.normalized_scores.iter() {
            assert!((v - 1.0 / 3.0).abs() < 1e-8);
        }
    }
}
