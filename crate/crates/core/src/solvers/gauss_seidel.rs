use super::{prepare, Algorithm, CycleState, Observer, Progress, SolverConfig, SolverResult, DEGENERATE_DENOMINATOR};
use crate::error::SolverError;
use crate::graph::Graph;

/// Cyclic Gauss-Seidel on the substochastic system (GS).
///
/// Each node is updated in place from its in-list; a self-loop is folded
/// into the diagonal instead of read back. The error estimate scales the
/// cycle's total increase by `d / (1 - d - d·e)`, where `e` is the current
/// mass sitting on dangling nodes.
pub fn gauss_seidel(g: &Graph, config: &SolverConfig) -> Result<SolverResult, SolverError> {
    run(g, config, &mut |_| {})
}

pub(super) fn run(g: &Graph, config: &SolverConfig, observer: Observer<'_>) -> Result<SolverResult, SolverError> {
    let target = prepare(g, config)?;
    let n = g.node_count();
    let d = config.damping;
    let teleport = (1.0 - d) / n as f64;
    let out: Vec<f64> = g.out_degrees().map(|k| k as f64).collect();
    let dangling: Vec<usize> = (0..n).filter(|&i| g.is_dangling(i)).collect();
    let links = g.link_count() as u64;

    let mut progress = Progress::new(target, config);
    let mut x = vec![teleport; n];

    while progress.unfinished() {
        let mut increase = 0.0;
        for i in 0..n {
            let previous = x[i];
            let mut acc = teleport;
            let mut diag = 1.0;
            for &j in g.in_neighbors(i) {
                let j = j as usize;
                if j != i {
                    acc += d * x[j] / out[j];
                } else {
                    diag -= d / out[i];
                }
            }
            x[i] = acc / diag;
            increase += x[i] - previous;
        }
        let absorbed: f64 = dangling.iter().map(|&i| x[i]).sum();
        let denominator = 1.0 - d - d * absorbed;
        if denominator <= DEGENERATE_DENOMINATOR {
            return Err(SolverError::DegenerateNormalization {
                cycle: progress.cycles + 1,
                denominator,
            });
        }
        progress.link_traversals += links;
        progress.record(increase * d / denominator);
        observer(&progress.report(CycleState::Iterate(&x)));
    }
    progress.finish(Algorithm::GaussSeidel, g, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeList};

    fn graph(edges: &[(u32, u32)]) -> Graph {
        build_graph(&EdgeList::from_edges(edges.to_vec()), None)
    }

    #[test]
    fn self_loop_only_node_solves_in_one_update() {
        let r = gauss_seidel(&graph(&[(0, 0)]), &SolverConfig::default()).unwrap();
        assert!((r.scores[0] - 1.0).abs() < 1e-15);
        // The first cycle's estimate still sees the jump from the start value;
        // the second confirms the fixed point.
        assert_eq!(r.cycles, 2);
        assert_eq!(r.final_error(), 0.0);
        assert!(r.converged);
    }

    #[test]
    fn chain_raw_scores() {
        let r = gauss_seidel(&graph(&[(0, 1)]), &SolverConfig::default()).unwrap();
        assert!((r.scores[0] - 0.075).abs() < 1e-15);
        assert!((r.scores[1] - 0.13875).abs() < 1e-15);
        let expected = [1.0 / 2.85, 1.85 / 2.85];
        let dist: f64 = r.normalized_scores.iter().zip(expected).map(|(a, b)| (a - b).abs()).sum();
        assert!(dist <= 2.0 * r.target_error);
    }

    #[test]
    fn three_cycle_is_uniform() {
        let r = gauss_seidel(&graph(&[(0, 1), (1, 2), (2, 0)]), &SolverConfig::default().target(1e-12)).unwrap();
        for v in r.normalized_scores.iter() {
            assert!((v - 1.0 / 3.0).abs() < 1e-10);
        }
        assert_eq!(r.equivalent_iterations(), r.cycles as f64);
    }

    #[test]
    fn empty_graph_is_rejected() {
        let g = build_graph(&EdgeList::default(), None);
        assert_eq!(gauss_seidel(&g, &SolverConfig::default()), Err(SolverError::EmptyGraph));
    }

    #[test]
    fn invalid_damping_is_rejected() {
        let g = graph(&[(0, 1)]);
        assert!(matches!(
            gauss_seidel(&g, &SolverConfig::with_damping(1.0)),
            Err(SolverError::InvalidConfig(_))
        ));
    }
}
