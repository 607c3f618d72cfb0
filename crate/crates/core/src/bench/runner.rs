use std::time::Duration;

use super::plan::{BenchmarkPlan, DatasetSource, Orientation};
use crate::error::Error;
use crate::graph::{build_graph, compute_stats, load_edge_list, transpose, EdgeList, GraphStats};
use crate::solvers::clock::Stopwatch;
use crate::solvers::{Algorithm, SolverConfig, SolverResult};
use crate::synth::web_like;

#[derive(Debug, Clone, PartialEq)]
pub struct RowMetrics {
    /// Equivalent iterations (link traversals / L).
    pub nb_iter: f64,
    /// Best of the plan's repetitions.
    pub solve_time: Duration,
    pub converged: bool,
    pub final_error: f64,
    pub speedup_iter: Option<f64>,
    pub speedup_time: Option<f64>,
    /// Present when the plan asks to keep scores.
    pub normalized_scores: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RowOutcome {
    Solved(RowMetrics),
    /// The solver refused or aborted; the message is kept for the report.
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowReport {
    pub algorithm: Algorithm,
    pub outcome: RowOutcome,
}

impl RowReport {
    pub fn metrics(&self) -> Option<&RowMetrics> {
        match &self.outcome {
            RowOutcome::Solved(m) => Some(m),
            RowOutcome::Failed(_) => None,
        }
    }
}

/// Results for one (dataset, N, orientation) triple.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockReport {
    pub dataset: String,
    pub n: usize,
    pub orientation: Orientation,
    /// Load + truncation + transposition time.
    pub init_time: Duration,
    pub stats: GraphStats,
    pub rows: Vec<RowReport>,
}

impl BlockReport {
    pub fn row(&self, algorithm: Algorithm) -> Option<&RowReport> {
        self.rows.iter().find(|r| r.algorithm == algorithm)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchmarkReport {
    pub blocks: Vec<BlockReport>,
}

fn load(source: &DatasetSource) -> Result<EdgeList, Error> {
    match source {
        DatasetSource::File { path, format } => load_edge_list(path, *format),
        DatasetSource::Synthetic(params) => Ok(web_like(params)),
        DatasetSource::Inline(edges) => Ok(edges.clone()),
    }
}

/// Runs every block of the plan sequentially.
///
/// Each dataset is loaded once; every prefix is re-truncated from the full
/// edge list. A block's init time is the load time plus its own build (and
/// transpose) time. Solver failures are recorded per row; only I/O and
/// format errors abort the plan.
pub fn run_plan(plan: &BenchmarkPlan) -> Result<BenchmarkReport, Error> {
    plan.validate()?;
    let mut report = BenchmarkReport::default();
    for dataset in &plan.datasets {
        let clock = Stopwatch::start();
        let edges = load(&dataset.source)?;
        let load_time = clock.elapsed();

        let prefixes = plan
            .n_prefixes
            .clone()
            .unwrap_or_else(|| vec![edges.declared_n()]);
        for n in prefixes {
            let clock = Stopwatch::start();
            let forward = build_graph(&edges, Some(n));
            let build_time = clock.elapsed();
            for &orientation in &plan.orientations {
                let clock = Stopwatch::start();
                let transposed;
                let graph = match orientation {
                    Orientation::Forward => &forward,
                    Orientation::Transposed => {
                        transposed = transpose(&forward);
                        &transposed
                    }
                };
                let init_time = load_time + build_time + clock.elapsed();
                let rows = plan
                    .algorithms
                    .iter()
                    .map(|&algorithm| solve_row(graph, algorithm, &plan.config, plan.repetitions, plan.keep_scores))
                    .collect();
                let mut block = BlockReport {
                    dataset: dataset.name.clone(),
                    n,
                    orientation,
                    init_time,
                    stats: compute_stats(graph),
                    rows,
                };
                fill_speedups(&mut block);
                report.blocks.push(block);
            }
        }
    }
    Ok(report)
}

fn solve_row(
    graph: &crate::graph::Graph,
    algorithm: Algorithm,
    config: &SolverConfig,
    repetitions: usize,
    keep_scores: bool,
) -> RowReport {
    let mut best: Option<SolverResult> = None;
    for _ in 0..repetitions {
        let result = match algorithm.solve(graph, config) {
            Ok(r) => r,
            Err(e) => {
                return RowReport {
                    algorithm,
                    outcome: RowOutcome::Failed(e.to_string()),
                }
            }
        };
        best = Some(match best {
            None => result,
            Some(prev) => {
                if prev.scores != result.scores || prev.link_traversals != result.link_traversals {
                    return RowReport {
                        algorithm,
                        outcome: RowOutcome::Failed("non-deterministic result across repetitions".into()),
                    };
                }
                if result.solve_time < prev.solve_time {
                    result
                } else {
                    prev
                }
            }
        });
    }
    let best = best.expect("at least one repetition");
    RowReport {
        algorithm,
        outcome: RowOutcome::Solved(RowMetrics {
            nb_iter: best.equivalent_iterations(),
            solve_time: best.solve_time,
            converged: best.converged,
            final_error: best.final_error(),
            speedup_iter: None,
            speedup_time: None,
            normalized_scores: keep_scores.then(|| best.normalized_scores.into_inner()),
        }),
    }
}

/// Gain factors relative to PI, when PI ran in the block.
fn fill_speedups(block: &mut BlockReport) {
    let Some(reference) = block.row(Algorithm::PowerRow).and_then(RowReport::metrics) else {
        return;
    };
    let (ref_iter, ref_time) = (reference.nb_iter, reference.solve_time);
    for row in &mut block.rows {
        if let RowOutcome::Solved(m) = &mut row.outcome {
            if row.algorithm == Algorithm::PowerRow {
                m.speedup_iter = Some(1.0);
                m.speedup_time = Some(1.0);
                continue;
            }
            m.speedup_iter = (m.nb_iter > 0.0).then(|| ref_iter / m.nb_iter);
            m.speedup_time = (!m.solve_time.is_zero()).then(|| ref_time.as_secs_f64() / m.solve_time.as_secs_f64());
        }
    }
}
