//! Power (Jacobi) iteration, gathering along rows or scattering along
//! columns.

use super::{prepare, Algorithm, CycleState, Observer, Progress, SolverConfig, SolverResult};
use crate::error::SolverError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Orientation {
    /// `x_new[i]` gathers from the in-list of `i`.
    Row,
    /// Each `x_old[i]` is scattered along the out-list of `i`.
    Column,
}

/// Power iteration over in-lists (PI).
pub fn pi_row(g: &Graph, config: &SolverConfig) -> Result<SolverResult, SolverError> {
    run(g, config, Orientation::Row, &mut |_| {})
}

/// Power iteration over out-lists (PI').
pub fn pi_col(g: &Graph, config: &SolverConfig) -> Result<SolverResult, SolverError> {
    run(g, config, Orientation::Column, &mut |_| {})
}

pub(super) fn run(
    g: &Graph,
    config: &SolverConfig,
    orientation: Orientation,
    observer: Observer<'_>,
) -> Result<SolverResult, SolverError> {
    let target = prepare(g, config)?;
    let n = g.node_count();
    let nf = n as f64;
    let d = config.damping;
    let teleport = (1.0 - d) / nf;
    let out: Vec<f64> = g.out_degrees().map(|k| k as f64).collect();
    let links = g.link_count() as u64;

    let mut progress = Progress::new(target, config);
    let mut x_old = vec![1.0 / nf; n];
    let mut x_new = vec![0.0; n];

    while progress.unfinished() {
        x_new.fill(teleport);
        match orientation {
            Orientation::Row => {
                for (i, xi) in x_new.iter_mut().enumerate() {
                    for &j in g.in_neighbors(i) {
                        let j = j as usize;
                        *xi += d * x_old[j] / out[j];
                    }
                }
            }
            Orientation::Column => {
                for i in 0..n {
                    let targets = g.out_neighbors(i);
                    if targets.is_empty() {
                        continue;
                    }
                    let transit = d * x_old[i] / out[i];
                    for &j in targets {
                        x_new[j as usize] += transit;
                    }
                }
            }
        }
        // Mass lost at dangling nodes goes back uniformly.
        let total: f64 = x_new.iter().sum();
        let missing = (1.0 - total) / nf;
        for v in x_new.iter_mut() {
            *v += missing;
        }
        let change: f64 = x_new.iter().zip(&x_old).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x_old, &mut x_new);

        progress.link_traversals += links;
        progress.record(change * d / (1.0 - d));
        observer(&progress.report(CycleState::Iterate(&x_old)));
    }

    let algorithm = match orientation {
        Orientation::Row => Algorithm::PowerRow,
        Orientation::Column => Algorithm::PowerColumn,
    };
    progress.finish(algorithm, g, x_old)
}
