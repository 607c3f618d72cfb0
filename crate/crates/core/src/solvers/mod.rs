//! Iterative solvers for `x = d·P·x + (1-d)/N`.
//!
//! All five schemes share [`SolverConfig`] and report a [`SolverResult`].
//! Work is measured in link traversals: one full sweep of a row or column
//! method touches every link once, so `link_traversals / L` gives a cost in
//! "equivalent iterations" that is comparable across schemes which process
//! only part of the graph per cycle.
//!
//! Power iteration renormalizes every iterate to a probability vector. The
//! Gauss-Seidel and diffusion schemes instead converge to the raw solution of
//! the substochastic system, whose L1 normalization is the same PageRank
//! vector.

pub(crate) mod clock;
mod diffusion;
mod gauss_seidel;
mod oracle;
mod power;
mod vector;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::graph::Graph;

pub use diffusion::{di_cyclic, di_sop, Diffusion, DiffusionState};
pub use gauss_seidel::gauss_seidel;
pub use oracle::{fixed_point_residual, oracle_solve, ORACLE_MAX_NODES};
pub use power::{pi_col, pi_row};
pub use vector::{l1_distance, l1_normalize, RankVector};

pub const DEFAULT_DAMPING: f64 = 0.85;
pub const DEFAULT_MAX_CYCLES: usize = 100_000;

/// Smallest admissible value of the `1 - d - d·e` normalization term.
pub(crate) const DEGENERATE_DENOMINATOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverConfig {
    pub damping: f64,
    /// Stopping threshold on the error estimate; `None` means `1/N`.
    pub target_error: Option<f64>,
    pub max_cycles: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            damping: DEFAULT_DAMPING,
            target_error: None,
            max_cycles: DEFAULT_MAX_CYCLES,
        }
    }
}

impl SolverConfig {
    pub fn with_damping(damping: f64) -> Self {
        SolverConfig {
            damping,
            ..Default::default()
        }
    }

    pub fn target(mut self, target_error: f64) -> Self {
        self.target_error = Some(target_error);
        self
    }

    pub fn max_cycles(mut self, max_cycles: usize) -> Self {
        self.max_cycles = max_cycles;
        self
    }

    /// The stopping threshold for a graph of `n` nodes.
    pub fn target_for(&self, n: usize) -> f64 {
        self.target_error.unwrap_or(1.0 / n.max(1) as f64)
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(SolverError::InvalidConfig(format!(
                "damping must lie in (0, 1), got {}",
                self.damping
            )));
        }
        if let Some(t) = self.target_error {
            if !(t > 0.0 && t.is_finite()) {
                return Err(SolverError::InvalidConfig(format!(
                    "target error must be positive, got {t}"
                )));
            }
        }
        if self.max_cycles == 0 {
            return Err(SolverError::InvalidConfig("max_cycles must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverResult {
    pub algorithm: Algorithm,
    /// Raw iterate: a probability vector for power iteration, the
    /// substochastic solution for Gauss-Seidel and diffusion.
    pub scores: RankVector,
    pub normalized_scores: RankVector,
    pub link_traversals: u64,
    /// L of the solved graph.
    pub link_count: usize,
    pub cycles: usize,
    pub error_history: Vec<f64>,
    pub target_error: f64,
    pub converged: bool,
    pub solve_time: Duration,
}

impl SolverResult {
    /// Link traversals divided by L. Edgeless graphs fall back to the cycle
    /// count.
    pub fn equivalent_iterations(&self) -> f64 {
        if self.link_count == 0 {
            self.cycles as f64
        } else {
            self.link_traversals as f64 / self.link_count as f64
        }
    }

    pub fn final_error(&self) -> f64 {
        self.error_history.last().copied().unwrap_or(f64::INFINITY)
    }

    /// The `k` highest normalized scores, ties broken by node id.
    pub fn top(&self, k: usize) -> Vec<(usize, f64)> {
        let mut ranked: Vec<(usize, f64)> = self.normalized_scores.iter().copied().enumerate().collect();
        ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        ranked.truncate(k);
        ranked
    }
}

/// Solver state exposed to observers at the end of each cycle.
#[derive(Debug, Clone, Copy)]
pub enum CycleState<'a> {
    /// Current iterate of power iteration or Gauss-Seidel.
    Iterate(&'a [f64]),
    Diffusion(&'a DiffusionState),
}

#[derive(Debug, Clone, Copy)]
pub struct CycleReport<'a> {
    /// 1-based cycle number.
    pub cycle: usize,
    pub error: f64,
    pub link_traversals: u64,
    pub state: CycleState<'a>,
}

pub type Observer<'o> = &'o mut dyn FnMut(&CycleReport<'_>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "pi")]
    PowerRow,
    #[serde(rename = "pi-col")]
    PowerColumn,
    #[serde(rename = "gs")]
    GaussSeidel,
    #[serde(rename = "di-cyc")]
    DiCyclic,
    #[serde(rename = "di-sop")]
    DiSop,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::PowerRow,
        Algorithm::PowerColumn,
        Algorithm::GaussSeidel,
        Algorithm::DiCyclic,
        Algorithm::DiSop,
    ];

    /// Column label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Algorithm::PowerRow => "PI",
            Algorithm::PowerColumn => "PI'",
            Algorithm::GaussSeidel => "GS",
            Algorithm::DiCyclic => "DI-CYC",
            Algorithm::DiSop => "DI-SOP",
        }
    }

    /// Command-line spelling.
    pub fn flag(self) -> &'static str {
        match self {
            Algorithm::PowerRow => "pi",
            Algorithm::PowerColumn => "pi-col",
            Algorithm::GaussSeidel => "gs",
            Algorithm::DiCyclic => "di-cyc",
            Algorithm::DiSop => "di-sop",
        }
    }

    pub fn solve(self, g: &Graph, config: &SolverConfig) -> Result<SolverResult, SolverError> {
        self.solve_observed(g, config, &mut |_| {})
    }

    pub fn solve_observed(
        self,
        g: &Graph,
        config: &SolverConfig,
        observer: Observer<'_>,
    ) -> Result<SolverResult, SolverError> {
        match self {
            Algorithm::PowerRow => power::run(g, config, power::Orientation::Row, observer),
            Algorithm::PowerColumn => power::run(g, config, power::Orientation::Column, observer),
            Algorithm::GaussSeidel => gauss_seidel::run(g, config, observer),
            Algorithm::DiCyclic => diffusion::run(g, config, diffusion::Selection::Cyclic, observer),
            Algorithm::DiSop => diffusion::run(g, config, diffusion::Selection::AverageCost, observer),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.flag().eq_ignore_ascii_case(s) || a.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm {s:?} (expected pi, pi-col, gs, di-cyc or di-sop)"))
    }
}

/// Validation shared by every solver entry point.
fn prepare(g: &Graph, config: &SolverConfig) -> Result<f64, SolverError> {
    config.validate()?;
    if g.node_count() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    Ok(config.target_for(g.node_count()))
}

/// Bookkeeping common to all iteration loops.
struct Progress {
    target: f64,
    max_cycles: usize,
    cycles: usize,
    link_traversals: u64,
    history: Vec<f64>,
    clock: clock::Stopwatch,
}

impl Progress {
    fn new(target: f64, config: &SolverConfig) -> Self {
        Progress {
            target,
            max_cycles: config.max_cycles,
            cycles: 0,
            link_traversals: 0,
            history: Vec::new(),
            clock: clock::Stopwatch::start(),
        }
    }

    /// Whether another cycle should run.
    fn unfinished(&self) -> bool {
        self.cycles < self.max_cycles && self.history.last().is_none_or(|&e| e > self.target)
    }

    fn record(&mut self, error: f64) {
        self.cycles += 1;
        self.history.push(error);
    }

    fn report<'a>(&self, state: CycleState<'a>) -> CycleReport<'a> {
        CycleReport {
            cycle: self.cycles,
            error: self.history.last().copied().unwrap_or(f64::INFINITY),
            link_traversals: self.link_traversals,
            state,
        }
    }

    fn finish(self, algorithm: Algorithm, g: &Graph, scores: Vec<f64>) -> Result<SolverResult, SolverError> {
        let solve_time = self.clock.elapsed();
        let scores = RankVector::from(scores);
        let normalized_scores = l1_normalize(&scores)?;
        let converged = self.history.last().is_some_and(|&e| e <= self.target);
        Ok(SolverResult {
            algorithm,
            scores,
            normalized_scores,
            link_traversals: self.link_traversals,
            link_count: g.link_count(),
            cycles: self.cycles,
            error_history: self.history,
            target_error: self.target,
            converged,
            solve_time,
        })
    }
}
