//! Browser bindings for the solver comparison demo.
//!
//! The page in `www/` drives three operations on a loaded graph: statistics,
//! convergence curves for all five solvers, and the top-ranked nodes for one
//! solver. The plain-Rust functions below do the work so they can be tested
//! natively; the `Demo` wrapper only converts to and from JS values.

use diter_core::graph::decode_edge_list;
use diter_core::synth::{web_like, WebGraphParams};
use diter_core::{build_graph, compute_stats, transpose, Algorithm, Graph, GraphStats, SolverConfig};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Solver budget for the demo; keeps the page responsive on bad inputs.
const DEMO_MAX_CYCLES: usize = 2_000;

#[derive(Debug, Clone, Serialize)]
pub struct Curve {
    pub algorithm: &'static str,
    pub flag: &'static str,
    /// Link traversals divided by L at the end of each cycle.
    pub iterations: Vec<f64>,
    pub errors: Vec<f64>,
    pub nb_iter: f64,
    pub converged: bool,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Ranked {
    pub node: usize,
    pub score: f64,
    pub in_degree: usize,
    pub out_degree: usize,
}

pub fn generate_graph(nodes: usize, seed: u64, intra_host: f64, closed_hosts: f64) -> Graph {
    let params = WebGraphParams {
        nodes,
        seed,
        intra_host: intra_host.clamp(0.0, 1.0),
        closed_hosts: closed_hosts.clamp(0.0, 1.0),
        ..WebGraphParams::default()
    };
    build_graph(&web_like(&params), None)
}

pub fn parse_graph(bytes: &[u8]) -> Result<Graph, String> {
    decode_edge_list(bytes, None)
        .map(|edges| build_graph(&edges, None))
        .map_err(|e| e.to_string())
}

fn config(damping: f64, target: Option<f64>) -> SolverConfig {
    SolverConfig {
        damping,
        target_error: target,
        max_cycles: DEMO_MAX_CYCLES,
    }
}

pub fn convergence_curves(g: &Graph, damping: f64, target: Option<f64>) -> Vec<Curve> {
    let cfg = config(damping, target);
    let links = g.link_count().max(1) as f64;
    Algorithm::ALL
        .into_iter()
        .map(|alg| {
            let mut iterations = Vec::new();
            let mut errors = Vec::new();
            let outcome = alg.solve_observed(g, &cfg, &mut |r| {
                iterations.push(r.link_traversals as f64 / links);
                errors.push(r.error);
            });
            let (nb_iter, converged, failure) = match outcome {
                Ok(r) => (r.equivalent_iterations(), r.converged, None),
                Err(e) => (f64::NAN, false, Some(e.to_string())),
            };
            Curve {
                algorithm: alg.label(),
                flag: alg.flag(),
                iterations,
                errors,
                nb_iter,
                converged,
                failure,
            }
        })
        .collect()
}

pub fn top_ranked(g: &Graph, algorithm: &str, damping: f64, k: usize) -> Result<Vec<Ranked>, String> {
    let alg: Algorithm = algorithm.parse()?;
    let r = alg.solve(g, &config(damping, None)).map_err(|e| e.to_string())?;
    Ok(r.top(k)
        .into_iter()
        .map(|(node, score)| Ranked {
            node,
            score,
            in_degree: g.in_degree(node),
            out_degree: g.out_degree(node),
        })
        .collect())
}

fn to_js<T: Serialize>(value: &T) -> Result<JsValue, JsError> {
    serde_wasm_bindgen::to_value(value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub struct Demo {
    graph: Graph,
}

#[wasm_bindgen]
impl Demo {
    pub fn generate(nodes: usize, seed: u32, intra_host: f64, closed_hosts: f64) -> Demo {
        Demo {
            graph: generate_graph(nodes, seed as u64, intra_host, closed_hosts),
        }
    }

    /// Accepts either edge-list encoding.
    #[wasm_bindgen(js_name = fromBytes)]
    pub fn from_bytes(bytes: &[u8]) -> Result<Demo, JsError> {
        parse_graph(bytes).map(|graph| Demo { graph }).map_err(|e| JsError::new(&e))
    }

    pub fn transposed(&self) -> Demo {
        Demo {
            graph: transpose(&self.graph),
        }
    }

    pub fn stats(&self) -> Result<JsValue, JsError> {
        let s: GraphStats = compute_stats(&self.graph);
        to_js(&s)
    }

    /// `target <= 0` selects the default of 1/N.
    pub fn compare(&self, damping: f64, target: f64) -> Result<JsValue, JsError> {
        let target = (target > 0.0).then_some(target);
        to_js(&convergence_curves(&self.graph, damping, target))
    }

    pub fn top(&self, algorithm: &str, damping: f64, k: usize) -> Result<JsValue, JsError> {
        let ranked = top_ranked(&self.graph, algorithm, damping, k).map_err(|e| JsError::new(&e))?;
        to_js(&ranked)
    }
}
