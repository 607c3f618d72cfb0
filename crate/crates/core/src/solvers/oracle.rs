//! Dense direct solve used to check the iterative schemes.

use nalgebra::{DMatrix, DVector};

use super::{RankVector, SolverConfig};
use crate::error::SolverError;
use crate::graph::Graph;

pub const ORACLE_MAX_NODES: usize = 2000;

const RESIDUAL_TOLERANCE: f64 = 1e-12;

/// Solves `(I - d·P)·x = (1-d)/N` by LU factorization, where
/// `P[i][j] = mult(j -> i) / out_j` and dangling columns are zero.
///
/// The result is the raw substochastic solution; its L1 normalization is
/// the PageRank vector.
pub fn oracle_solve(g: &Graph, config: &SolverConfig) -> Result<RankVector, SolverError> {
    config.validate()?;
    let n = g.node_count();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if n > ORACLE_MAX_NODES {
        return Err(SolverError::OracleTooLarge {
            n,
            limit: ORACLE_MAX_NODES,
        });
    }
    let d = config.damping;
    let mut a = DMatrix::<f64>::identity(n, n);
    for j in 0..n {
        let out = g.out_degree(j) as f64;
        for &i in g.out_neighbors(j) {
            a[(i as usize, j)] -= d / out;
        }
    }
    let b = DVector::from_element(n, (1.0 - d) / n as f64);
    let lu = a.clone().lu();
    let mut x = lu
        .solve(&b)
        .ok_or_else(|| SolverError::InvalidConfig("singular system".into()))?;
    // A couple of refinement steps push the residual to rounding level.
    for _ in 0..3 {
        let r = &b - &a * &x;
        if r.iter().map(|v| v.abs()).sum::<f64>() <= RESIDUAL_TOLERANCE * 1e-2 {
            break;
        }
        if let Some(dx) = lu.solve(&r) {
            x += dx;
        }
    }
    Ok(RankVector::from(x.iter().copied().collect::<Vec<_>>()))
}

/// L1 norm of `x - (d·P·x + (1-d)/N)`, evaluated on the sparse structure.
pub fn fixed_point_residual(g: &Graph, damping: f64, x: &[f64]) -> f64 {
    let n = g.node_count();
    let teleport = (1.0 - damping) / n as f64;
    (0..n)
        .map(|i| {
            let inflow: f64 = g
                .in_neighbors(i)
                .iter()
                .map(|&j| x[j as usize] / g.out_degree(j as usize) as f64)
                .sum();
            (x[i] - teleport - damping * inflow).abs()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeList};

    fn graph(edges: &[(u32, u32)], n: usize) -> Graph {
        build_graph(&EdgeList::with_declared_n(edges.to_vec(), n).unwrap(), None)
    }

    #[test]
    fn isolated_node() {
        let x = oracle_solve(&graph(&[], 1), &SolverConfig::default()).unwrap();
        assert!((x[0] - 0.15).abs() < 1e-15);
    }

    #[test]
    fn three_cycle_is_uniform() {
        let g = graph(&[(0, 1), (1, 2), (2, 0)], 3);
        let x = oracle_solve(&g, &SolverConfig::default()).unwrap();
        assert!((x[0] - x[1]).abs() < 1e-15 && (x[1] - x[2]).abs() < 1e-15);
        assert!(fixed_point_residual(&g, 0.85, &x) <= RESIDUAL_TOLERANCE);
    }

    #[test]
    fn chain_closed_form() {
        let x = oracle_solve(&graph(&[(0, 1)], 2), &SolverConfig::default()).unwrap();
        assert!((x[0] - 0.075).abs() < 1e-15);
        assert!((x[1] - 0.15 * 1.85 / 2.0).abs() < 1e-15);
    }

    #[test]
    fn refuses_large_graphs() {
        let g = graph(&[], ORACLE_MAX_NODES + 1);
        assert_eq!(
            oracle_solve(&g, &SolverConfig::default()),
            Err(SolverError::OracleTooLarge {
                n: ORACLE_MAX_NODES + 1,
                limit: ORACLE_MAX_NODES
            })
        );
    }
}
