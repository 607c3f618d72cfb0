use std::ops::{Deref, DerefMut};

use crate::error::SolverError;

/// Per-node non-negative scores.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RankVector(Vec<f64>);

impl RankVector {
    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

impl From<Vec<f64>> for RankVector {
    fn from(v: Vec<f64>) -> Self {
        RankVector(v)
    }
}

impl Deref for RankVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl DerefMut for RankVector {
    fn deref_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }
}

/// Scales `v` to unit L1 norm.
pub fn l1_normalize(v: &[f64]) -> Result<RankVector, SolverError> {
    let sum: f64 = v.iter().map(|x| x.abs()).sum();
    if !sum.is_finite() || sum <= 0.0 {
        return Err(SolverError::ZeroSum);
    }
    Ok(RankVector(v.iter().map(|x| x / sum).collect()))
}

pub fn l1_distance(a: &[f64], b: &[f64]) -> Result<f64, SolverError> {
    if a.len() != b.len() {
        return Err(SolverError::DimensionMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum())
}
