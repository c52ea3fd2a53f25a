//! Numeric specialization of Gram matrices at `q = e^{2πiθ}` and fixed `μ`,
//! and positive-definiteness scans.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::herm_form::GramMatrix;
use crate::Error;

const MAX_RESIDUAL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct SpecializedGram {
    pub theta: Rational64,
    pub mu: f64,
    pub matrix: DMatrix<Complex64>,
    /// `‖M − M†‖∞` before symmetrization.
    pub residual: f64,
}

/// Evaluate every entry and symmetrize.
pub fn specialize(g: &GramMatrix, theta: Rational64, mu: f64) -> Result<SpecializedGram, Error> {
    let n = g.dim();
    let raw = DMatrix::from_fn(n, n, |r, c| g.entries[r][c].evaluate(theta, mu));
    let diff = &raw - raw.adjoint();
    let residual = diff.row_iter().map(|row| row.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
    if residual > MAX_RESIDUAL {
        return Err(Error::HermiticityResidual(residual));
    }
    let matrix = (&raw + raw.adjoint()).scale(0.5);
    Ok(SpecializedGram { theta, mu, matrix, residual })
}

/// Smallest eigenvalue; `+∞` for the empty matrix.
pub fn min_eigenvalue(g: &SpecializedGram) -> f64 {
    min_eigenvalue_of(&g.matrix)
}

pub fn min_eigenvalue_of(m: &DMatrix<Complex64>) -> f64 {
    if m.nrows() == 0 {
        return f64::INFINITY;
    }
    m.clone().symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
}

pub fn is_positive_definite(min_eig: f64, dim: usize) -> bool {
    min_eig > 1e-9 * dim as f64
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanSample {
    pub mu: f64,
    pub min_eig: f64,
    pub pd: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanReport {
    pub level: (usize, usize),
    pub window: i64,
    pub theta: Rational64,
    pub samples: Vec<ScanSample>,
}

impl ScanReport {
    pub fn to_json(&self) -> Value {
        json!({
            "level": [self.level.0, self.level.1],
            "window": self.window,
            "theta": format!("{}/{}", self.theta.numer(), self.theta.denom()),
            "samples": self
                .samples
                .iter()
                .map(|s| json!({"mu": s.mu, "min_eig": finite_or_null(s.min_eig), "pd": s.pd}))
                .collect::<Vec<_>>(),
        })
    }
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// Positive-definiteness of one exact Gram matrix across a grid of `μ`.
pub fn mu_scan(g: &GramMatrix, theta: Rational64, mu_grid: &[f64]) -> Result<ScanReport, Error> {
    let mut grid = mu_grid.to_vec();
    grid.sort_by(f64::total_cmp);
    let samples = grid
        .par_iter()
        .map(|&mu| {
            let s = specialize(g, theta, mu)?;
            let min_eig = min_eigenvalue(&s);
            Ok(ScanSample { mu, min_eig, pd: is_positive_definite(min_eig, g.dim()) })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(ScanReport { level: g.spec.level, window: g.spec.window, theta, samples })
}
