use itertools::Itertools;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::engine::FormEngine;
use super::words::{BasisWord, ShiftParams};
use crate::coefficients::ScalarPoly;
use crate::quantum_torus::TorusMonomial;
use crate::Error;

/// Which words make up a Gram basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisSpec {
    pub level: (usize, usize),
    /// Every argument exponent lies in `[-window, window]`.
    pub window: i64,
    /// Optional truncation `L(M, N)`: arguments have nonnegative exponents,
    /// the `s`-exponents of all arguments sum to at most `M` and the
    /// `t`-exponents to at most `N`.
    pub constraint: Option<(i64, i64)>,
}

impl BasisSpec {
    pub fn new(level: (usize, usize), window: i64) -> Self {
        Self { level, window, constraint: None }
    }

    pub fn with_constraint(mut self, m: i64, n: i64) -> Self {
        self.constraint = Some((m, n));
        self
    }

    fn monomials(&self) -> Vec<TorusMonomial> {
        let lo = if self.constraint.is_some() { 0 } else { -self.window };
        let w = self.window;
        (lo..=w).cartesian_product(lo..=w).map(|(m, n)| TorusMonomial::new(m, n)).collect()
    }

    /// Canonical words at this level, ordered lexicographically on the
    /// flattened argument list.
    pub fn words(&self) -> Vec<BasisWord> {
        let monos = self.monomials();
        let (k, l) = self.level;
        let firsts: Vec<Vec<TorusMonomial>> = monos.iter().copied().combinations_with_replacement(k).collect();
        let seconds: Vec<Vec<TorusMonomial>> = monos.iter().copied().combinations_with_replacement(l).collect();
        let mut out = Vec::new();
        for a in &firsts {
            for b in &seconds {
                let w = BasisWord::new(a.clone(), b.clone());
                if self.admits(&w) {
                    out.push(w);
                }
            }
        }
        out
    }

    fn admits(&self, w: &BasisWord) -> bool {
        match self.constraint {
            None => true,
            Some((m_max, n_max)) => {
                let args = || w.e12_args().iter().chain(w.e32_args());
                args().map(|x| x.m).sum::<i64>() <= m_max && args().map(|x| x.n).sum::<i64>() <= n_max
            }
        }
    }
}

/// Form values over an ordered basis of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub spec: BasisSpec,
    pub basis: Vec<BasisWord>,
    pub entries: Vec<Vec<ScalarPoly>>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `{"level", "window", "basis", "entries"}` plus `"constraint"` when set.
    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "level": [self.spec.level.0, self.spec.level.1],
            "window": self.spec.window,
            "basis": self.basis.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "entries": self
                .entries
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
        if let Some((m, n)) = self.spec.constraint {
            out["constraint"] = json!([m, n]);
        }
        out
    }

    fn check_hermitian(&self) -> Result<(), Error> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, x) in row.iter().enumerate().skip(r) {
                if *x != self.entries[c][r].conjugate() {
                    return Err(Error::NotHermitian { row: r, col: c });
                }
            }
        }
        Ok(())
    }
}

/// Gram matrix of the recursive form over an explicit basis.
pub fn gram_of_words(engine: &FormEngine, spec: BasisSpec, basis: Vec<BasisWord>) -> Result<GramMatrix, Error> {
    let entries: Vec<Vec<ScalarPoly>> = basis
        .par_iter()
        .map(|u| basis.iter().map(|v| engine.form_recursive(u, v)).collect())
        .collect();
    let g = GramMatrix { spec, basis, entries };
    g.check_hermitian()?;
    Ok(g)
}

pub fn gram(engine: &FormEngine, spec: BasisSpec) -> Result<GramMatrix, Error> {
    gram_of_words(engine, spec, spec.words())
}

/// Gram matrix over the basis relabeled by `T̃_{a,b}`.
pub fn gram_shifted(engine: &FormEngine, spec: BasisSpec, p: ShiftParams) -> Result<GramMatrix, Error> {
    let basis = spec.words().iter().map(|w| w.shifted(p)).collect();
    gram_of_words(engine, spec, basis)
}
