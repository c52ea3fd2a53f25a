use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::words::BasisWord;
use crate::coefficients::GaussianRational;
use crate::fock::{apply_generator, FockMonomial, FockPoly, FreeFieldConfig};

/// `q ↦ (3+4i)/5`, `μ ↦ 7/3`: a point on the unit circle of infinite order.
/// A rank attained at one specialization is a lower bound for the generic
/// rank, and the word count is an upper bound.
fn rank_point() -> (GaussianRational, GaussianRational) {
    (
        GaussianRational::new(Rational64::new(3, 5), Rational64::new(4, 5)),
        GaussianRational::ratio(7, 3),
    )
}

/// `π(w)·1`, applying the rightmost factor first.
pub fn realize(w: &BasisWord, cfg: &FreeFieldConfig) -> FockPoly {
    let mut v = FockPoly::one();
    for x in w.e32_args().iter().rev() {
        v = apply_generator(3, 2, x.m, x.n, &v, cfg);
    }
    for x in w.e12_args().iter().rev() {
        v = apply_generator(1, 2, x.m, x.n, &v, cfg);
    }
    v
}

/// Dimension of the span of the words' polynomial images.
pub fn words_to_polys_rank(words: &[BasisWord], cfg: &FreeFieldConfig) -> usize {
    let (q, mu) = rank_point();
    let polys: Vec<FockPoly> = words.iter().map(|w| realize(w, cfg)).collect();
    let mut columns: BTreeMap<FockMonomial, usize> = BTreeMap::new();
    for p in &polys {
        for (m, _) in p.terms() {
            let next = columns.len();
            columns.entry(m.clone()).or_insert(next);
        }
    }
    let rows: Vec<Vec<GaussianRational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![GaussianRational::zero(); columns.len()];
            for (m, c) in p.terms() {
                row[columns[m]] = c.specialize(q, mu);
            }
            row
        })
        .collect();
    rank(rows)
}

/// Row rank by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<GaussianRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = *x * inv;
        }
        debug_assert!(rows[r][col].is_one());
        for i in (r + 1)..rows.len() {
            let f = rows[i][col];
            if f.is_zero() {
                continue;
            }
            for c in col..ncols {
                let delta = f * rows[r][c];
                rows[i][c] = rows[i][c] - delta;
            }
        }
        r += 1;
    }
    r
}
