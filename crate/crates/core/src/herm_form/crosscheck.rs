use rayon::prelude::*;
use serde_json::{json, Value};

use super::combinatorial::{form_combinatorial_with, ClassConvention};
use super::engine::FormEngine;
use super::gram::BasisSpec;
use super::words::BasisWord;
use crate::coefficients::ScalarPoly;

/// Every level with `k + l ≤ max_total`, ordered by total then `k`.
pub fn levels_up_to(max_total: usize) -> Vec<(usize, usize)> {
    (0..=max_total).flat_map(|n| (0..=n).map(move |k| (k, n - k))).collect()
}

/// All canonical words with `k + l ≤ max_total` in the given window.
pub fn words_up_to(max_total: usize, window: i64) -> Vec<BasisWord> {
    levels_up_to(max_total)
        .into_iter()
        .flat_map(|lvl| BasisSpec::new(lvl, window).words())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub u: BasisWord,
    pub v: BasisWord,
    pub recursive: ScalarPoly,
    pub combinatorial: ScalarPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub max_total: usize,
    pub window: i64,
    pub words: usize,
    pub pairs: usize,
    /// First disagreement in row-major pair order.
    pub mismatch: Option<Mismatch>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "max_total": self.max_total,
            "window": self.window,
            "words": self.words,
            "pairs": self.pairs,
            "pass": self.passed(),
        });
        if let Some(m) = &self.mismatch {
            out["mismatch"] = json!({
                "u": m.u.to_string(),
                "v": m.v.to_string(),
                "recursive": m.recursive.to_string(),
                "combinatorial": m.combinatorial.to_string(),
            });
        }
        out
    }
}

/// Compare both evaluators on every ordered pair of words, mixed levels
/// included.
pub fn crosscheck(engine: &FormEngine, max_total: usize, window: i64, convention: ClassConvention) -> CrosscheckReport {
    let words = words_up_to(max_total, window);
    let mismatch = words
        .par_iter()
        .map(|u| {
            words.iter().find_map(|v| {
                let recursive = engine.form_recursive(u, v);
                let combinatorial = form_combinatorial_with(u, v, convention);
                (recursive != combinatorial).then(|| Mismatch { u: u.clone(), v: v.clone(), recursive, combinatorial })
            })
        })
        .find_first(Option::is_some)
        .flatten();
    CrosscheckReport { max_total, window, words: words.len(), pairs: words.len() * words.len(), mismatch }
}
