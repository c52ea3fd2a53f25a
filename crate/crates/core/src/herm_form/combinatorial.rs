//! Closed-form evaluation of the form as a sum over permutation pairs.
//!
//! For words `u = E₁₂(a₁)…E₁₂(a_k)E₃₂(b₁)…E₃₂(b_l).1` and `v` of the same
//! level, set `λ_{rc} = bar(u_r)·v_c` when rows `r` and columns `c` lie in the
//! same block (both `E₁₂` or both `E₃₂`) and `0` otherwise. Then
//!
//! ```text
//! (u, v) = Σ_{τ ∈ S_k × S_l} Σ_{ρ ∈ S_{k+l}} Π_{cycles (r → ρr → …)} μ κ(λ_{r,τr} λ_{ρr,τρr} ⋯)
//! ```
//!
//! The signs `(−1)^{k+l}` from `ω` and `(−μ)` per cycle cancel with the cycle
//! signs, leaving every term with coefficient `+1`.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::words::BasisWord;
use crate::coefficients::{GaussianRational, ScalarKey, ScalarPoly};
use crate::quantum_torus::TorusMonomial;

/// How permutation pairs are grouped into classes; only `CyclesUnordered`
/// matches the recursive form. The others exist as negative controls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClassConvention {
    /// Each `(τ, ρ)` pair counted once.
    #[default]
    CyclesUnordered,
    /// Cycles treated as ordered blocks: weight `c!` for `c` cycles.
    OrderedBlocks,
    /// Neither block order nor rotations identified: weight `c!·Π|cycle|`.
    Unreduced,
}

impl std::str::FromStr for ClassConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cycles-unordered" => Ok(Self::CyclesUnordered),
            "ordered-blocks" => Ok(Self::OrderedBlocks),
            "unreduced" => Ok(Self::Unreduced),
            other => Err(format!("unknown class convention '{other}'")),
        }
    }
}

pub fn form_combinatorial(u: &BasisWord, v: &BasisWord) -> ScalarPoly {
    form_combinatorial_with(u, v, ClassConvention::CyclesUnordered)
}

pub fn form_combinatorial_with(u: &BasisWord, v: &BasisWord, convention: ClassConvention) -> ScalarPoly {
    if u.level() != v.level() {
        return ScalarPoly::zero();
    }
    let (k, l) = u.level();
    let n = k + l;
    let rows: Vec<(i64, TorusMonomial)> = u.e12_args().iter().chain(u.e32_args()).map(|x| x.bar()).collect();
    let cols: Vec<TorusMonomial> = v.e12_args().iter().chain(v.e32_args()).copied().collect();
    let lambda = |r: usize, c: usize| -> (i64, TorusMonomial) {
        let (p0, a) = rows[r];
        let (p1, prod) = a.mul(cols[c]);
        (p0 + p1, prod)
    };

    let block_perms: Vec<Vec<usize>> = (0..k)
        .permutations(k)
        .cartesian_product((k..n).permutations(l).collect::<Vec<_>>())
        .map(|(a, b)| a.into_iter().chain(b).collect())
        .collect();
    let all_perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();

    // (μ-degree, q-exponent) → multiplicity
    let mut acc: BTreeMap<(u32, i64), i64> = BTreeMap::new();
    let mut seen = vec![false; n];
    for tau in &block_perms {
        let lam: Vec<(i64, TorusMonomial)> = (0..n).map(|r| lambda(r, tau[r])).collect();
        'rho: for rho in &all_perms {
            seen.iter_mut().for_each(|s| *s = false);
            let mut phase = 0i64;
            let mut cycles = 0u32;
            let mut lengths = 1i64;
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                cycles += 1;
                let mut prod = TorusMonomial::ONE;
                let mut r = start;
                let mut len = 0;
                while !seen[r] {
                    seen[r] = true;
                    let (p, m) = lam[r];
                    let (p2, next) = prod.mul(m);
                    phase += p + p2;
                    prod = next;
                    r = rho[r];
                    len += 1;
                }
                if !prod.is_one() {
                    continue 'rho;
                }
                lengths *= len;
            }
            let weight = match convention {
                ClassConvention::CyclesUnordered => 1,
                ClassConvention::OrderedBlocks => factorial(cycles),
                ClassConvention::Unreduced => factorial(cycles) * lengths,
            };
            *acc.entry((cycles, phase)).or_default() += weight;
        }
    }
    ScalarPoly::from_terms(
        acc.into_iter()
            .map(|((mu_deg, q_exp), c)| (ScalarKey { mu_deg, q_exp }, GaussianRational::from_int(c))),
    )
}

fn factorial(c: u32) -> i64 {
    (1..=c as i64).product()
}
