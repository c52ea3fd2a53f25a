//! Seeded exact checks of the algebraic identities: homomorphism property of
//! the free-field realization, Lie axioms, `ω`, Weyl relations, and the
//! degree operators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::coefficients::{GaussianRational, ScalarPoly};
use crate::fock::{apply_d, apply_generator, apply_p, apply_q, pi, DegreeAxis, FockMonomial, FockPoly, FreeFieldConfig, IndexPoint};
use crate::gl3::{jacobi_residual, GlBasisSymbol, GlElement};
use crate::quantum_torus::TorusMonomial;

/// Deliberate corruption for exercising the failure path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Multiply the matrix part of every bracket by `q` in the homomorphism suite.
    CorruptPhase,
}

impl std::str::FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Fault::None),
            "corrupt-phase" => Ok(Fault::CorruptPhase),
            other => Err(format!("unknown fault '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    /// First counterexample, rendered.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failure.is_none())
    }

    pub fn first_failure(&self) -> Option<String> {
        self.suites
            .iter()
            .find_map(|s| s.failure.as_ref().map(|f| format!("{}: {f}", s.name)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed(),
            "suites": self
                .suites
                .iter()
                .map(|s| json!({"name": s.name, "checks": s.checks, "pass": s.failure.is_none(), "failure": s.failure}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Matrix symbols with exponents in `[-2, 2]²`, plus `c_*`, `d_*`.
pub fn random_symbol(rng: &mut impl Rng) -> GlBasisSymbol {
    match rng.gen_range(0..50) {
        0 => GlBasisSymbol::CentralS,
        1 => GlBasisSymbol::CentralT,
        2 | 3 => GlBasisSymbol::DerS,
        4 | 5 => GlBasisSymbol::DerT,
        _ => GlBasisSymbol::matrix(
            rng.gen_range(1..=3),
            rng.gen_range(1..=3),
            TorusMonomial::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2)),
        ),
    }
}

/// Small Gaussian integer times `q^e μ^d`.
pub fn random_scalar(rng: &mut impl Rng) -> ScalarPoly {
    let c = loop {
        let c = GaussianRational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(-2i64..=2).into());
        if c != GaussianRational::new(0.into(), 0.into()) {
            break c;
        }
    };
    ScalarPoly::term(c, rng.gen_range(-2..=2), rng.gen_range(0..=1))
}

pub fn random_element(rng: &mut impl Rng) -> GlElement {
    let mut out = GlElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        out.add_term(random_symbol(rng), &random_scalar(rng));
    }
    out
}

/// A point of `K₁ ∪ K₋₁` with components in `[-1, 1]²`.
pub fn random_point(rng: &mut impl Rng) -> IndexPoint {
    let (m, n) = (rng.gen_range(-1..=1), rng.gen_range(-1..=1));
    if rng.gen_bool(0.5) {
        IndexPoint::plus(m, n)
    } else {
        IndexPoint::minus(m, n)
    }
}

/// A polynomial with up to three terms of degree ≤ 3 over window-1 points.
pub fn random_fock(rng: &mut impl Rng) -> FockPoly {
    let mut out = FockPoly::zero();
    while out.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let deg = rng.gen_range(0..=3);
            let mono = FockMonomial::from_powers((0..deg).map(|_| (random_point(rng), 1)));
            out.add_term(mono, &random_scalar(rng));
        }
    }
    out
}

/// Identity except at a few points, each `[[a, 0], [c, a⁻¹]]` with rational `a`.
pub fn random_config(rng: &mut impl Rng) -> FreeFieldConfig {
    let mut cfg = FreeFieldConfig::identity();
    for _ in 0..rng.gen_range(1..=4) {
        let num = *[1i64, 2, 3, -1, -2].choose(rng).expect("nonempty");
        let den = rng.gen_range(1..=3);
        let c = ScalarPoly::term(GaussianRational::from_int(rng.gen_range(-2..=2)), rng.gen_range(-1..=1), 0);
        cfg.set(random_point(rng), ScalarPoly::ratio(num, den), c, ScalarPoly::ratio(den, num))
            .expect("a·a⁻¹ = 1");
    }
    cfg
}

fn suite_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn bracket_with_fault(x: &GlElement, y: &GlElement, fault: Fault) -> GlElement {
    let b = x.bracket(y);
    match fault {
        Fault::None => b,
        Fault::CorruptPhase => {
            let mut out = GlElement::zero();
            for (sym, c) in b.terms() {
                let c = if matches!(sym, GlBasisSymbol::Matrix { .. }) { c.shift_q(1) } else { c.clone() };
                out.add_term(*sym, &c);
            }
            out
        }
    }
}

fn homomorphism_check(x: &GlElement, y: &GlElement, v: &FockPoly, cfg: &FreeFieldConfig, fault: Fault) -> Option<String> {
    let lhs = pi(&bracket_with_fault(x, y, fault), v, cfg);
    let rhs = pi(x, &pi(y, v, cfg), cfg).sub(&pi(y, &pi(x, v, cfg), cfg));
    (lhs != rhs).then(|| format!("π([{x}, {y}])·v ≠ [π({x}), π({y})]·v for v = {v}: {lhs} vs {rhs}"))
}

/// `π([x,y])v = [π(x), π(y)]v` in the default realization.
pub fn homomorphism_suite(seed: u64, samples: usize, fault: Fault) -> SuiteResult {
    let mut rng = suite_rng(seed, 1);
    let cfg = FreeFieldConfig::identity();
    let mut failure = None;
    for _ in 0..samples {
        let x = GlElement::symbol(random_symbol(&mut rng));
        let y = GlElement::symbol(random_symbol(&mut rng));
        let v = random_fock(&mut rng);
        failure = homomorphism_check(&x, &y, &v, &cfg, fault);
        if failure.is_some() {
            break;
        }
    }
    SuiteResult { name: "homomorphism", checks: samples, failure }
}

/// The same identity with randomly chosen free-field matrices.
pub fn config_independence_suite(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = suite_rng(seed, 2);
    let mut failure = None;
    for _ in 0..samples {
        let cfg = random_config(&mut rng);
        let x = GlElement::symbol(random_symbol(&mut rng));
        let y = GlElement::symbol(random_symbol(&mut rng));
        let v = random_fock(&mut rng);
        failure = homomorphism_check(&x, &y, &v, &cfg, Fault::None);
        if failure.is_some() {
            break;
        }
    }
    SuiteResult { name: "config-independence", checks: samples, failure }
}

pub fn antisymmetry_suite(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = suite_rng(seed, 3);
    let mut failure = None;
    for _ in 0..samples {
        let (x, y) = (random_element(&mut rng), random_element(&mut rng));
        let s = x.bracket(&y).add(&y.bracket(&x));
        if !s.is_zero() {
            failure = Some(format!("[{x}, {y}] + [{y}, {x}] = {s}"));
            break;
        }
    }
    SuiteResult { name: "antisymmetry", checks: samples, failure }
}

pub fn jacobi_suite(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = suite_rng(seed, 4);
    let mut failure = None;
    for _ in 0..samples {
        let (x, y, z) = (random_element(&mut rng), random_element(&mut rng), random_element(&mut rng));
        let r = jacobi_residual(&x, &y, &z);
        if !r.is_zero() {
            failure = Some(format!("Jacobi residual for ({x}, {y}, {z}) is {r}"));
            break;
        }
    }
    SuiteResult { name: "jacobi", checks: samples, failure }
}

/// `ω² = id` and `ω([x,y]) = [ω(y), ω(x)]`.
pub fn omega_suite(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = suite_rng(seed, 5);
    let mut failure = None;
    for _ in 0..samples {
        let (x, y) = (random_element(&mut rng), random_element(&mut rng));
        if x.omega().omega() != x {
            failure = Some(format!("ω²({x}) = {}", x.omega().omega()));
            break;
        }
        let lhs = x.bracket(&y).omega();
        let rhs = y.omega().bracket(&x.omega());
        if lhs != rhs {
            failure = Some(format!("ω([{x}, {y}]) = {lhs} but [ω(y), ω(x)] = {rhs}"));
            break;
        }
    }
    SuiteResult { name: "omega", checks: samples, failure }
}

/// `[P_A, Q_B] = δ_AB`, `[P_A, P_B] = [Q_A, Q_B] = 0`.
pub fn weyl_suite(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = suite_rng(seed, 6);
    let mut failure = None;
    for _ in 0..samples {
        let cfg = random_config(&mut rng);
        let (a, b) = (random_point(&mut rng), random_point(&mut rng));
        let v = random_fock(&mut rng);
        let pq = apply_p(a, &apply_q(b, &v, &cfg), &cfg).sub(&apply_q(b, &apply_p(a, &v, &cfg), &cfg));
        let expected = if a == b { v.clone() } else { FockPoly::zero() };
        let pp = apply_p(a, &apply_p(b, &v, &cfg), &cfg).sub(&apply_p(b, &apply_p(a, &v, &cfg), &cfg));
        let qq = apply_q(a, &apply_q(b, &v, &cfg), &cfg).sub(&apply_q(b, &apply_q(a, &v, &cfg), &cfg));
        if pq != expected || !pp.is_zero() || !qq.is_zero() {
            failure = Some(format!("Weyl relations fail for A = {a}, B = {b} on {v}"));
            break;
        }
    }
    SuiteResult { name: "weyl", checks: samples, failure }
}

/// `[D₁, D₂] = 0` and `[D, e_ij(m, n)] = (m or n)·e_ij(m, n)`.
pub fn degree_suite(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = suite_rng(seed, 7);
    let cfg = FreeFieldConfig::identity();
    let d = |axis, v: &FockPoly| apply_d(axis, v, &cfg);
    let mut failure = None;
    for _ in 0..samples {
        let v = random_fock(&mut rng);
        let comm = d(DegreeAxis::First, &d(DegreeAxis::Second, &v)).sub(&d(DegreeAxis::Second, &d(DegreeAxis::First, &v)));
        if !comm.is_zero() {
            failure = Some(format!("[D₁, D₂]·{v} = {comm}"));
            break;
        }
        let (i, j) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (m, n) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        let e = |w: &FockPoly| apply_generator(i, j, m, n, w, &cfg);
        for (axis, weight) in [(DegreeAxis::First, m), (DegreeAxis::Second, n)] {
            let lhs = d(axis, &e(&v)).sub(&e(&d(axis, &v)));
            let rhs = e(&v).scale(&ScalarPoly::from_int(weight));
            if lhs != rhs {
                failure = Some(format!("[D, e{i}{j}({m},{n})]·{v}: {lhs} vs {rhs}"));
                break;
            }
        }
        if failure.is_some() {
            break;
        }
    }
    SuiteResult { name: "degree-operators", checks: samples, failure }
}

pub fn run_all(seed: u64, samples: usize, fault: Fault) -> VerifyReport {
    let suites = vec![
        homomorphism_suite(seed, samples, fault),
        config_independence_suite(seed, samples),
        antisymmetry_suite(seed, samples),
        jacobi_suite(seed, samples),
        omega_suite(seed, samples),
        weyl_suite(seed, samples),
        degree_suite(seed, samples),
    ];
    VerifyReport { seed, samples, suites }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        let r = run_all(7, 40, Fault::None);
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn corrupted_phase_is_caught() {
        let r = run_all(7, 40, Fault::CorruptPhase);
        assert!(!r.passed());
        let msg = r.first_failure().unwrap();
        assert!(msg.starts_with("homomorphism: π(["), "{msg}");
    }

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(run_all(3, 10, Fault::None), run_all(3, 10, Fault::None));
        let mut a = suite_rng(11, 1);
        let mut b = suite_rng(11, 1);
        assert_eq!(random_fock(&mut a), random_fock(&mut b));
    }
}
