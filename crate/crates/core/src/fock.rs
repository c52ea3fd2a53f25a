//! The polynomial module `V = ℂ[x_A, x_B : A ∈ K₁, B ∈ K₋₁]`, the
//! creation/annihilation pairs `P`, `Q`, and the free-field operators
//! realizing `gl₃(ℂ_q)~`.
//!
//! Every infinite sum in the operator definitions has an annihilator acting
//! first, so only index points whose variables occur in the input contribute.
//! The sums below enumerate exactly those points (ordered pairs of them for
//! the quadratic terms).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;
use serde_json::{json, Value};

use crate::coefficients::{GaussianRational, ScalarPoly};
use crate::gl3::{GlBasisSymbol, GlElement};
use crate::Error;

/// Which of the two index lattices a point lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    /// `K₁ = {(3m+1, 3n+1)}`
    Plus,
    /// `K₋₁ = {(3m−1, 3n−1)}`
    Minus,
}

/// A point of `K₁ ∪ K₋₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPoint {
    p: i64,
    r: i64,
}

impl IndexPoint {
    pub fn new(p: i64, r: i64) -> Result<Self, Error> {
        match (p.rem_euclid(3), r.rem_euclid(3)) {
            (1, 1) | (2, 2) => Ok(Self { p, r }),
            _ => Err(Error::InvalidIndexPoint(p, r)),
        }
    }

    /// `(3m+1, 3n+1) ∈ K₁`.
    pub fn plus(m: i64, n: i64) -> Self {
        Self { p: 3 * m + 1, r: 3 * n + 1 }
    }

    /// `(3m−1, 3n−1) ∈ K₋₁`.
    pub fn minus(m: i64, n: i64) -> Self {
        Self { p: 3 * m - 1, r: 3 * n - 1 }
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn r(self) -> i64 {
        self.r
    }

    pub fn sector(self) -> Sector {
        if self.p.rem_euclid(3) == 1 {
            Sector::Plus
        } else {
            Sector::Minus
        }
    }

    /// The pair `(m, n)` with `self = (3m±1, 3n±1)`.
    pub fn components(self) -> (i64, i64) {
        match self.sector() {
            Sector::Plus => ((self.p - 1) / 3, (self.r - 1) / 3),
            Sector::Minus => ((self.p + 1) / 3, (self.r + 1) / 3),
        }
    }

    /// Translate by a lattice offset; the caller guarantees the result stays in
    /// `K₁ ∪ K₋₁`.
    fn offset(self, dp: i64, dr: i64) -> Self {
        let out = Self { p: self.p + dp, r: self.r + dr };
        debug_assert!(Self::new(out.p, out.r).is_ok(), "offset left the index lattice");
        out
    }
}

impl fmt::Display for IndexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.r)
    }
}

/// Entries `(a, c, d)` of one lower-triangular `SL₂` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeFieldEntry {
    pub a: ScalarPoly,
    pub c: ScalarPoly,
    pub d: ScalarPoly,
}

impl Default for FreeFieldEntry {
    fn default() -> Self {
        Self { a: ScalarPoly::one(), c: ScalarPoly::zero(), d: ScalarPoly::one() }
    }
}

/// Per-point choice of `X_{m,n}`; unset points use the identity matrix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeFieldConfig {
    entries: BTreeMap<IndexPoint, FreeFieldEntry>,
}

impl FreeFieldConfig {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn set(&mut self, point: IndexPoint, a: ScalarPoly, c: ScalarPoly, d: ScalarPoly) -> Result<(), Error> {
        let product = &a * &d;
        if !product.is_one() {
            return Err(Error::NotUnimodular { point: point.to_string(), product: product.to_string() });
        }
        self.entries.insert(point, FreeFieldEntry { a, c, d });
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, point: IndexPoint) -> Option<&FreeFieldEntry> {
        self.entries.get(&point)
    }
}

/// `∏ x_A^{e_A}` with positive exponents, sorted by index point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockMonomial(Vec<(IndexPoint, u32)>);

impl FockMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(point: IndexPoint) -> Self {
        Self(vec![(point, 1)])
    }

    pub fn from_powers<I: IntoIterator<Item = (IndexPoint, u32)>>(iter: I) -> Self {
        let mut acc: BTreeMap<IndexPoint, u32> = BTreeMap::new();
        for (p, e) in iter {
            *acc.entry(p).or_default() += e;
        }
        Self(acc.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn exponent(&self, point: IndexPoint) -> u32 {
        self.0
            .binary_search_by_key(&point, |(p, _)| *p)
            .map(|ix| self.0[ix].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn powers(&self) -> &[(IndexPoint, u32)] {
        &self.0
    }

    fn bump(&self, point: IndexPoint, up: bool) -> Self {
        let mut v = self.0.clone();
        match v.binary_search_by_key(&point, |(p, _)| *p) {
            Ok(ix) => {
                if up {
                    v[ix].1 += 1;
                } else if v[ix].1 == 1 {
                    v.remove(ix);
                } else {
                    v[ix].1 -= 1;
                }
            }
            Err(ix) => {
                assert!(up, "cannot lower an absent variable");
                v.insert(ix, (point, 1));
            }
        }
        Self(v)
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, e)| if *e == 1 { format!("x{p}") } else { format!("x{p}^{e}") })
            .collect();
        f.write_str(&parts.join("·"))
    }
}

/// Element of `V`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockPoly {
    terms: BTreeMap<FockMonomial, ScalarPoly>,
}

impl FockPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The vacuum `1`.
    pub fn one() -> Self {
        Self::term(FockMonomial::one(), ScalarPoly::one())
    }

    pub fn var(point: IndexPoint) -> Self {
        Self::term(FockMonomial::var(point), ScalarPoly::one())
    }

    pub fn term(mono: FockMonomial, coeff: ScalarPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(mono, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &ScalarPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &FockMonomial) -> ScalarPoly {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: FockMonomial, coeff: &ScalarPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(entry) => {
                *entry += coeff;
                if entry.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff.clone());
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &FockPoly) {
        for (m, c) in rhs.terms.iter() {
            self.add_term(m.clone(), c);
        }
    }

    /// `self += coeff · rhs`.
    pub fn add_scaled(&mut self, rhs: &FockPoly, coeff: &ScalarPoly) {
        if coeff.is_zero() {
            return;
        }
        for (m, c) in rhs.terms.iter() {
            self.add_term(m.clone(), &(c * coeff));
        }
    }

    pub fn add(&self, rhs: &FockPoly) -> FockPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &FockPoly) -> FockPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &ScalarPoly::from_int(-1));
        out
    }

    pub fn scale(&self, c: &ScalarPoly) -> FockPoly {
        let mut out = FockPoly::zero();
        out.add_scaled(self, c);
        out
    }

    /// Index points whose variables occur in some term.
    pub fn variables(&self) -> BTreeSet<IndexPoint> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(p, _)| *p)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(FockMonomial::degree).max().unwrap_or(0)
    }

    /// `∂/∂x_A`.
    pub fn derivative(&self, point: IndexPoint) -> FockPoly {
        let mut out = FockPoly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.exponent(point);
            if e > 0 {
                out.add_term(m.bump(point, false), &c.scale(GaussianRational::from_int(e as i64)));
            }
        }
        out
    }

    /// Multiplication by `x_A`.
    pub fn times_var(&self, point: IndexPoint) -> FockPoly {
        FockPoly {
            terms: self.terms.iter().map(|(m, c)| (m.bump(point, true), c.clone())).collect(),
        }
    }

    /// `[{"monomial": [[p, r, exp], …], "coeff": "…"}, …]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mono: Vec<Value> = m.0.iter().map(|(p, e)| json!([p.p, p.r, e])).collect();
                    json!({"monomial": mono, "coeff": c.to_string()})
                })
                .collect(),
        )
    }
}

impl fmt::Display for FockPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (ix, (m, c)) in self.terms.iter().enumerate() {
            if ix > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}

/// `P_A = a_A ∂/∂x_A`.
pub fn apply_p(point: IndexPoint, v: &FockPoly, cfg: &FreeFieldConfig) -> FockPoly {
    let dv = v.derivative(point);
    match cfg.entry(point) {
        None => dv,
        Some(e) => dv.scale(&e.a),
    }
}

/// `Q_A = c_A ∂/∂x_A + d_A x_A`.
pub fn apply_q(point: IndexPoint, v: &FockPoly, cfg: &FreeFieldConfig) -> FockPoly {
    match cfg.entry(point) {
        None => v.times_var(point),
        Some(e) => {
            let mut out = v.times_var(point).scale(&e.d);
            out.add_scaled(&v.derivative(point), &e.c);
            out
        }
    }
}

fn support(v: &FockPoly, sector: Sector) -> Vec<IndexPoint> {
    v.variables().into_iter().filter(|p| p.sector() == sector).collect()
}

fn neg(c: ScalarPoly) -> ScalarPoly {
    -c
}

/// `Σ_{A ∈ sector} q^{phase(A)} Q_{A + shift} P_A v`.
fn linear_sum(
    v: &FockPoly,
    cfg: &FreeFieldConfig,
    sector: Sector,
    shift: (i64, i64),
    phase: impl Fn((i64, i64)) -> i64,
) -> FockPoly {
    let mut out = FockPoly::zero();
    for a in support(v, sector) {
        let pv = apply_p(a, v, cfg);
        if pv.is_zero() {
            continue;
        }
        let q = apply_q(a.offset(shift.0, shift.1), &pv, cfg);
        out.add_scaled(&q, &ScalarPoly::q_pow(phase(a.components())));
    }
    out
}

/// `Σ_{X ∈ first, Y ∈ second} q^{phase(X, Y)} Q_{X + Y + shift} P_X P_Y v`
/// over ordered pairs.
fn quadratic_sum(
    v: &FockPoly,
    cfg: &FreeFieldConfig,
    first: Sector,
    second: Sector,
    shift: (i64, i64),
    phase: impl Fn((i64, i64), (i64, i64)) -> i64,
) -> FockPoly {
    let mut out = FockPoly::zero();
    let xs = support(v, first);
    for y in support(v, second) {
        let py = apply_p(y, v, cfg);
        if py.is_zero() {
            continue;
        }
        for &x in &xs {
            let pxy = apply_p(x, &py, cfg);
            if pxy.is_zero() {
                continue;
            }
            let target = IndexPoint { p: x.p + y.p + shift.0, r: x.r + y.r + shift.1 };
            debug_assert!(IndexPoint::new(target.p, target.r).is_ok());
            let q = apply_q(target, &pxy, cfg);
            out.add_scaled(&q, &ScalarPoly::q_pow(phase(x.components(), y.components())));
        }
    }
    out
}

/// The operator `e_ij^{(μ)}(m1, n1)` applied to `v`.
pub fn apply_generator(i: u8, j: u8, m1: i64, n1: i64, v: &FockPoly, cfg: &FreeFieldConfig) -> FockPoly {
    let half_mu = ScalarPoly::term(GaussianRational::ratio(1, 2), 0, 1);
    let at_origin = m1 == 0 && n1 == 0;
    let mu_vacuum = |sign: i64| -> FockPoly {
        if at_origin {
            v.scale(&half_mu.scale(GaussianRational::from_int(sign)))
        } else {
            FockPoly::zero()
        }
    };
    match (i, j) {
        (1, 2) => apply_q(IndexPoint::plus(m1, n1), v, cfg),
        (3, 2) => apply_q(IndexPoint::minus(m1, n1), v, cfg),
        (2, 1) => {
            let mut out = apply_p(IndexPoint::plus(-m1, -n1), v, cfg)
                .scale(&neg(ScalarPoly::term(GaussianRational::one(), -m1 * n1, 1)));
            let shift = (3 * m1 - 1, 3 * n1 - 1);
            // A, A' ∈ K₁: q^{n1 A'₁ + A₂ m1 + A₂ A'₁}
            let aa = quadratic_sum(v, cfg, Sector::Plus, Sector::Plus, shift, |a, a2| {
                n1 * a2.0 + a.1 * m1 + a.1 * a2.0
            });
            // A ∈ K₁, B ∈ K₋₁: q^{n1 A₁ + B₂ m1 + B₂ A₁}
            let ab = quadratic_sum(v, cfg, Sector::Plus, Sector::Minus, shift, |a, b| {
                n1 * a.0 + b.1 * m1 + b.1 * a.0
            });
            out.add_scaled(&aa, &ScalarPoly::from_int(-1));
            out.add_scaled(&ab, &ScalarPoly::from_int(-1));
            out
        }
        (2, 3) => {
            let mut out = apply_p(IndexPoint::minus(-m1, -n1), v, cfg)
                .scale(&neg(ScalarPoly::term(GaussianRational::one(), -m1 * n1, 1)));
            let shift = (3 * m1 + 1, 3 * n1 + 1);
            // A ∈ K₁, B ∈ K₋₁: q^{n1 B₁ + A₂ m1 + A₂ B₁}
            let ab = quadratic_sum(v, cfg, Sector::Plus, Sector::Minus, shift, |a, b| {
                n1 * b.0 + a.1 * m1 + a.1 * b.0
            });
            // B, B' ∈ K₋₁: q^{n1 B'₁ + B₂ m1 + B₂ B'₁}
            let bb = quadratic_sum(v, cfg, Sector::Minus, Sector::Minus, shift, |b, b2| {
                n1 * b2.0 + b.1 * m1 + b.1 * b2.0
            });
            out.add_scaled(&ab, &ScalarPoly::from_int(-1));
            out.add_scaled(&bb, &ScalarPoly::from_int(-1));
            out
        }
        (1, 1) => {
            let mut out = linear_sum(v, cfg, Sector::Plus, (3 * m1, 3 * n1), |a| a.0 * n1);
            out.add_assign(&mu_vacuum(1));
            out
        }
        (2, 2) => {
            let mut out = linear_sum(v, cfg, Sector::Plus, (3 * m1, 3 * n1), |a| a.1 * m1);
            out.add_assign(&linear_sum(v, cfg, Sector::Minus, (3 * m1, 3 * n1), |b| b.1 * m1));
            out.add_assign(&mu_vacuum(1));
            out.scale(&ScalarPoly::from_int(-1))
        }
        (3, 3) => {
            let mut out = linear_sum(v, cfg, Sector::Minus, (3 * m1, 3 * n1), |b| b.0 * n1);
            out.add_assign(&mu_vacuum(1));
            out
        }
        (3, 1) => linear_sum(v, cfg, Sector::Plus, (3 * m1 - 2, 3 * n1 - 2), |a| a.0 * n1),
        (1, 3) => linear_sum(v, cfg, Sector::Minus, (3 * m1 + 2, 3 * n1 + 2), |b| b.0 * n1),
        _ => panic!("generator index ({i}, {j}) out of range"),
    }
}

/// Which degree operator: `D₁` weights by the first component, `D₂` by the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeAxis {
    First,
    Second,
}

/// `D₁ = Σ A₁ Q_A P_A` (resp. `D₂` with `A₂`), summed over both lattices.
pub fn apply_d(axis: DegreeAxis, v: &FockPoly, cfg: &FreeFieldConfig) -> FockPoly {
    let mut out = FockPoly::zero();
    for point in v.variables() {
        let (c1, c2) = point.components();
        let w = match axis {
            DegreeAxis::First => c1,
            DegreeAxis::Second => c2,
        };
        if w == 0 {
            continue;
        }
        let qp = apply_q(point, &apply_p(point, v, cfg), cfg);
        out.add_scaled(&qp, &ScalarPoly::from_int(w));
    }
    out
}

/// The representation `π` extended linearly; central elements act by zero.
pub fn pi(x: &GlElement, v: &FockPoly, cfg: &FreeFieldConfig) -> FockPoly {
    let mut out = FockPoly::zero();
    for (sym, c) in x.terms() {
        let image = match *sym {
            GlBasisSymbol::Matrix { i, j, mono } => apply_generator(i, j, mono.m, mono.n, v, cfg),
            GlBasisSymbol::DerS => apply_d(DegreeAxis::First, v, cfg),
            GlBasisSymbol::DerT => apply_d(DegreeAxis::Second, v, cfg),
            GlBasisSymbol::CentralS | GlBasisSymbol::CentralT => continue,
        };
        out.add_scaled(&image, c);
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::quantum_torus::TorusMonomial;
    use proptest::prelude::*;

    fn x(p: i64, r: i64) -> IndexPoint {
        IndexPoint::new(p, r).unwrap()
    }

    #[test]
    fn index_points() {
        assert_eq!(x(4, 1).components(), (1, 0));
        assert_eq!(x(2, 2).components(), (1, 1));
        assert_eq!(x(-1, -4).components(), (0, -1));
        assert_eq!(x(-2, -2).sector(), Sector::Plus);
        assert!(IndexPoint::new(0, 0).is_err());
        assert!(IndexPoint::new(1, 2).is_err());
        assert_eq!(IndexPoint::plus(1, 0), x(4, 1));
        assert_eq!(IndexPoint::minus(1, 1), x(2, 2));
    }

    #[test]
    fn config_requires_unit_determinant() {
        let mut cfg = FreeFieldConfig::identity();
        assert!(cfg.set(x(1, 1), ScalarPoly::from_int(2), ScalarPoly::one(), ScalarPoly::one()).is_err());
        assert!(cfg.set(x(1, 1), ScalarPoly::from_int(2), ScalarPoly::one(), ScalarPoly::ratio(1, 2)).is_ok());
    }

    #[test]
    fn p_examples() {
        let cfg = FreeFieldConfig::identity();
        let a = x(1, 1);
        assert_eq!(apply_p(a, &FockPoly::var(a), &cfg), FockPoly::one());
        assert!(apply_p(a, &FockPoly::one(), &cfg).is_zero());
        let sq = FockPoly::term(FockMonomial::from_powers([(a, 2)]), ScalarPoly::one());
        assert_eq!(apply_p(a, &sq, &cfg), FockPoly::var(a).scale(&ScalarPoly::from_int(2)));
    }

    #[test]
    fn q_examples() {
        let a = x(1, 1);
        assert_eq!(apply_q(a, &FockPoly::one(), &FreeFieldConfig::identity()), FockPoly::var(a));
        let mut cfg = FreeFieldConfig::identity();
        cfg.set(a, ScalarPoly::from_int(2), ScalarPoly::one(), ScalarPoly::ratio(1, 2)).unwrap();
        let expected = FockPoly::one().add(&FockPoly::term(
            FockMonomial::from_powers([(a, 2)]),
            ScalarPoly::ratio(1, 2),
        ));
        assert_eq!(apply_q(a, &FockPoly::var(a), &cfg), expected);
    }

    #[test]
    fn generator_examples() {
        let cfg = FreeFieldConfig::identity();
        let vac = FockPoly::one();
        assert_eq!(apply_generator(1, 2, 0, 0, &vac, &cfg), FockPoly::var(x(1, 1)));
        assert_eq!(
            apply_generator(1, 1, 0, 0, &vac, &cfg),
            vac.scale(&ScalarPoly::term(GaussianRational::ratio(1, 2), 0, 1))
        );
        for m in -2..=2 {
            for n in -2..=2 {
                assert!(apply_generator(2, 1, m, n, &vac, &cfg).is_zero());
                assert!(apply_generator(2, 3, m, n, &vac, &cfg).is_zero());
                assert!(apply_generator(3, 1, m, n, &vac, &cfg).is_zero());
                assert!(apply_generator(1, 3, m, n, &vac, &cfg).is_zero());
            }
        }
    }

    #[test]
    fn d_examples() {
        let cfg = FreeFieldConfig::identity();
        let v = FockPoly::var(x(4, 1));
        assert_eq!(apply_d(DegreeAxis::First, &v, &cfg), v);
        assert!(apply_d(DegreeAxis::First, &FockPoly::one(), &cfg).is_zero());
        let v = FockPoly::term(FockMonomial::from_powers([(x(1, 1), 1), (x(2, 2), 1)]), ScalarPoly::one());
        assert_eq!(apply_d(DegreeAxis::Second, &v, &cfg), v);
    }

    #[test]
    fn pi_examples() {
        let cfg = FreeFieldConfig::identity();
        let v = FockPoly::var(x(1, 1));
        assert!(pi(&GlElement::c_s(), &v, &cfg).is_zero());
        let h = GlElement::e(1, 2, 0, 0).bracket(&GlElement::e(2, 1, 0, 0));
        let two_plus_mu = ScalarPoly::from_int(2) + ScalarPoly::mu();
        assert_eq!(pi(&h, &v, &cfg), v.scale(&two_plus_mu));
    }

    #[test]
    fn json_encoding() {
        let v = FockPoly::term(FockMonomial::from_powers([(x(1, 1), 2), (x(-1, 2), 1)]), ScalarPoly::q_pow(-1));
        assert_eq!(v.to_json(), json!([{"monomial": [[-1, 2, 1], [1, 1, 2]], "coeff": "q^-1"}]));
        assert_eq!(v.to_string(), "(q^-1)·x(-1,2)·x(1,1)^2");
    }

    fn window_points() -> Vec<IndexPoint> {
        let mut pts = Vec::new();
        for m in -1..=1 {
            for n in -1..=1 {
                pts.push(IndexPoint::plus(m, n));
                pts.push(IndexPoint::minus(m, n));
            }
        }
        pts
    }

    /// Polynomials of degree ≤ 3 over index window 1 with small Gaussian
    /// coefficients.
    pub(crate) fn arb_fock() -> impl Strategy<Value = FockPoly> {
        let pts = window_points();
        let n = pts.len();
        prop::collection::vec(
            (prop::collection::vec(0..n, 0..=3), -3i64..=3, -2i64..=2, -1i64..=1),
            1..4,
        )
        .prop_map(move |raw| {
            let mut out = FockPoly::zero();
            for (vars, re, im, e) in raw {
                let mono = FockMonomial::from_powers(vars.into_iter().map(|ix| (pts[ix], 1)));
                let c = ScalarPoly::term(GaussianRational::new(re.into(), im.into()), e, 0);
                out.add_term(mono, &c);
            }
            out
        })
    }

    fn arb_point() -> impl Strategy<Value = IndexPoint> {
        let pts = window_points();
        (0..pts.len()).prop_map(move |ix| pts[ix])
    }

    pub(crate) fn arb_config() -> impl Strategy<Value = FreeFieldConfig> {
        prop::collection::vec((arb_point(), 1i64..=3, -3i64..=3, 1i64..=2), 0..5).prop_map(|raw| {
            let mut cfg = FreeFieldConfig::identity();
            for (pt, num, c, den) in raw {
                let a = ScalarPoly::ratio(num, den);
                let d = ScalarPoly::ratio(den, num);
                let c = if c == 0 { ScalarPoly::one() } else { ScalarPoly::from_int(c) };
                cfg.set(pt, a, c, d).unwrap();
            }
            cfg
        })
    }

    fn commutator(
        f: impl Fn(&FockPoly) -> FockPoly,
        g: impl Fn(&FockPoly) -> FockPoly,
        v: &FockPoly,
    ) -> FockPoly {
        f(&g(v)).sub(&g(&f(v)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn weyl_relations(a in arb_point(), b in arb_point(), v in arb_fock(), cfg in arb_config()) {
            let pq = commutator(|w| apply_p(a, w, &cfg), |w| apply_q(b, w, &cfg), &v);
            let expected = if a == b { v.clone() } else { FockPoly::zero() };
            prop_assert_eq!(pq, expected);
            prop_assert!(commutator(|w| apply_p(a, w, &cfg), |w| apply_p(b, w, &cfg), &v).is_zero());
            prop_assert!(commutator(|w| apply_q(a, w, &cfg), |w| apply_q(b, w, &cfg), &v).is_zero());
        }

        #[test]
        fn degree_operators_commute(v in arb_fock(), cfg in arb_config()) {
            let c = commutator(
                |w| apply_d(DegreeAxis::First, w, &cfg),
                |w| apply_d(DegreeAxis::Second, w, &cfg),
                &v,
            );
            prop_assert!(c.is_zero());
        }

        #[test]
        fn degree_operators_grade_generators(
            i in 1u8..=3, j in 1u8..=3, m in -2i64..=2, n in -2i64..=2, v in arb_fock(), cfg in arb_config()
        ) {
            let e = |w: &FockPoly| apply_generator(i, j, m, n, w, &cfg);
            let d1 = commutator(|w| apply_d(DegreeAxis::First, w, &cfg), e, &v);
            prop_assert_eq!(d1, e(&v).scale(&ScalarPoly::from_int(m)));
            let d2 = commutator(|w| apply_d(DegreeAxis::Second, w, &cfg), e, &v);
            prop_assert_eq!(d2, e(&v).scale(&ScalarPoly::from_int(n)));
        }

        #[test]
        fn homomorphism_default_config(
            x in crate::gl3::tests::arb_symbol(), y in crate::gl3::tests::arb_symbol(), v in arb_fock()
        ) {
            let cfg = FreeFieldConfig::identity();
            let (gx, gy) = (GlElement::symbol(x), GlElement::symbol(y));
            let lhs = pi(&gx.bracket(&gy), &v, &cfg);
            let rhs = commutator(|w| pi(&gx, w, &cfg), |w| pi(&gy, w, &cfg), &v);
            prop_assert_eq!(lhs, rhs, "[{}, {}] on {}", x, y, v);
        }

        #[test]
        fn homomorphism_random_config(
            x in crate::gl3::tests::arb_symbol(), y in crate::gl3::tests::arb_symbol(), v in arb_fock(), cfg in arb_config()
        ) {
            let (gx, gy) = (GlElement::symbol(x), GlElement::symbol(y));
            let lhs = pi(&gx.bracket(&gy), &v, &cfg);
            let rhs = commutator(|w| pi(&gx, w, &cfg), |w| pi(&gy, w, &cfg), &v);
            prop_assert_eq!(lhs, rhs, "[{}, {}] on {}", x, y, v);
        }
    }

    #[test]
    fn homomorphism_exhaustive_generator_pairs() {
        // Every (i,j,k,l) with a fixed spread of exponents on a fixed vector.
        let cfg = FreeFieldConfig::identity();
        let v = FockPoly::term(
            FockMonomial::from_powers([(IndexPoint::plus(0, 1), 1), (IndexPoint::minus(-1, 0), 1), (IndexPoint::plus(1, -1), 1)]),
            ScalarPoly::one(),
        )
        .add(&FockPoly::term(FockMonomial::from_powers([(IndexPoint::plus(0, 0), 2)]), ScalarPoly::q_pow(1)))
        .add(&FockPoly::one());
        let exps = [(0, 0), (1, -1), (-1, 2)];
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                for k in 1..=3u8 {
                    for l in 1..=3u8 {
                        for &(m1, n1) in &exps {
                            for &(m2, n2) in &exps {
                                let gx = GlElement::symbol(GlBasisSymbol::matrix(i, j, TorusMonomial::new(m1, n1)));
                                let gy = GlElement::symbol(GlBasisSymbol::matrix(k, l, TorusMonomial::new(m2, n2)));
                                let lhs = pi(&gx.bracket(&gy), &v, &cfg);
                                let rhs = commutator(|w| pi(&gx, w, &cfg), |w| pi(&gy, w, &cfg), &v);
                                assert_eq!(lhs, rhs, "[{gx}, {gy}]");
                            }
                        }
                    }
                }
            }
        }
    }
}
