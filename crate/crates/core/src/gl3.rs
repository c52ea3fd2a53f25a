//! `gl₃(ℂ_q)~ = gl₃(ℂ_q) ⊕ ℂc_s ⊕ ℂc_t ⊕ ℂd_s ⊕ ℂd_t`: bracket and the
//! anti-linear anti-involution `ω`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coefficients::{GaussianRational, ScalarPoly};
use crate::quantum_torus::{TorusElement, TorusMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GlBasisSymbol {
    /// `E_ij(s^m t^n)` with `1 ≤ i, j ≤ 3`.
    Matrix { i: u8, j: u8, mono: TorusMonomial },
    CentralS,
    CentralT,
    DerS,
    DerT,
}

impl GlBasisSymbol {
    pub fn matrix(i: u8, j: u8, mono: TorusMonomial) -> Self {
        assert!((1..=3).contains(&i) && (1..=3).contains(&j), "matrix index out of range");
        GlBasisSymbol::Matrix { i, j, mono }
    }

    pub fn is_central(&self) -> bool {
        matches!(self, GlBasisSymbol::CentralS | GlBasisSymbol::CentralT)
    }
}

impl fmt::Display for GlBasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlBasisSymbol::Matrix { i, j, mono } => write!(f, "E{i}{j}({mono})"),
            GlBasisSymbol::CentralS => f.write_str("c_s"),
            GlBasisSymbol::CentralT => f.write_str("c_t"),
            GlBasisSymbol::DerS => f.write_str("d_s"),
            GlBasisSymbol::DerT => f.write_str("d_t"),
        }
    }
}

/// Finite linear combination of basis symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GlElement {
    terms: BTreeMap<GlBasisSymbol, ScalarPoly>,
}

impl GlElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn symbol(sym: GlBasisSymbol) -> Self {
        Self::term(sym, ScalarPoly::one())
    }

    pub fn term(sym: GlBasisSymbol, coeff: ScalarPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(sym, &coeff);
        out
    }

    /// `E_ij(s^m t^n)`.
    pub fn e(i: u8, j: u8, m: i64, n: i64) -> Self {
        Self::symbol(GlBasisSymbol::matrix(i, j, TorusMonomial::new(m, n)))
    }

    /// `E_ij(a)` for a torus element `a`, expanded over its monomials.
    pub fn e_of(i: u8, j: u8, a: &TorusElement) -> Self {
        let mut out = Self::zero();
        for (mono, c) in a.terms() {
            out.add_term(GlBasisSymbol::matrix(i, j, *mono), c);
        }
        out
    }

    pub fn c_s() -> Self {
        Self::symbol(GlBasisSymbol::CentralS)
    }

    pub fn c_t() -> Self {
        Self::symbol(GlBasisSymbol::CentralT)
    }

    pub fn d_s() -> Self {
        Self::symbol(GlBasisSymbol::DerS)
    }

    pub fn d_t() -> Self {
        Self::symbol(GlBasisSymbol::DerT)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GlBasisSymbol, &ScalarPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, sym: &GlBasisSymbol) -> ScalarPoly {
        self.terms.get(sym).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, sym: GlBasisSymbol, coeff: &ScalarPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(sym).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn add(&self, rhs: &GlElement) -> GlElement {
        let mut out = self.clone();
        for (s, c) in rhs.terms.iter() {
            out.add_term(*s, c);
        }
        out
    }

    pub fn sub(&self, rhs: &GlElement) -> GlElement {
        self.add(&rhs.scale(&ScalarPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &ScalarPoly) -> GlElement {
        let mut out = GlElement::zero();
        for (s, v) in self.terms.iter() {
            out.add_term(*s, &(v * c));
        }
        out
    }

    /// Drops the `c_s`, `c_t` components.
    pub fn without_central(&self) -> GlElement {
        GlElement {
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| !s.is_central())
                .map(|(s, c)| (*s, c.clone()))
                .collect(),
        }
    }

    /// Lie bracket, bilinear over the symbols.
    pub fn bracket(&self, rhs: &GlElement) -> GlElement {
        let mut out = GlElement::zero();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in rhs.terms.iter() {
                let coeff = ca * cb;
                for (sym, c) in bracket_symbols(a, b).terms.iter() {
                    out.add_term(*sym, &(c * &coeff));
                }
            }
        }
        out
    }

    /// `ω`: anti-linear, `E_ij(a) ↦ (-1)^{i+j} E_ji(bar a)`, fixes `c_*`, `d_*`.
    pub fn omega(&self) -> GlElement {
        let mut out = GlElement::zero();
        for (sym, c) in self.terms.iter() {
            let c = c.conjugate();
            match *sym {
                GlBasisSymbol::Matrix { i, j, mono } => {
                    let (phase, b) = mono.bar();
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    out.add_term(
                        GlBasisSymbol::matrix(j, i, b),
                        &c.shift_q(phase).scale(GaussianRational::from_int(sign)),
                    );
                }
                other => out.add_term(other, &c),
            }
        }
        out
    }

    /// `[{"symbol": "E12(s^1 t^0)", "coeff": "…"}, …]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(s, c)| json!({"symbol": s.to_string(), "coeff": c.to_string()}))
                .collect(),
        )
    }
}

/// Bracket of two basis symbols.
pub fn bracket_symbols(x: &GlBasisSymbol, y: &GlBasisSymbol) -> GlElement {
    use GlBasisSymbol::*;
    match (*x, *y) {
        (Matrix { i, j, mono: a }, Matrix { i: k, j: l, mono: b }) => {
            let sum = TorusMonomial::new(a.m + b.m, a.n + b.n);
            let mut out = GlElement::zero();
            if j == k {
                out.add_term(GlBasisSymbol::matrix(i, l, sum), &ScalarPoly::q_pow(a.n * b.m));
            }
            if i == l {
                out.add_term(
                    GlBasisSymbol::matrix(k, j, sum),
                    &ScalarPoly::q_pow(b.n * a.m).scale(GaussianRational::from_int(-1)),
                );
                if j == k && sum.is_one() {
                    let phase = ScalarPoly::q_pow(a.n * b.m);
                    out.add_term(CentralS, &phase.scale(GaussianRational::from_int(a.m)));
                    out.add_term(CentralT, &phase.scale(GaussianRational::from_int(a.n)));
                }
            }
            out
        }
        (DerS, Matrix { mono, .. }) => GlElement::symbol(*y).scale(&ScalarPoly::from_int(mono.m)),
        (DerT, Matrix { mono, .. }) => GlElement::symbol(*y).scale(&ScalarPoly::from_int(mono.n)),
        (Matrix { mono, .. }, DerS) => GlElement::symbol(*x).scale(&ScalarPoly::from_int(-mono.m)),
        (Matrix { mono, .. }, DerT) => GlElement::symbol(*x).scale(&ScalarPoly::from_int(-mono.n)),
        _ => GlElement::zero(),
    }
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobi_residual(x: &GlElement, y: &GlElement, z: &GlElement) -> GlElement {
    x.bracket(y)
        .bracket(z)
        .add(&y.bracket(z).bracket(x))
        .add(&z.bracket(x).bracket(y))
}

impl fmt::Display for GlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (ix, (s, c)) in self.terms.iter().enumerate() {
            if ix > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "({c})·{s}")?;
            }
        }
        Ok(())
    }
}
