//! The quantum 2-torus `ℂ_q[s^{±1}, t^{±1}]` with `ts = q·st`.
//!
//! Elements are stored in normal order (all `s` before all `t`); the phases
//! produced by reordering live in the [`ScalarPoly`] coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coefficients::{GaussianRational, ScalarPoly};

/// `s^m t^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TorusMonomial {
    pub m: i64,
    pub n: i64,
}

impl TorusMonomial {
    pub const ONE: TorusMonomial = TorusMonomial { m: 0, n: 0 };

    pub fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    pub fn is_one(self) -> bool {
        self.m == 0 && self.n == 0
    }

    /// Product in normal order: `(s^a t^b)(s^c t^d) = q^{bc} s^{a+c} t^{b+d}`.
    /// Returns the `q` exponent and the resulting monomial.
    pub fn mul(self, rhs: TorusMonomial) -> (i64, TorusMonomial) {
        (self.n * rhs.m, TorusMonomial::new(self.m + rhs.m, self.n + rhs.n))
    }

    /// `bar(s^m t^n) = t^{-n} s^{-m} = q^{mn} s^{-m} t^{-n}`.
    pub fn bar(self) -> (i64, TorusMonomial) {
        (self.m * self.n, TorusMonomial::new(-self.m, -self.n))
    }

    pub fn shifted(self, a: i64, b: i64) -> Self {
        TorusMonomial::new(self.m + a, self.n + b)
    }
}

impl fmt::Display for TorusMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s^{} t^{}", self.m, self.n)
    }
}

/// Finite `ℂ`-linear combination of torus monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TorusElement {
    terms: BTreeMap<TorusMonomial, ScalarPoly>,
}

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(m: i64, n: i64) -> Self {
        Self::term(TorusMonomial::new(m, n), ScalarPoly::one())
    }

    pub fn term(mono: TorusMonomial, coeff: ScalarPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(mono, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TorusMonomial, &ScalarPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: TorusMonomial) -> ScalarPoly {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: TorusMonomial, coeff: &ScalarPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, rhs: &TorusElement) -> TorusElement {
        self.add(&rhs.scale(&ScalarPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &ScalarPoly) -> TorusElement {
        let mut out = TorusElement::zero();
        for (k, v) in self.terms.iter() {
            out.add_term(*k, &(v * c));
        }
        out
    }

    /// Bilinear extension of the monomial product.
    pub fn mul(&self, rhs: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in rhs.terms.iter() {
                let (phase, mono) = a.mul(*b);
                out.add_term(mono, &(ca * cb).shift_q(phase));
            }
        }
        out
    }

    /// Coefficient of the identity monomial.
    pub fn kappa(&self) -> ScalarPoly {
        self.coeff(TorusMonomial::ONE)
    }

    /// Antilinear anti-automorphism `λ s^m t^n ↦ λ̄ q^{mn} s^{-m} t^{-n}`.
    pub fn bar(&self) -> TorusElement {
        let mut out = TorusElement::zero();
        for (mono, c) in self.terms.iter() {
            let (phase, b) = mono.bar();
            out.add_term(b, &c.conjugate().shift_q(phase));
        }
        out
    }

    pub fn degree_s(&self) -> TorusElement {
        self.weighted(|m| m.m)
    }

    pub fn degree_t(&self) -> TorusElement {
        self.weighted(|m| m.n)
    }

    fn weighted(&self, w: impl Fn(&TorusMonomial) -> i64) -> TorusElement {
        let mut out = TorusElement::zero();
        for (mono, c) in self.terms.iter() {
            out.add_term(*mono, &c.scale(GaussianRational::from_int(w(mono))));
        }
        out
    }

    /// `[[m, n, coeff], …]` in monomial order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| json!([k.m, k.n, c.to_string()]))
                .collect(),
        )
    }
}

impl From<TorusMonomial> for TorusElement {
    fn from(m: TorusMonomial) -> Self {
        TorusElement::term(m, ScalarPoly::one())
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mono_text = |k: &TorusMonomial| format!("s^{}·t^{}", k.m, k.n);
        for (ix, (k, c)) in self.terms.iter().enumerate() {
            if ix > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                f.write_str(&mono_text(k))?;
            } else if c.len() == 1 {
                write!(f, "{}·{}", c, mono_text(k))?;
            } else {
                write!(f, "({})·{}", c, mono_text(k))?;
            }
        }
        Ok(())
    }
}

/// Reorders a word in `s^{±1}`, `t^{±1}` into normal form by repeatedly
/// swapping adjacent `t^a s^b` pairs, one generator at a time. Independent of
/// [`TorusMonomial::mul`]; used as a test oracle.
#[cfg(test)]
pub(crate) fn normal_order_by_rewriting(word: &[(char, i64)]) -> (i64, TorusMonomial) {
    // Expand into unit letters (sign only).
    let mut letters: Vec<(char, i64)> = Vec::new();
    for &(c, e) in word {
        for _ in 0..e.unsigned_abs() {
            letters.push((c, e.signum()));
        }
    }
    let mut phase = 0i64;
    loop {
        let mut swapped = false;
        for ix in 0..letters.len().saturating_sub(1) {
            if letters[ix].0 == 't' && letters[ix + 1].0 == 's' {
                // t^a s^b = q^{ab} s^b t^a for a, b = ±1.
                phase += letters[ix].1 * letters[ix + 1].1;
                letters.swap(ix, ix + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let m = letters.iter().filter(|l| l.0 == 's').map(|l| l.1).sum();
    let n = letters.iter().filter(|l| l.0 == 't').map(|l| l.1).sum();
    (phase, TorusMonomial::new(m, n))
}
