//! Exact scalars: Gaussian rationals and Laurent polynomials in a formal `q`
//! that are ordinary polynomials in a formal real parameter `μ`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::Error;

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational64,
    pub im: Rational64,
}

impl GaussianRational {
    pub fn new(re: Rational64, im: Rational64) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational64::from_integer(n))
    }

    pub fn real(re: Rational64) -> Self {
        Self { re, im: Rational64::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational64::zero(), im: Rational64::one() }
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::real(Rational64::new(numer, denom))
    }

    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    /// `|z|²`, always a nonnegative rational.
    pub fn norm_sqr(self) -> Rational64 {
        self.re * self.re + self.im * self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self { re: self.re / n, im: -self.im / n })
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: Rational64::zero(), im: Rational64::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

fn fmt_rational(r: &Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im = |r: &Rational64| -> String {
            if r.is_one() {
                "i".to_string()
            } else if r.is_integer() {
                format!("{}i", r.numer())
            } else {
                format!("({})i", fmt_rational(r))
            }
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                return write!(f, "-{}", im(&-self.im));
            }
            return f.write_str(&im(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{})", fmt_rational(&self.re), sign, im(&self.im.abs()))
    }
}

/// Exponent pair of a scalar term. Ordered by `μ` degree first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarKey {
    pub mu_deg: u32,
    pub q_exp: i64,
}

type Terms = SmallVec<[(ScalarKey, GaussianRational); 2]>;

/// Finite sum of `c · q^e · μ^d` with Gaussian-rational `c`, integer `e` and
/// natural `d`. Terms are kept sorted by key with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarPoly {
    terms: Terms,
}

impl ScalarPoly {
    pub fn zero() -> Self {
        Self { terms: SmallVec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::constant(GaussianRational::ratio(numer, denom))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::term(GaussianRational::one(), e, 0)
    }

    /// `μ`.
    pub fn mu() -> Self {
        Self::term(GaussianRational::one(), 0, 1)
    }

    pub fn mu_pow(d: u32) -> Self {
        Self::term(GaussianRational::one(), 0, d)
    }

    pub fn term(c: GaussianRational, q_exp: i64, mu_deg: u32) -> Self {
        let mut terms = SmallVec::new();
        if !c.is_zero() {
            terms.push((ScalarKey { mu_deg, q_exp }, c));
        }
        Self { terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (ScalarKey, GaussianRational)>,
    {
        let mut raw: Terms = iter.into_iter().collect();
        raw.sort_unstable_by_key(|(k, _)| *k);
        let mut terms: Terms = SmallVec::with_capacity(raw.len());
        for (k, c) in raw {
            match terms.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = *lc + c,
                _ => {
                    if let Some((_, lc)) = terms.last() {
                        if lc.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((k, c));
                }
            }
        }
        if let Some((_, lc)) = terms.last() {
            if lc.is_zero() {
                terms.pop();
            }
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].0 == ScalarKey { mu_deg: 0, q_exp: 0 }
            && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ScalarKey, GaussianRational)> + '_ {
        self.terms.iter().copied()
    }

    /// Coefficient of `q^e μ^d`.
    pub fn coeff(&self, q_exp: i64, mu_deg: u32) -> GaussianRational {
        let key = ScalarKey { mu_deg, q_exp };
        self.terms
            .binary_search_by_key(&key, |(k, _)| *k)
            .map(|ix| self.terms[ix].1)
            .unwrap_or_else(|_| GaussianRational::zero())
    }

    /// Multiplies every coefficient by a Gaussian rational.
    pub fn scale(&self, c: GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, *v * c)).collect() }
    }

    /// Multiplies by `q^e`.
    pub fn shift_q(&self, e: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (ScalarKey { mu_deg: k.mu_deg, q_exp: k.q_exp + e }, *v))
                .collect(),
        }
    }

    /// Coefficient-wise complex conjugation with `q ↦ q⁻¹`; `μ` is real.
    pub fn conjugate(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (ScalarKey { mu_deg: k.mu_deg, q_exp: -k.q_exp }, c.conj())),
        )
    }

    /// Highest power of `μ` present.
    pub fn mu_degree(&self) -> Result<u32, Error> {
        self.terms.last().map(|(k, _)| k.mu_deg).ok_or(Error::EmptyPolynomial)
    }

    /// The q-Laurent coefficient of the highest `μ` power (zero for zero).
    pub fn leading_mu_part(&self) -> Self {
        match self.terms.last() {
            None => Self::zero(),
            Some((top, _)) => Self {
                terms: self
                    .terms
                    .iter()
                    .filter(|(k, _)| k.mu_deg == top.mu_deg)
                    .map(|(k, c)| (ScalarKey { mu_deg: 0, q_exp: k.q_exp }, *c))
                    .collect(),
            },
        }
    }

    /// Substitutes `q = e^{2πiθ}` and `μ = mu`.
    pub fn evaluate(&self, theta: Rational64, mu: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.terms.iter() {
            acc += c.to_complex() * unit_root(theta, k.q_exp) * mu.powi(k.mu_deg as i32);
        }
        acc
    }

    /// Exact substitution of Gaussian-rational values for `q` and `μ`.
    /// `q` must be invertible.
    pub fn specialize(&self, q: GaussianRational, mu: GaussianRational) -> GaussianRational {
        let q_inv = q.inv().expect("q must be nonzero");
        let mut acc = GaussianRational::zero();
        for (k, c) in self.terms.iter() {
            let base = if k.q_exp < 0 { q_inv } else { q };
            let mut t = *c;
            for _ in 0..k.q_exp.unsigned_abs() {
                t = t * base;
            }
            for _ in 0..k.mu_deg {
                t = t * mu;
            }
            acc = acc + t;
        }
        acc
    }
}

/// `e^{2πiθe}` computed from the exact fractional part of `θe`.
pub fn unit_root(theta: Rational64, e: i64) -> Complex64 {
    let num = (*theta.numer() as i128 * e as i128).mod_floor(&(*theta.denom() as i128));
    let frac = num as f64 / *theta.denom() as f64;
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * frac)
}

impl Add<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out: Terms = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1 + b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ScalarPoly { terms: out }
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        ScalarPoly { terms: self.terms.iter().map(|(k, c)| (*k, -*c)).collect() }
    }
}

impl Sub<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        self + &(-rhs)
    }
}

impl Mul<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        if self.is_zero() || rhs.is_zero() {
            return ScalarPoly::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        ScalarPoly::from_terms(self.terms.iter().flat_map(|(ka, ca)| {
            rhs.terms.iter().map(move |(kb, cb)| {
                (
                    ScalarKey { mu_deg: ka.mu_deg + kb.mu_deg, q_exp: ka.q_exp + kb.q_exp },
                    *ca * *cb,
                )
            })
        }))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ScalarPoly> for ScalarPoly {
            type Output = ScalarPoly;
            fn $m(self, rhs: ScalarPoly) -> ScalarPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ScalarPoly> for ScalarPoly {
            type Output = ScalarPoly;
            fn $m(self, rhs: &ScalarPoly) -> ScalarPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<ScalarPoly> for &ScalarPoly {
            type Output = ScalarPoly;
            fn $m(self, rhs: ScalarPoly) -> ScalarPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        -&self
    }
}

impl AddAssign<&ScalarPoly> for ScalarPoly {
    fn add_assign(&mut self, rhs: &ScalarPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ScalarPoly> for ScalarPoly {
    fn sub_assign(&mut self, rhs: &ScalarPoly) {
        *self = &*self - rhs;
    }
}

impl From<GaussianRational> for ScalarPoly {
    fn from(c: GaussianRational) -> Self {
        ScalarPoly::constant(c)
    }
}

impl From<i64> for ScalarPoly {
    fn from(n: i64) -> Self {
        ScalarPoly::from_int(n)
    }
}

fn is_negative_like(c: &GaussianRational) -> bool {
    (c.is_real() && c.re.is_negative()) || (c.is_imaginary() && c.im.is_negative())
}

fn render_term(k: ScalarKey, c: GaussianRational) -> String {
    let mut factors: Vec<String> = Vec::with_capacity(3);
    if k.q_exp == 1 {
        factors.push("q".into());
    } else if k.q_exp != 0 {
        factors.push(format!("q^{}", k.q_exp));
    }
    if k.mu_deg == 1 {
        factors.push("μ".into());
    } else if k.mu_deg > 1 {
        factors.push(format!("μ^{}", k.mu_deg));
    }
    if factors.is_empty() || !c.is_one() {
        factors.insert(0, c.to_string());
    }
    factors.join("·")
}

/// Renders terms sorted by `μ` degree descending, then `q` exponent ascending,
/// e.g. `μ^2 + μ` or `(1+2i)·q^-1·μ - 1/2`.
impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().copied().collect();
        ordered.sort_by(|(a, _), (b, _)| b.mu_deg.cmp(&a.mu_deg).then(a.q_exp.cmp(&b.q_exp)));
        for (ix, (k, c)) in ordered.into_iter().enumerate() {
            let neg = is_negative_like(&c);
            let body = render_term(k, if neg { -c } else { c });
            match (ix, neg) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
