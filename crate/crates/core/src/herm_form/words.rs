use std::collections::BTreeMap;
use std::fmt;

use crate::coefficients::ScalarPoly;
use crate::quantum_torus::TorusMonomial;
use crate::Error;

/// `E₁₂(α₁)…E₁₂(α_k)E₃₂(β₁)…E₃₂(β_l).1` with both argument lists sorted.
/// All factors commute, so the sorted form is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisWord {
    e12: Vec<TorusMonomial>,
    e32: Vec<TorusMonomial>,
}

impl BasisWord {
    pub fn vacuum() -> Self {
        Self::default()
    }

    pub fn new(mut e12: Vec<TorusMonomial>, mut e32: Vec<TorusMonomial>) -> Self {
        e12.sort_unstable();
        e32.sort_unstable();
        Self { e12, e32 }
    }

    pub fn e12_args(&self) -> &[TorusMonomial] {
        &self.e12
    }

    pub fn e32_args(&self) -> &[TorusMonomial] {
        &self.e32
    }

    pub fn level(&self) -> (usize, usize) {
        (self.e12.len(), self.e32.len())
    }

    pub fn len(&self) -> usize {
        self.e12.len() + self.e32.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.e12.is_empty() && self.e32.is_empty()
    }

    /// `E₁₂(mono)·self`.
    pub fn with_e12(&self, mono: TorusMonomial) -> Self {
        let mut out = self.clone();
        let ix = out.e12.partition_point(|x| *x <= mono);
        out.e12.insert(ix, mono);
        out
    }

    /// `E₃₂(mono)·self`.
    pub fn with_e32(&self, mono: TorusMonomial) -> Self {
        let mut out = self.clone();
        let ix = out.e32.partition_point(|x| *x <= mono);
        out.e32.insert(ix, mono);
        out
    }

    /// Split off one factor: `self = E_{i2}(mono)·rest`.
    pub(crate) fn peel(&self) -> Option<(u8, TorusMonomial, BasisWord)> {
        if let Some((first, rest)) = self.e12.split_first() {
            Some((1, *first, BasisWord { e12: rest.to_vec(), e32: self.e32.clone() }))
        } else {
            self.e32
                .split_first()
                .map(|(first, rest)| (3, *first, BasisWord { e12: Vec::new(), e32: rest.to_vec() }))
        }
    }

    pub fn shifted(&self, p: ShiftParams) -> Self {
        let shift = |v: &[TorusMonomial]| v.iter().map(|x| x.shifted(p.a, p.b)).collect();
        Self { e12: shift(&self.e12), e32: shift(&self.e32) }
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.e12 {
            write!(f, "E12({x})")?;
        }
        for x in &self.e32 {
            write!(f, "E32({x})")?;
        }
        f.write_str("|0>")
    }
}

/// Translation `T̃_{a,b}` of every word argument by `s^a t^b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShiftParams {
    pub a: i64,
    pub b: i64,
}

pub fn shift_word(p: ShiftParams, w: &BasisWord) -> BasisWord {
    w.shifted(p)
}

/// Finite linear combination of basis words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordCombination {
    terms: BTreeMap<BasisWord, ScalarPoly>,
}

impl WordCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::word(BasisWord::vacuum())
    }

    pub fn word(w: BasisWord) -> Self {
        Self::term(w, ScalarPoly::one())
    }

    pub fn term(w: BasisWord, c: ScalarPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &ScalarPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &BasisWord) -> ScalarPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn vacuum_coeff(&self) -> ScalarPoly {
        self.coeff(&BasisWord::vacuum())
    }

    pub fn add_term(&mut self, w: BasisWord, c: &ScalarPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c · rhs`.
    pub fn add_scaled(&mut self, rhs: &WordCombination, c: &ScalarPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in rhs.terms.iter() {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn add(&self, rhs: &WordCombination) -> WordCombination {
        let mut out = self.clone();
        out.add_scaled(rhs, &ScalarPoly::one());
        out
    }

    pub fn sub(&self, rhs: &WordCombination) -> WordCombination {
        let mut out = self.clone();
        out.add_scaled(rhs, &ScalarPoly::from_int(-1));
        out
    }

    pub fn scale(&self, c: &ScalarPoly) -> WordCombination {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Apply a word-to-word map termwise.
    pub fn map_words(&self, f: impl Fn(&BasisWord) -> BasisWord) -> WordCombination {
        let mut out = Self::zero();
        for (w, c) in self.terms.iter() {
            out.add_term(f(w), c);
        }
        out
    }

    /// The common level of every word.
    pub fn level(&self) -> Result<(usize, usize), Error> {
        let mut words = self.terms.keys();
        let first = words.next().ok_or(Error::ZeroVector)?.level();
        for w in words {
            if w.level() != first {
                return Err(Error::MixedLevel(first, w.level()));
            }
        }
        Ok(first)
    }
}

impl From<BasisWord> for WordCombination {
    fn from(w: BasisWord) -> Self {
        Self::word(w)
    }
}

impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (ix, (w, c)) in self.terms.iter().enumerate() {
            if ix > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})·{w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(m: i64, n: i64) -> TorusMonomial {
        TorusMonomial::new(m, n)
    }

    #[test]
    fn canonical_order() {
        let a = BasisWord::new(vec![mono(1, 0), mono(-1, 1)], vec![mono(0, 0)]);
        let b = BasisWord::vacuum().with_e32(mono(0, 0)).with_e12(mono(1, 0)).with_e12(mono(-1, 1));
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "E12(s^-1 t^1)E12(s^1 t^0)E32(s^0 t^0)|0>");
        assert_eq!(BasisWord::vacuum().to_string(), "|0>");
    }

    #[test]
    fn levels() {
        assert_eq!(BasisWord::vacuum().level(), (0, 0));
        assert_eq!(BasisWord::new(vec![mono(0, 0)], vec![mono(1, 1)]).level(), (1, 1));
        let mixed = WordCombination::vacuum().add(&WordCombination::word(BasisWord::new(vec![mono(0, 0)], vec![])));
        assert!(matches!(mixed.level(), Err(Error::MixedLevel(..))));
        assert!(matches!(WordCombination::zero().level(), Err(Error::ZeroVector)));
    }

    #[test]
    fn shifts() {
        let w = BasisWord::new(vec![mono(0, 0)], vec![]);
        assert_eq!(shift_word(ShiftParams { a: 1, b: 0 }, &w), BasisWord::new(vec![mono(1, 0)], vec![]));
        assert_eq!(shift_word(ShiftParams::default(), &w), w);
    }

    #[test]
    fn peel_takes_e12_first() {
        let w = BasisWord::new(vec![mono(2, 0), mono(0, 1)], vec![mono(0, 0)]);
        let (kind, x, rest) = w.peel().unwrap();
        assert_eq!((kind, x), (1, mono(0, 1)));
        assert_eq!(rest.with_e12(x), w);
        let (kind, _, rest) = BasisWord::new(vec![], vec![mono(0, 0)]).peel().unwrap();
        assert_eq!(kind, 3);
        assert!(rest.is_vacuum());
        assert!(BasisWord::vacuum().peel().is_none());
    }
}
