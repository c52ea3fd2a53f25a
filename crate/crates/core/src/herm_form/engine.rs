use std::sync::Arc;

use dashmap::DashMap;

use super::words::{BasisWord, WordCombination};
use crate::coefficients::{GaussianRational, ScalarPoly};
use crate::gl3::{bracket_symbols, GlBasisSymbol, GlElement};
use crate::quantum_torus::{TorusElement, TorusMonomial};

type ActKey = (u8, u8, TorusMonomial, BasisWord);

/// Word-rewriting evaluator for the module action and the recursive form.
///
/// Lowering and diagonal operators are commuted rightward through a word's
/// factors until they hit the vacuum. Central terms of the brackets are
/// dropped because they act by zero. Results are memoized; the caches are
/// safe to share across threads.
#[derive(Default)]
pub struct FormEngine {
    act_cache: DashMap<ActKey, Arc<WordCombination>>,
    form_cache: DashMap<(BasisWord, BasisWord), ScalarPoly>,
}

impl FormEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&self) {
        self.act_cache.clear();
        self.form_cache.clear();
    }

    /// `E_ij(mono)·w`.
    pub fn act_matrix(&self, i: u8, j: u8, mono: TorusMonomial, w: &BasisWord) -> Arc<WordCombination> {
        match (i, j) {
            (1, 2) => return Arc::new(WordCombination::word(w.with_e12(mono))),
            (3, 2) => return Arc::new(WordCombination::word(w.with_e32(mono))),
            _ => {}
        }
        let key = (i, j, mono, w.clone());
        let cached = self.act_cache.get(&key).map(|r| Arc::clone(&r));
        if let Some(hit) = cached {
            return hit;
        }
        let out = Arc::new(self.act_matrix_uncached(i, j, mono, w));
        self.act_cache.insert(key, Arc::clone(&out));
        out
    }

    fn act_matrix_uncached(&self, i: u8, j: u8, mono: TorusMonomial, w: &BasisWord) -> WordCombination {
        let Some((kind, x, rest)) = w.peel() else {
            let half_mu = ScalarPoly::term(GaussianRational::ratio(1, 2), 0, 1);
            return match (i, j) {
                (1, 1) | (3, 3) if mono.is_one() => WordCombination::term(BasisWord::vacuum(), half_mu),
                (2, 2) if mono.is_one() => WordCombination::term(BasisWord::vacuum(), -half_mu),
                _ => WordCombination::zero(),
            };
        };
        // E·X·rest = X·(E·rest) + [E, X]·rest
        let mut out = self.act_matrix(i, j, mono, &rest).map_words(|r| match kind {
            1 => r.with_e12(x),
            _ => r.with_e32(x),
        });
        let commutator = bracket_symbols(
            &GlBasisSymbol::matrix(i, j, mono),
            &GlBasisSymbol::matrix(kind, 2, x),
        );
        for (sym, c) in commutator.terms() {
            if let GlBasisSymbol::Matrix { i, j, mono } = *sym {
                out.add_scaled(&self.act_matrix(i, j, mono, &rest), c);
            }
        }
        out
    }

    /// Action of one basis symbol on a word.
    pub fn act_symbol(&self, sym: &GlBasisSymbol, w: &BasisWord) -> WordCombination {
        let grade = |f: fn(&TorusMonomial) -> i64| -> WordCombination {
            let total: i64 = w.e12_args().iter().chain(w.e32_args()).map(f).sum();
            WordCombination::term(w.clone(), ScalarPoly::from_int(total))
        };
        match *sym {
            GlBasisSymbol::Matrix { i, j, mono } => (*self.act_matrix(i, j, mono, w)).clone(),
            GlBasisSymbol::DerS => grade(|x| x.m),
            GlBasisSymbol::DerT => grade(|x| x.n),
            GlBasisSymbol::CentralS | GlBasisSymbol::CentralT => WordCombination::zero(),
        }
    }

    /// Action of a Lie algebra element on a combination of words.
    pub fn act_element(&self, g: &GlElement, v: &WordCombination) -> WordCombination {
        let mut out = WordCombination::zero();
        for (sym, cg) in g.terms() {
            for (w, cw) in v.terms() {
                let coeff = cg * cw;
                match *sym {
                    GlBasisSymbol::Matrix { i, j, mono } => {
                        out.add_scaled(&self.act_matrix(i, j, mono, w), &coeff)
                    }
                    _ => out.add_scaled(&self.act_symbol(sym, w), &coeff),
                }
            }
        }
        out
    }

    /// `E_ij(arg)·v` for a torus element `arg`.
    pub fn act_word(&self, i: u8, j: u8, arg: &TorusElement, v: &WordCombination) -> WordCombination {
        self.act_element(&GlElement::e_of(i, j, arg), v)
    }

    /// The contravariant form on two basis words: peel `u` from the left,
    /// moving each factor across as `ω` of itself, until `u` is the vacuum.
    pub fn form_recursive(&self, u: &BasisWord, v: &BasisWord) -> ScalarPoly {
        self.form_inner(u, v, false)
    }

    fn form_inner(&self, u: &BasisWord, v: &BasisWord, memoize: bool) -> ScalarPoly {
        let Some((kind, x, rest)) = u.peel() else {
            return if v.is_vacuum() { ScalarPoly::one() } else { ScalarPoly::zero() };
        };
        let key = (u.clone(), v.clone());
        if memoize {
            let cached = self.form_cache.get(&key).map(|r| r.clone());
            if let Some(hit) = cached {
                return hit;
            }
        }
        let adjoint = GlElement::symbol(GlBasisSymbol::matrix(kind, 2, x)).omega();
        let image = self.act_element(&adjoint, &WordCombination::word(v.clone()));
        let mut out = ScalarPoly::zero();
        for (w, c) in image.terms() {
            out += &(c * &self.form_inner(&rest, w, true));
        }
        if memoize {
            self.form_cache.insert(key, out.clone());
        }
        out
    }

    /// Sesquilinear extension: antilinear in `u`, linear in `v`.
    pub fn form(&self, u: &WordCombination, v: &WordCombination) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                out += &(&ca.conjugate() * cb * self.form_recursive(a, b));
            }
        }
        out
    }
}
