use super::*;
use crate::coefficients::{GaussianRational, ScalarPoly};
use crate::fock::FreeFieldConfig;
use crate::gl3::{GlBasisSymbol, GlElement};
use crate::quantum_torus::{TorusElement, TorusMonomial};

fn mono(m: i64, n: i64) -> TorusMonomial {
    TorusMonomial::new(m, n)
}

fn word(e12: &[(i64, i64)], e32: &[(i64, i64)]) -> BasisWord {
    BasisWord::new(
        e12.iter().map(|&(m, n)| mono(m, n)).collect(),
        e32.iter().map(|&(m, n)| mono(m, n)).collect(),
    )
}

fn mu_sq_plus_mu() -> ScalarPoly {
    ScalarPoly::mu_pow(2) + ScalarPoly::mu()
}

#[test]
fn act_word_examples() {
    let engine = FormEngine::new();
    let one = TorusElement::one();
    let e12 = WordCombination::word(word(&[(0, 0)], &[]));
    assert_eq!(engine.act_word(2, 1, &one, &e12), WordCombination::term(BasisWord::vacuum(), -ScalarPoly::mu()));
    assert!(engine.act_word(2, 1, &one, &WordCombination::vacuum()).is_zero());
    let both = WordCombination::word(word(&[(0, 0)], &[(0, 0)]));
    let expected = WordCombination::term(word(&[], &[(0, 0)]), -(ScalarPoly::mu() + ScalarPoly::one()));
    assert_eq!(engine.act_word(2, 1, &one, &both), expected);
}

#[test]
fn vacuum_base_cases() {
    let engine = FormEngine::new();
    let vac = BasisWord::vacuum();
    let half_mu = ScalarPoly::term(GaussianRational::ratio(1, 2), 0, 1);
    assert_eq!(engine.act_matrix(1, 1, mono(0, 0), &vac).vacuum_coeff(), half_mu);
    assert_eq!(engine.act_matrix(2, 2, mono(0, 0), &vac).vacuum_coeff(), -half_mu.clone());
    assert_eq!(engine.act_matrix(3, 3, mono(0, 0), &vac).vacuum_coeff(), half_mu);
    assert!(engine.act_matrix(1, 1, mono(1, 0), &vac).is_zero());
    for (i, j) in [(2, 1), (2, 3), (1, 3), (3, 1)] {
        assert!(engine.act_matrix(i, j, mono(0, 0), &vac).is_zero());
    }
    assert!(engine.act_symbol(&GlBasisSymbol::DerS, &vac).is_zero());
    let w = word(&[(2, 1)], &[(-1, 1)]);
    assert_eq!(engine.act_symbol(&GlBasisSymbol::DerS, &w), WordCombination::term(w.clone(), ScalarPoly::from_int(1)));
    assert_eq!(engine.act_symbol(&GlBasisSymbol::DerT, &w), WordCombination::term(w, ScalarPoly::from_int(2)));
}

#[test]
fn derived_form_values_agree() {
    let engine = FormEngine::new();
    let cases = [
        (BasisWord::vacuum(), ScalarPoly::one()),
        (word(&[(0, 0)], &[]), ScalarPoly::mu()),
        (word(&[], &[(0, 0)]), ScalarPoly::mu()),
        (word(&[(0, 0)], &[(0, 0)]), mu_sq_plus_mu()),
    ];
    for (w, expected) in cases {
        assert_eq!(engine.form_recursive(&w, &w), expected, "{w}");
        assert_eq!(form_combinatorial(&w, &w), expected, "{w}");
    }
}

#[test]
fn mixed_level_forms_vanish() {
    let engine = FormEngine::new();
    let u = word(&[(0, 0)], &[]);
    let v = word(&[], &[(0, 0)]);
    assert!(engine.form_recursive(&u, &v).is_zero());
    assert!(engine.form_recursive(&BasisWord::vacuum(), &u).is_zero());
    assert!(form_combinatorial(&u, &v).is_zero());
}

#[test]
fn gram_examples() {
    let engine = FormEngine::new();
    let g = gram(&engine, BasisSpec::new((0, 0), 1)).unwrap();
    assert_eq!(g.entries, vec![vec![ScalarPoly::one()]]);
    let g = gram(&engine, BasisSpec::new((1, 0), 0)).unwrap();
    assert_eq!(g.entries, vec![vec![ScalarPoly::mu()]]);
    let g = gram(&engine, BasisSpec::new((1, 1), 0)).unwrap();
    assert_eq!(g.entries, vec![vec![mu_sq_plus_mu()]]);
    assert_eq!(
        g.to_json().to_string(),
        r#"{"basis":["E12(s^0 t^0)E32(s^0 t^0)|0>"],"entries":[["μ^2 + μ"]],"level":[1,1],"window":0}"#
    );
}

#[test]
fn level_one_gram_is_mu_identity() {
    let engine = FormEngine::new();
    let g = gram(&engine, BasisSpec::new((1, 0), 1)).unwrap();
    assert_eq!(g.dim(), 9);
    for (r, row) in g.entries.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            let expected = if r == c { ScalarPoly::mu() } else { ScalarPoly::zero() };
            assert_eq!(*x, expected);
        }
    }
}

#[test]
fn basis_enumeration() {
    assert_eq!(BasisSpec::new((1, 0), 1).words().len(), 9);
    assert_eq!(BasisSpec::new((2, 0), 1).words().len(), 45);
    assert_eq!(BasisSpec::new((1, 1), 1).words().len(), 81);
    assert_eq!(BasisSpec::new((3, 0), 1).words().len(), 165);
    let words = BasisSpec::new((2, 1), 1).words();
    assert_eq!(words.len(), 405);
    assert!(words.windows(2).all(|p| p[0] < p[1]));
    // L(1, 0) at level (1,0): (0,0), (1,0)
    let constrained = BasisSpec::new((1, 0), 1).with_constraint(1, 0).words();
    assert_eq!(constrained, vec![word(&[(0, 0)], &[]), word(&[(1, 0)], &[])]);
    let constrained = BasisSpec::new((2, 0), 2).with_constraint(1, 1).words();
    assert!(constrained.iter().all(|w| {
        let s: i64 = w.e12_args().iter().map(|x| x.m).sum();
        let t: i64 = w.e12_args().iter().map(|x| x.n).sum();
        s <= 1 && t <= 1 && w.e12_args().iter().all(|x| x.m >= 0 && x.n >= 0)
    }));
    assert_eq!(constrained.len(), 5);
}

#[test]
fn gram_json_includes_constraint() {
    let engine = FormEngine::new();
    let g = gram(&engine, BasisSpec::new((1, 0), 1).with_constraint(0, 0)).unwrap();
    assert_eq!(g.to_json()["constraint"], serde_json::json!([0, 0]));
}

#[test]
fn rank_examples() {
    let cfg = FreeFieldConfig::identity();
    assert_eq!(words_to_polys_rank(&[BasisWord::vacuum()], &cfg), 1);
    assert_eq!(words_to_polys_rank(&[word(&[(0, 0)], &[]), word(&[(1, 0)], &[])], &cfg), 2);
    assert_eq!(words_to_polys_rank(&[word(&[(0, 0)], &[]), word(&[(0, 0)], &[])], &cfg), 1);
    let r = GaussianRational::ratio;
    assert_eq!(rank(vec![vec![r(1, 1), r(2, 1)], vec![r(2, 1), r(4, 1)]]), 1);
    assert_eq!(rank(vec![vec![GaussianRational::i(), r(1, 1)], vec![r(1, 1), GaussianRational::i()]]), 2);
    assert_eq!(rank(vec![vec![GaussianRational::i(), r(1, 1)], vec![r(1, 1), -GaussianRational::i()]]), 1);
}

#[test]
fn level_arithmetic() {
    let engine = FormEngine::new();
    let one = mono(0, 0);
    for level in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)] {
        for w in BasisSpec::new(level, 1).words().iter().step_by(7) {
            for x in [one, mono(1, -1)] {
                let down12 = engine.act_matrix(2, 1, x, w);
                if !down12.is_zero() {
                    assert_eq!(down12.level().unwrap(), (level.0 - 1, level.1));
                }
                let down32 = engine.act_matrix(2, 3, x, w);
                if !down32.is_zero() {
                    assert_eq!(down32.level().unwrap(), (level.0, level.1 - 1));
                }
                for i in 1..=3 {
                    let same = engine.act_matrix(i, i, x, w);
                    if !same.is_zero() {
                        assert_eq!(same.level().unwrap(), level);
                    }
                }
            }
        }
    }
}

/// Every generator family plus `d_s`, `d_t`, with arguments in `[-1,1]²`.
fn generators() -> Vec<GlBasisSymbol> {
    let mut out = vec![GlBasisSymbol::DerS, GlBasisSymbol::DerT];
    for i in 1..=3 {
        for j in 1..=3 {
            for m in -1..=1 {
                for n in -1..=1 {
                    out.push(GlBasisSymbol::matrix(i, j, mono(m, n)));
                }
            }
        }
    }
    out
}

#[test]
fn contravariance_low_levels_window_zero() {
    let engine = FormEngine::new();
    let words: Vec<BasisWord> = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        .into_iter()
        .flat_map(|lvl| BasisSpec::new(lvl, 0).words())
        .collect();
    for g in generators() {
        let ge = GlElement::symbol(g);
        for u in &words {
            let gu = engine.act_element(&ge, &WordCombination::word(u.clone()));
            for v in &words {
                let wv = engine.act_element(&ge.omega(), &WordCombination::word(v.clone()));
                let lhs = engine.form(&gu, &WordCombination::word(v.clone()));
                let rhs = engine.form(&WordCombination::word(u.clone()), &wv);
                assert_eq!(lhs, rhs, "g = {g}, u = {u}, v = {v}");
            }
        }
    }
}

#[test]
fn hermitian_symmetry_and_oracle_small() {
    let engine = FormEngine::new();
    for level in [(1, 0), (2, 0), (1, 1), (0, 2)] {
        let words = BasisSpec::new(level, 1).words();
        for u in words.iter().step_by(5) {
            for v in words.iter().step_by(3) {
                let f = engine.form_recursive(u, v);
                assert_eq!(f, engine.form_recursive(v, u).conjugate());
                assert_eq!(f, form_combinatorial(u, v), "u = {u}, v = {v}");
            }
        }
    }
}

#[test]
fn wrong_class_conventions_fail_at_two_factors() {
    let engine = FormEngine::new();
    let w = word(&[(0, 0), (0, 0)], &[]);
    let truth = engine.form_recursive(&w, &w);
    assert_eq!(truth, form_combinatorial_with(&w, &w, ClassConvention::CyclesUnordered));
    assert_ne!(truth, form_combinatorial_with(&w, &w, ClassConvention::OrderedBlocks));
    assert_ne!(truth, form_combinatorial_with(&w, &w, ClassConvention::Unreduced));
    // A single factor cannot tell the conventions apart.
    let w = word(&[(1, 0)], &[]);
    assert_eq!(engine.form_recursive(&w, &w), form_combinatorial_with(&w, &w, ClassConvention::Unreduced));
}

#[test]
fn two_factor_values() {
    // (E12(1)²·1, E12(1)²·1) = 2μ² + 2μ
    let w = word(&[(0, 0), (0, 0)], &[]);
    let expected = ScalarPoly::from_int(2) * mu_sq_plus_mu();
    assert_eq!(FormEngine::new().form_recursive(&w, &w), expected);
    // Noncommuting arguments pick up a phase in the one-cycle terms.
    let u = word(&[(1, 0), (0, 1)], &[]);
    let f = form_combinatorial(&u, &u);
    assert_eq!(f, FormEngine::new().form_recursive(&u, &u));
    assert_eq!(f.mu_degree().unwrap(), 2);
}

#[test]
fn shift_preserves_gram() {
    let engine = FormEngine::new();
    for level in [(1, 0), (1, 1), (2, 0)] {
        let spec = BasisSpec::new(level, 1);
        let base = gram(&engine, spec).unwrap();
        for (a, b) in [(1, 0), (0, 1), (2, -1)] {
            let shifted = gram_shifted(&engine, spec, ShiftParams { a, b }).unwrap();
            assert_eq!(base.entries, shifted.entries, "level {level:?}, shift ({a},{b})");
        }
    }
}

#[test]
fn form_is_sesquilinear() {
    let engine = FormEngine::new();
    let u = word(&[(0, 0)], &[]);
    let v = word(&[(1, 0)], &[]);
    let i_q = ScalarPoly::term(GaussianRational::i(), 1, 0);
    let combo = WordCombination::word(u.clone()).add(&WordCombination::term(v.clone(), i_q.clone()));
    let lhs = engine.form(&combo, &combo);
    // (u + c v, u + c v) = μ + conj(c) c μ and conj(c)·c = 1
    assert_eq!(lhs, ScalarPoly::from_int(2) * ScalarPoly::mu());
    let left = engine.form(&WordCombination::term(v.clone(), i_q.clone()), &WordCombination::word(v.clone()));
    assert_eq!(left, i_q.conjugate() * ScalarPoly::mu());
}

#[test]
fn crosscheck_small() {
    assert_eq!(levels_up_to(2), vec![(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]);
    let engine = FormEngine::new();
    let r = crosscheck(&engine, 2, 0, ClassConvention::CyclesUnordered);
    assert!(r.passed());
    assert_eq!((r.words, r.pairs), (6, 36));
    let r = crosscheck(&engine, 2, 0, ClassConvention::OrderedBlocks);
    let m = r.mismatch.expect("ordered blocks overcount");
    assert_eq!(m.u.len(), 2);
}
