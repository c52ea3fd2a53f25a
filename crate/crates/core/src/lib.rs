//! Exact computations for the extended affine Lie algebra `gl₃(ℂ_q)~`: the
//! quantum torus, the Lie bracket and its anti-involution, the free-field
//! polynomial module, the contravariant hermitian form on iterated-action
//! words, and numeric positivity scans of its Gram matrices.

pub mod cli;
pub mod coefficients;
pub mod fock;
pub mod gl3;
pub mod herm_form;
pub mod quantum_torus;
pub mod unitarity;
pub mod verify;

pub use coefficients::{GaussianRational, ScalarKey, ScalarPoly};
pub use fock::{FockMonomial, FockPoly, FreeFieldConfig, IndexPoint};
pub use gl3::{GlBasisSymbol, GlElement};
pub use herm_form::{BasisSpec, BasisWord, FormEngine, GramMatrix, ShiftParams, WordCombination};
pub use quantum_torus::{TorusElement, TorusMonomial};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is zero")]
    EmptyPolynomial,
    #[error("({0}, {1}) is not in K₁ ∪ K₋₁")]
    InvalidIndexPoint(i64, i64),
    #[error("free-field matrix at {point} has a·d = {product}, expected 1")]
    NotUnimodular { point: String, product: String },
    #[error("word combination mixes levels {0:?} and {1:?}")]
    MixedLevel((usize, usize), (usize, usize)),
    #[error("level of the zero vector is undefined")]
    ZeroVector,
    #[error("Gram matrix is not hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },
    #[error("specialized Gram matrix has hermiticity residual {0:e}")]
    HermiticityResidual(f64),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
