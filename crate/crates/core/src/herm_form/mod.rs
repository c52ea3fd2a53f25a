//! Iterated-action words, the module action on them, and the contravariant
//! hermitian form evaluated recursively and combinatorially.

mod combinatorial;
mod crosscheck;
mod engine;
mod gram;
mod rank;
mod words;

pub use combinatorial::{form_combinatorial, form_combinatorial_with, ClassConvention};
pub use crosscheck::{crosscheck, levels_up_to, words_up_to, CrosscheckReport, Mismatch};
pub use engine::FormEngine;
pub use gram::{gram, gram_of_words, gram_shifted, BasisSpec, GramMatrix};
pub use rank::{rank, realize, words_to_polys_rank};
pub use words::{shift_word, BasisWord, ShiftParams, WordCombination};

#[cfg(test)]
mod tests;
