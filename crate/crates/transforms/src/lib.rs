//! Input transforms: hiding among `*` symbols, shuffling with attached
//! origins, the shuffled direct sum, pSearch, and the ΣMAJ instances.
//!
//! Symbols are `u32`; `*` is represented by `None` and never collides with a
//! symbol. Every evaluator validates its domain and returns a typed error on
//! violation rather than a default bit.

mod base;
mod hiding;
mod shuffle;
mod sigma_maj;

pub use base::{BaseFunction, Dictator, ElementDistinctness, FnBase, IdentityBit, KDistinctness, SymmetricBoolean};
pub use hiding::{format_hidden, hide_embed, hide_eval, parse_hidden, psearch_eval, HiddenString, Placement};
pub use shuffle::{shuffle_dsum_eval, shuffle_eval, shuffled, ShuffledDirectSumInput, ShuffledString};
pub use sigma_maj::{sample_h, sigma_maj_classify, HSample, SigmaMajClass, SigmaMajInstance};

use thiserror::Error;

/// Input symbol; `*` is `None` in hidden strings.
pub type Symbol = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("expected {expected} non-* symbols, found {found}")]
    NonStarCount { expected: usize, found: usize },
    #[error("input of length {0} is outside the base function's domain")]
    OutsideDomain(usize),
    #[error("hiding length {b} is shorter than base length {a}")]
    HidingLength { a: usize, b: usize },
    #[error("embedding positions must be {a} distinct values in [0, {b})")]
    BadPositions { a: usize, b: usize },
    #[error("origins do not form a permutation of [0, {0})")]
    NotPermutation(usize),
    #[error("copy {copy} appears {count} times, expected {expected}")]
    CopyCount { copy: usize, count: usize, expected: usize },
    #[error("shuffled direct sum of {len} entries does not split into {k} copies")]
    CopyShape { len: usize, k: usize },
    #[error("n = {0} is not divisible by 12")]
    NotMultipleOf12(usize),
    #[error("matrix is not square with side {0}")]
    Shape(usize),
    #[error("pSearch needs exactly one non-* symbol, found {0}")]
    PSearch(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, TransformError>;
