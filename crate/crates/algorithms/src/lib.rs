//! Classical executions of query algorithms with Grover-type primitives
//! charged analytically by a [`CostModel`].
//!
//! Each runner computes its output from the information its primitives would
//! return (collected positions, block contents) and records the charges per
//! phase in a [`CostReport`].

mod cost;
mod dsum;
mod hide;
mod profile;
mod sigma_maj;
mod walk;

pub use cost::{CostModel, CostReport};
pub use dsum::run_shuffle_dsum;
pub use hide::{run_hide_ed, run_hide_symmetric};
pub use profile::SymmetricProfile;
pub use sigma_maj::{run_sigma_maj_classical, SigmaMajRun};
pub use walk::{walk_cost_optimize, walk_cost_trivertex, WalkTerms};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgoError {
    #[error(transparent)]
    Transform(#[from] transforms::TransformError),
    #[error("input has no non-* symbol")]
    AllStar,
    #[error("symbol {0} is not a bit")]
    NotBit(u32),
    #[error("profile of length {0} does not describe a function on n ≥ 1 bits")]
    InconsistentProfile(usize),
    #[error("base function is not symmetric: inputs of weight {0} disagree")]
    NotSymmetric(usize),
    #[error("profile has n = {profile}, input copies have length {input}")]
    LengthMismatch { profile: usize, input: usize },
    #[error("walk parameter r = {r} outside [1, {d}]")]
    WalkRange { r: usize, d: usize },
    #[error("ΣMAJ input lies outside D0 ∪ D1")]
    OutsideDomain,
    #[error("sample count must be positive")]
    NoSamples,
}

pub type Result<T> = std::result::Result<T, AlgoError>;
