//! Exact simulation of quantum query algorithms against a random edge list in
//! the standard model and in the recording (compressed-oracle) model.
//!
//! The joint register is `|i, u, w⟩|x⟩` with query index `i ∈ [m]`, phase
//! `u ∈ {0, .., N-1}`, workspace `w ∈ [K]` and input `x ∈ ([N] ∪ {⊥})^m`,
//! where `N = C(n,2)`. Input symbols are stored as `1..=N` (colex rank plus
//! one) and `0` stands for `⊥`. Amplitudes are kept in a dense vector, which
//! is exact and small at the supported sizes.

mod algorithm;
pub mod audit;
mod config;
mod graph;
mod lemmas;
mod oracle;
mod progress;
mod projector;
mod schedule;
mod sim;
mod state;

pub use algorithm::{haar_unitary, AlgorithmSpec, Generator};
pub use audit::{run_audit, run_audit_seeds, AuditParams, AuditRecord, AUDITS};
pub use config::{Dims, SimConfig};
pub use graph::{ceil_log2, XStats};
pub use lemmas::{
    binomial_tail, chernoff_bound, degree_exclusion_bound, guessing_bound_general, guessing_bound_triangle,
    leakage_norm, ExclusionReport, GuessBlock, GuessOutput, LeakageReport, MirroringReport,
};
pub use oracle::{s_matrix, Which};
pub use progress::{Measure, Recurrence, RecurrenceReport, StepSlack};
pub use projector::{CountRange, Mask, Projector};
pub use schedule::RateSchedule;
pub use sim::{Mode, Simulator};
pub use state::RecordingState;

pub use num_complex::Complex64;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("U_{step} deviates from unitarity by {dev:e}")]
    NotUnitary { step: usize, dev: f64 },
    #[error("t = {t} exceeds the algorithm horizon {horizon}")]
    Horizon { t: usize, horizon: usize },
    #[error("filter schedule has {got} projectors, expected {expected}")]
    Schedule { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("unknown audit {0}")]
    UnknownAudit(String),
    #[error(transparent)]
    Graph(#[from] graphcore::GraphError),
}

pub type Result<T> = std::result::Result<T, SimError>;
