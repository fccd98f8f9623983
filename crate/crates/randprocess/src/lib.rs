//! The classical two-process gadget: simulation of `P(α, β, γ)`, exact and
//! Monte Carlo distances between `P_0` and `P_1`, and the binomial identities.
//!
//! Distances are reported as `ℓ1` sums `Σ_x |Pr_0[x] - Pr_1[x]|`, the
//! quantity bounded by `4t²/n`.

mod exact;
mod identities;
mod mc;
mod process;

pub use exact::{bad_closed_form, exact_tvd, transcript_probability, ExactTvd, ENUMERATION_CAP};
pub use identities::{check_binomial_identities, IdentityReport, MAX_T};
pub use mc::{mc_tvd, McEstimate, MIN_TRIALS};
pub use process::{
    bit_and_label, bit_one, p_dense, simulate, with_label, Hidden, Label, ProcessConfig, Step, Transcript, Visible, Q,
};

#[derive(Debug, thiserror::Error)]
pub enum ProcessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{what} = {value} lies outside [0, 1]")]
    Probability { what: &'static str, value: String },
    #[error("enumeration at n = {n}, t = {t} exceeds the size guard")]
    TooLarge { n: u32, t: u32 },
    #[error("exact arithmetic overflowed 128 bits")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, ProcessError>;
