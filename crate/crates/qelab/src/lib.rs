//! Experiment runner binding the workspace crates: named audit suites,
//! schema-checked configuration, deterministic seeding and JSON-lines records.

mod config;
mod record;
mod report;
mod suites;

pub use config::{Arithmetic, ExperimentConfig, SeedRange};
pub use record::ResultRecord;
pub use report::{read_records, summarize, SuiteSummary, Summary};
pub use suites::{run_suite, SUITES};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QelabError {
    #[error("config error: {0}")]
    Config(String),
    #[error("suite {suite}: {msg}")]
    Module { suite: String, msg: String },
    #[error("malformed record on line {line}: {msg}")]
    Record { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl QelabError {
    /// Process exit code: 2 for configuration and input errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            QelabError::Config(_) | QelabError::Record { .. } => 2,
            QelabError::Module { .. } | QelabError::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, QelabError>;

/// Reads `QELAB_THREADS` and, when set, caps the global worker pool.
pub fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("QELAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| QelabError::Config(format!("QELAB_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| QelabError::Config(format!("thread pool: {e}")))
}
