//! Edge-list graphs over `[n]`, the universal input object of the lab.
//!
//! An [`EdgeList`] is an ordered sequence of unordered vertex pairs; repeated
//! edges are kept and counted. Statistics (degrees, paths, cycles) are
//! computed at the level of edge positions, so parallel edges contribute
//! separately.

mod edgelist;
mod facts;
mod partition;
pub mod rng;
mod stats;

pub use edgelist::{colex_decode, colex_encode, num_pairs, Edge, EdgeList};
pub use facts::{
    maxdeg_threshold, montecarlo_facts, sample_uniform, vertex_avoidance_prob, AvoidanceMethod, AvoidanceResult,
    FactsReport,
};
pub use partition::{partition_exists, partition_size};
pub use stats::{
    count_subgraphs, cycle_edges_form_cycle, duplicate_fix_count, find_k_cycle, graph_stats, has_triangle, max_degree,
    path_count, Certificate, CertificateKind, GraphStats, Pattern,
};

use thiserror::Error;

/// Errors raised by graph construction and statistics.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    ZeroVertices,
    #[error("edge {index} = {{{u},{v}}} has an endpoint outside [1, {n}]")]
    EndpointOutOfRange { index: usize, u: u32, v: u32, n: u32 },
    #[error("edge {index} is a self-loop at {u}")]
    SelfLoop { index: usize, u: u32 },
    #[error("path length must be at least 1")]
    PathLength,
    #[error("cycle length must be at least 3, got {0}")]
    CycleLength(usize),
    #[error("sampling needs n >= 2, got {0}")]
    TooFewVertices(u32),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("subset size {s} exceeds edge count {m}")]
    SubsetSize { s: usize, m: usize },
}

pub type Result<T> = std::result::Result<T, GraphError>;
