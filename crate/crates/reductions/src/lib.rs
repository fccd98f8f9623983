//! Reductions between k-distinctness, k-cycle, 3-sum, triangle-edge,
//! triangle-vertex and their hidden variants, plus search-to-decision.
//!
//! Every reduction is local: output symbol `i` is computed from at most one
//! input symbol, read through a [`Reader`] that counts reads. Randomness is
//! captured in a [`RandomnessRecord`], and the `*_with` entry points replay a
//! record deterministically.

mod audit;
mod cycle_kdist;
mod dense;
mod oracle;
mod problems;
mod search;
mod sum;
mod tri_edge;
mod tri_vertex;

pub use audit::{exhaustive_checks, ReductionCheck};
pub use cycle_kdist::{
    kdist_symbol, kdist_to_kcycle, kdist_to_kcycle_with, partition_kcycle_to_or_kdist, KDistFamily, YSymbol,
};
pub use dense::{dense_symbol, ed_to_dense_triangle, ed_to_dense_triangle_with};
pub use oracle::Reader;
pub use problems::{k_collision, three_sum, tri_edge, tri_vertex};
pub use search::{
    majority_reps, planted_instance, search_to_decision, DecisionOracle, ExactOracle, NoisyOracle, SearchConfig,
    SearchOutcome,
};
pub use sum::{sum_symbol, triangle_to_3sum, triangle_to_3sum_with, Vec4};
pub use tri_edge::{edge_symbol, hide_ed_to_triedge, hide_ed_to_triedge_with, hide_symbol, triedge_to_hide_ed};
pub use tri_vertex::{hide3dist_to_trivertex, hide3dist_to_trivertex_with, vertex_symbol, TriVertexInstance};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("length {m} is not divisible by {k}")]
    NotDivisible { m: usize, k: usize },
    #[error("input has a repeated edge at positions {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("alphabet size {s} is smaller than input length {m}")]
    AlphabetTooSmall { s: usize, m: usize },
    #[error("base instance has more than one collision pair")]
    TooManyCollisions,
    #[error("edge {0} crosses parts or leaves the partition")]
    CrossPartEdge(usize),
    #[error("partition parts must all have size {0}")]
    PartSize(usize),
    #[error("randomness record does not match the input: {0}")]
    BadRecord(String),
    #[error("symbol {0} outside the alphabet")]
    Symbol(u32),
    #[error("cycle length must be at least 3")]
    CycleLength,
    #[error(transparent)]
    Graph(#[from] graphcore::GraphError),
}

pub type Result<T> = std::result::Result<T, ReductionError>;

/// Names of the implemented reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionName {
    KDistToKCycle,
    TriangleTo3Sum,
    TriEdgeToHideEd,
    HideEdToTriEdge,
    Hide3DistToTriVertex,
    PartitionKCycleToOrKDist,
    EdToDenseTriangle,
}

/// The random choices a reduction made; replaying them reproduces the output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RandomnessRecord {
    None,
    /// Part label per input position.
    Parts(Vec<usize>),
    /// Input permutation and a sign pair per output position.
    PermutationSigns {
        permutation: Vec<usize>,
        signs: Vec<(i8, i8)>,
    },
    /// One binary choice per input position.
    Choices(Vec<bool>),
}

/// Transformed input, the randomness used, and which reduction produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOutcome<O> {
    pub output: O,
    pub record: RandomnessRecord,
    pub reduction: ReductionName,
}

/// How part labels are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartitionMode {
    /// Each position gets an independent uniform label.
    Independent,
    /// A uniform partition into equal-size parts (length must be divisible).
    Balanced,
}

pub(crate) fn draw_parts(m: usize, k: usize, mode: PartitionMode, seed: u64) -> Result<Vec<usize>> {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let mut rng = graphcore::rng::seeded(seed);
    match mode {
        PartitionMode::Independent => Ok((0..m).map(|_| rng.random_range(0..k)).collect()),
        PartitionMode::Balanced => {
            if !m.is_multiple_of(k) {
                return Err(ReductionError::NotDivisible { m, k });
            }
            let mut labels: Vec<usize> = (0..m).map(|i| i % k).collect();
            labels.shuffle(&mut rng);
            Ok(labels)
        }
    }
}
