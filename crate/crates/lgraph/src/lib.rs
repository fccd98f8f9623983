//! Learning graphs for `k`-cycle detection in degree-bounded edge lists: the
//! construction, exact feasibility checks on sampled inputs, and the
//! closed-form complexity objective.

mod entries;
mod feasibility;
mod instance;
mod layout;
mod objective;
mod params;
mod vertex;

pub use entries::{block_form, entry_from_vectors, vectors, ArcKind, Monomial, Poly, Role, Status, Weight};
pub use feasibility::{active_arc_count, audit_feasibility, feasibility_sum, FeasibilityAudit, FeasibilityReport};
pub use instance::{
    choose_certificate, is_consistent, is_positive, sample_consistent, sample_triple, sample_yes, Edit, Triple,
};
pub use layout::{mu, Label, Layout};
pub use objective::{
    enumerate_structure, objective_eval, scaling_target, stage_structure, v1_size, Objective, StageCost, StageCount,
    ENUMERATION_CAP,
};
pub use params::{default_params, LGParams, Variant};
pub use vertex::{assignment_of, Assignment, Entry, Vertex};

use graphcore::GraphError;

#[derive(Debug, thiserror::Error)]
pub enum LgError {
    #[error("invalid parameters: {0}")]
    Param(String),
    #[error("malformed vertex: {0}")]
    Shape(String),
    #[error("x has no valid certificate")]
    NoCertificate,
    #[error("retry cap exceeded while sampling {0}")]
    RetryCap(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, LgError>;
