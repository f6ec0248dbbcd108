//! Exact cycle solvers and the augmentation engine.

mod exact;
mod proof;

pub use exact::{
    exact_cycle_packing, exact_two_factor, greedy_cycle_packing, is_wheel, packing_feasible_by_theory, PackingRoute,
    PackingVerdict, TwoFactor, MAX_MAX_PACKING_ORDER, MAX_TWO_FACTOR_ORDER,
};
pub use proof::{
    augment, build_proof_context, two_factor_via_proof, AugmentOutcome, Orientation, ProofContext, ProofResult,
    ProofRun, Round, StartMode,
};

use thiserror::Error;

use crate::cycles::Violation;
use crate::insertion::InsertionError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid system: {0}")]
    Validation(#[from] Violation),
    #[error(transparent)]
    Insertion(#[from] InsertionError),
    #[error("no cycle has {required} attachments of the chosen component (counts per cycle: {counts:?})")]
    ContextUnavailable { required: usize, counts: Vec<usize> },
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}
