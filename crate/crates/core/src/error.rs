use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrqError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ambient dimensions differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("basis vectors are dependent: {given} given, rank {rank}")]
    DependentBasis { given: usize, rank: usize },
    #[error("inner subspace is not contained in the outer one")]
    NotContained,
    #[error("structurally impossible: {0}")]
    StructurallyImpossible(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
    #[error("witness search exhausted its budget of {budget} twistor points")]
    BudgetExhausted { budget: usize },
    #[error("unknown example {0:?}")]
    UnknownExample(String),
}

pub type Result<T, E = CrqError> = std::result::Result<T, E>;
