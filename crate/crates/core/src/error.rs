//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the exact pipeline.
///
/// Verification failures that are *results* (a polynomial is not real
/// rooted, a representation does not verify) are returned as values, not
/// errors; this enum covers violated preconditions and structural limits.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("zero polynomial not allowed here")]
    ZeroInput,
    #[error("polynomial is not monic in T")]
    NotMonic,
    #[error("variable mismatch: expected {expected}, got {got}")]
    VarMismatch { expected: String, got: String },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("Sturm endpoint is a root of the polynomial")]
    RootAtEndpoint,
    #[error("polynomial violates the (k,d) grading: {0}")]
    GradingViolated(String),
    #[error("form is not homogeneous of a single degree")]
    NotHomogeneous,
    #[error("direction is a zero of the form")]
    ZeroAtDirection,
    #[error("modulus is not separable (vanishing discriminant)")]
    NotSeparable,
    #[error("elements belong to different quotient rings")]
    ModulusMismatch,
    #[error("element is not invertible in the quotient algebra")]
    NotInvertible,
    #[error("generators span a module of rank {got}, need {need}")]
    RankDeficient { need: usize, got: usize },
    #[error("module is not invariant under multiplication by alpha")]
    NotAlphaInvariant,
    #[error("trace form entry ({row},{col}) is not polynomial: witness condition violated")]
    NotWelldefined { row: usize, col: usize },
    #[error("Gram form is not unimodular")]
    NotUnimodular,
    #[error("pivot search failed to produce a constant-value vector")]
    PivotSearchFailed,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("D-symmetry identity D*M = M^T*D fails at entry ({row},{col})")]
    NotDSymmetric { row: usize, col: usize },
    #[error("scaling entries must be positive")]
    NotPositive,
    #[error("polynomial is negative at x = {witness}")]
    NegativeAt { witness: String },
    #[error("no exact two-squares decomposition within search bounds")]
    TwoSquaresInexact,
    #[error("no constructive witness for an irreducible factor of degree {degree}")]
    NotConstructive { degree: usize },
    #[error("perturbation budget exhausted at stage {stage}")]
    BudgetExhausted { stage: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
