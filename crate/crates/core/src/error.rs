//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by the library.
///
/// Diagnostic magnitudes are carried as `f64` regardless of the scalar type
/// the operation ran with.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension must be at least {min}, got {got}")]
    InvalidDimension { min: usize, got: usize },

    #[error("entry count {got} does not match expected {expected}")]
    WrongLength { expected: usize, got: usize },

    #[error("non-finite entry rejected (NaN or infinity)")]
    NonFinite,

    #[error("tolerance must be a finite nonnegative number")]
    InvalidTolerance,

    #[error("index {index} out of range for size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("matrix is not Hermitian: max asymmetry {max_asymmetry:e}")]
    NotHermitian { max_asymmetry: f64 },

    #[error(
        "eigensolver did not converge after {sweeps} sweeps: off-diagonal norm {off_diagonal:e}"
    )]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("matrix is not an orthogonal projector: {reason}")]
    NotProjector { reason: String },

    #[error("projector trace {trace} is not an integer rank within tolerance")]
    NonIntegerRank { trace: f64 },

    #[error("basis vectors {i} and {j} are not orthonormal: deviation {deviation:e}")]
    NotOrthonormal { i: usize, j: usize, deviation: f64 },

    #[error("vector norm {norm} is not 1 within tolerance")]
    NotUnit { norm: f64 },

    #[error("cannot normalize a (near-)zero vector: norm {norm:e}")]
    ZeroVector { norm: f64 },

    #[error("impossible outcome: event has probability ~0 in this state (|Ez| = {norm:e})")]
    ImpossibleOutcome { norm: f64 },

    #[error("not a valid state functional: {reason}")]
    InvalidStateFunctional { reason: String },

    #[error("invalid probability space: {reason}")]
    InvalidSpace { reason: String },

    #[error("Pauli index must be 1, 2 or 3, got {got}")]
    PauliIndex { got: usize },

    #[error("Bloch vector norm {norm} is not 1 within tolerance")]
    NotUnitBloch { norm: f64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
