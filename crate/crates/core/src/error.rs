//! Error types shared by all stages of the pipeline.

use thiserror::Error;

/// Errors produced by state construction, simulation, and reconstruction.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument failed validation (non-finite value, bad range, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two objects that must share a Fock-space dimension do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An operation was asked to act on an input for which it is undefined.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A displaced state no longer fits in the truncated Fock space.
    #[error("truncation overflow: lost norm {lost:.3e} exceeds budget {budget:.3e}")]
    TruncationOverflow { lost: f64, budget: f64 },

    /// A linear system has (numerically) deficient column rank.
    #[error("rank-deficient system at Fourier order s = {s} (condition number {cond:.3e})")]
    RankDeficient { s: usize, cond: f64 },

    /// Too few probe phases for the requested Fourier order.
    #[error("aliasing: {phases} phases cannot resolve Fourier orders up to {s_max}")]
    Aliasing { phases: usize, s_max: usize },

    /// Measured data carry no usable signal.
    #[error("no signal: {0}")]
    NoSignal(String),

    /// The relative phase cannot be recovered from the available data.
    #[error("phase unrecoverable: {0}")]
    UnrecoverablePhase(String),

    /// Neither arcsin branch is consistent with the second spin rotation.
    #[error(
        "inconsistent arcsin branches: residuals {res_a:.3e} and {res_b:.3e} both exceed {tol:.3e}"
    )]
    InconsistentBranch { res_a: f64, res_b: f64, tol: f64 },

    /// An eigenvector is defined only up to rotations in a degenerate subspace.
    #[error("gauge ambiguity: {0}")]
    GaugeAmbiguity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
