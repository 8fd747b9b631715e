//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("spectrum does not split over Q (irreducible factor of degree {remaining_degree} remains)")]
    NonSplitSpectrum { remaining_degree: usize },

    #[error("elements live on different symplectic spaces (n = {left} vs n = {right})")]
    SpaceMismatch { left: usize, right: usize },

    #[error("matrix violates the defining identity m^T J + J m = 0 of sp_2n")]
    NotInAlgebra,

    #[error("point violates [x,y] + i^2 = 0")]
    NotOnVariety,

    #[error("Cartan point is not regular (a root value 2t_k or t_k ± t_l vanishes)")]
    NotRegular,

    #[error("element is not the Cartan embedding of a regular point")]
    NotRegularCartan,

    #[error("linear system has no solution: right-hand side is outside the column span")]
    NoSolution,

    #[error("commutator has rank {rank} > 1")]
    RankTooHigh { rank: usize },

    #[error("vector is not a common eigenvector of the pair")]
    NotCommonEigenvector,

    // The existence of a common eigenvector under a rank-<=1 commutator is a
    // theorem we rely on, not one we re-prove; failing to find one on a valid
    // input is an internal error worth reporting loudly.
    #[error("no common eigenvector found although the commutator has rank <= 1")]
    CommonEigenvectorMissing,

    #[error("elements do not commute")]
    NotCommuting,

    #[error("element is not semisimple")]
    NotSemisimple,

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),
}
