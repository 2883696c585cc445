//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("poset is not naturally labeled; call `relabel_natural` first")]
    NotNaturallyLabeled,

    #[error("hyperplane normal must be nonzero")]
    ZeroNormal,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty point set")]
    EmptyPointSet,

    #[error("too many points for exact hull enumeration: {0} (limit {1})")]
    TooManyPoints(usize, usize),

    #[error("polytope is not full-dimensional (dim {dim} in R^{ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("not a lattice polytope: vertex coordinates must be integers")]
    NotLattice,

    #[error("expected a simplex: got {0} vertices in dimension {1}")]
    NotASimplex(usize, usize),

    #[error("triangulation lifting budget exhausted after {0} attempts")]
    LiftingBudgetExhausted(usize),

    #[error("face enumeration limited to dimension <= {limit}, got {dim}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
