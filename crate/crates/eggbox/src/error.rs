//! Error type shared by all modules.

use crate::linalg::Matrix;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix does not belong to the monoid")]
    NotInMonoid,

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("element is not a unit of the monoid")]
    NotAUnit,

    #[error("subspaces are not complementary")]
    NotComplementary,

    #[error("span basis is linearly dependent")]
    DependentBasis,

    #[error("identity matrix is not in the span")]
    MissingIdentity,

    #[error("span is not closed under multiplication: product of basis elements {i} and {j} escapes the span")]
    NotClosed { i: usize, j: usize, product: Matrix },

    #[error("no invertible element found within the retry budget")]
    UnitSamplingFailed,

    #[error("element has no regularity witness in the monoid")]
    NotRegular,

    #[error("invalid idempotent selector: {0}")]
    InvalidSelector(String),

    #[error("parse error: {0}")]
    Parse(String),
}
