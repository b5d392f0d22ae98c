//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("validation failed ({check}): witness basis vector {witness}")]
    ValidationFailed { check: &'static str, witness: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("leg position out of range: {position} not in 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("braiding is not skew-invertible (defining linear system is singular)")]
    NotSkewInvertible,

    #[error("dual extension inconsistent: {0}")]
    ExtensionInconsistent(String),

    #[error("braiding on W is not monomial: it mixes basis pair {0}")]
    NonMonomial(String),

    #[error("color table mismatch between operands")]
    ColorTableMismatch,

    #[error("invalid color table: {0}")]
    InvalidColorTable(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("no rational primitive: simple pole in the partial fraction decomposition")]
    NonRationalPrimitive,

    #[error("duplicate poles: {0}")]
    DuplicatePoles(String),

    #[error("degree bound too small: element has degree {degree}, bound is {bound}")]
    BoundTooSmall { degree: usize, bound: usize },

    #[error("braiding is not a Hecke symmetry with q != +-1")]
    NotHecke,

    #[error("operation unsupported for this bracket kind: {0}")]
    UnsupportedKind(String),

    #[error("parse error: {0}")]
    Parse(String),
}
