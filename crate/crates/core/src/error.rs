use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("word of length {len} exceeds truncation bound {max_len}")]
    TruncationExceeded { len: usize, max_len: usize },

    #[error("inhomogeneous rule: {0}")]
    InhomogeneousRule(String),

    #[error("monomial {0} lies outside the tabulated basis")]
    OutOfBasis(String),

    #[error("scaling function vanishes or is undefined at ({0}, {1})")]
    ZeroScalingFunction(String, String),

    #[error("search space of {size} candidates exceeds bound {bound}")]
    SearchSpaceTooLarge { size: u128, bound: u128 },

    #[error("invalid definition: {0}")]
    Invalid(String),

    #[error("schema error at {field}: {message}")]
    Schema { field: String, message: String },

    #[error("validation error at {field}: {message}")]
    Validation { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }
}
