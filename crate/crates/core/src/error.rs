use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input text. `line` is 1-based; 0 when the problem is not
    /// tied to a single line.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),

    #[error("not an eigenvector for eigenvalue {0}")]
    NotAnEigenvector(String),

    #[error("vector is not in the null space of the skeleton")]
    NotInSkeletonNullSpace,

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal cross-check failed. Indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input, as opposed to well-formed
    /// input that the requested operation refuses.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::InvalidGraph(_)
                | Error::UnknownVertex(_)
                | Error::InvalidMatrix(_)
                | Error::DimensionMismatch { .. }
        )
    }
}
