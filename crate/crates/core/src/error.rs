use thiserror::Error;

/// Errors raised by the group, algebra, sequence and Cayley layers.
///
/// Non-invertibility is not an error: operations that can meet a singular
/// element return `Option` instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent orientation: {0}")]
    InconsistentAssignment(String),

    #[error("orientation is trivial (every generator maps to +1)")]
    TrivialOrientation,

    #[error("elements belong to different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("wrong generator kind: {0}")]
    WrongKind(String),

    #[error("malformed group table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
