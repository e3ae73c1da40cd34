use crate::expr::ParseError;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    NotInvertible = 2,
    InvalidInput = 3,
    VerificationFailed = 4,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Anything that makes a command's input unusable. All of these exit with
/// [`Status::InvalidInput`].
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] cayley_core::Error),
}
