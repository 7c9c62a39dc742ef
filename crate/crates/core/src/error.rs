//! Error type shared by all modules.

use alloc::string::String;

/// Errors reported by geometry construction, solvers and estimators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An iterative scheme produced non-finite values.
    #[error("numeric failure at iteration {iteration}: {context}")]
    NumericFailure { iteration: usize, context: String },
    /// The requested operation does not support this array configuration.
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
