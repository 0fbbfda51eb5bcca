use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// `|1 - <z, w>|` fell below the evaluation threshold.
    #[error("kernel singularity: |1 - <z, w>| = {0:e}")]
    Singularity(f64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Iterative or quadrature routine failed to meet its tolerance.
    #[error("numeric failure in {context}: {detail}")]
    Numeric { context: &'static str, detail: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn numeric(context: &'static str, detail: impl Into<String>) -> Self {
        Error::Numeric {
            context,
            detail: detail.into(),
        }
    }
}
