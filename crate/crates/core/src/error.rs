use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of an operation (wrong algebra, degree, p, …).
    #[error("domain error: {0}")]
    Domain(String),
    /// A required table was not built far enough.
    #[error("configuration error: {0}")]
    Config(String),
    /// An identity that must hold by construction failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
