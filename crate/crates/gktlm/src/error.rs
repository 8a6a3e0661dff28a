use thiserror::Error;

/// Error type shared across the crate.
#[derive(Debug, Error)]
pub enum GktError {
    /// Shape or dimension mismatch between operands.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// Invalid configuration values.
    #[error("config error: {0}")]
    Config(String),
    /// Malformed or insufficient input data.
    #[error("data error: {0}")]
    Data(String),
    /// Non-finite values or other numeric breakdown.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// Checkpoint container problems (magic, version, shape guard).
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    /// Wire format framing or payload problems.
    #[error("wire format error: {0}")]
    Wire(String),
    /// A message routed to a role that must never receive it.
    #[error("routing violation: {0}")]
    Routing(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GktError>;
