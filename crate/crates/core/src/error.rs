//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, codecs, formula evaluation and
/// the search procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A vertex index or vertex set refers outside the graph.
    #[error("range error: {0}")]
    Range(String),

    /// Malformed input while decoding; `offset` is the byte position.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    /// The request exceeds a configured size cap.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// A search ran out of its node budget before reaching a verdict.
    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
