//! Error taxonomy shared by every module; the CLI maps variants to exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain (e.g. `n = 0`).
    #[error("domain: {0}")]
    Domain(String),
    /// A caller-checkable precondition does not hold (e.g. sieve too small).
    #[error("precondition: {0}")]
    Precondition(String),
    /// The input violates a hypothesis the underlying identity requires.
    #[error("hypothesis: {0}")]
    Hypothesis(String),
    /// A configured bound, budget, or interruption limit was hit.
    #[error("resource: {0}")]
    Resource(String),
    /// Checked 64-bit arithmetic would overflow.
    #[error("arithmetic: {0}")]
    Arithmetic(String),
    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("invariant: {0}")]
    Invariant(String),
    /// A file carries the wrong magic string, version, or shape.
    #[error("format: {0}")]
    Format(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
