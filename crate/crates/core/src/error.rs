use thiserror::Error;

use crate::patterns::PatternWitness;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is not chordal (hole {0:?})")]
    NotChordal(Vec<usize>),
    #[error("class violation: {message}")]
    ClassViolation {
        message: String,
        witness: Option<PatternWitness>,
    },
    #[error("oracle cap exceeded: n = {n} > {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("certificate rejected: {}", .0.join("; "))]
    Certificate(Vec<String>),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn violation(message: impl Into<String>) -> Self {
        Error::ClassViolation {
            message: message.into(),
            witness: None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
