use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{what} supports at most {limit} vertices, got {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("{0}")]
    Domain(String),

    #[error("intersection of an empty family is undefined")]
    EmptyFamily,

    #[error("engines disagree on {field}: oracle {oracle}, poly {poly}")]
    EngineMismatch {
        field: &'static str,
        oracle: String,
        poly: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
