use thiserror::Error;

/// Errors raised by construction, validation and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc ({tail}, {head}) references a vertex outside 0..{p}")]
    VertexOutOfRange { tail: usize, head: usize, p: usize },

    #[error("vertex {vertex} is outside 0..{p}")]
    UnknownVertex { vertex: usize, p: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("{what}: order {p} exceeds the size limit {limit}")]
    SizeLimit {
        what: &'static str,
        p: usize,
        limit: usize,
    },

    #[error("sequence is not a permutation of the {p} vertices")]
    NotPermutation { p: usize },

    #[error("color {color} at vertex {vertex} is not a positive integer")]
    BadColor { vertex: usize, color: u32 },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("monochromatic directed cycle {cycle:?}")]
    MonochromaticCycle { cycle: Vec<usize> },

    #[error("digraph has a directed cycle {cycle:?}")]
    Cyclic { cycle: Vec<usize> },

    #[error("directed path from {from} to {to} exists: {path:?}")]
    DirectedPath {
        from: usize,
        to: usize,
        path: Vec<usize>,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("bound not applicable: {0}")]
    Inapplicable(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("invalid L-matrix: {0}")]
    InvalidMatrix(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
