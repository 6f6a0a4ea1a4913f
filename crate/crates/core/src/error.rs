use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: vertex id {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },

    #[error("graph is disconnected (vertex {unreachable} unreachable from vertex {from})")]
    Disconnected { from: usize, unreachable: usize },

    #[error("source vertex {0} out of range")]
    InvalidSource(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("family would have {requested} vertices, above the cap of {cap}")]
    TooLarge { requested: String, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid orbit partition: {0}")]
    InvalidPartition(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("non-integral value in {0}")]
    NonIntegral(String),

    #[error("no closed form available for {0}")]
    NoClosedForm(String),
}
