use thiserror::Error;

/// Errors produced anywhere in the core crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) is already present")]
    EdgePresent(usize, usize),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge-list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("eigensolver did not converge (off-diagonal norm {off_norm:e})")]
    NonConvergence { off_norm: f64 },

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
