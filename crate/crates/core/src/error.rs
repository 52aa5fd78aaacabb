use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} outside the supported range 1..={1}")]
    VertexCount(usize, usize),
    #[error("vertex {vertex} is not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph must be connected")]
    Disconnected,
    #[error("scale guard exceeded: {0}")]
    ScaleGuard(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCount(usize, usize),
    #[error("labeling is not closed: violating triple ({0}, {1}, {2})")]
    NotClosed(usize, usize, usize),
    #[error("graph is not weakly chordal")]
    NotWeaklyChordal,
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
