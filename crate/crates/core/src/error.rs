use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{what} needs at least {min} vertices, got {got}")]
    TooFewVertices {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree is already a path")]
    AlreadyPath,
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid leaf triple: {0}")]
    InvalidTriple(String),
    #[error("pair ({0}, {1}) does not cross the cut")]
    PairNotCrossing(usize, usize),
    #[error("vertex counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("edge counts differ: {0} vs {1}")]
    EdgeCountMismatch(usize, usize),
    #[error("not a permutation of 0..{0}")]
    NotBijection(usize),
    #[error("n = {n} exceeds the search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
