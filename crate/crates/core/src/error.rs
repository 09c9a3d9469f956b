use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=64")]
    BadVertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("empty vertex set")]
    EmptySet,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("unsupported graph6 input: {0}")]
    Unsupported(String),
    #[error("graph too large: {0}")]
    TooLarge(String),
    #[error("vertex connectivity is {0}, expected exactly 2")]
    NotExactlyTwoConnected(usize),
    #[error("invalid cut or component: {0}")]
    InvalidCut(String),
    #[error("analysis does not match graph: {0}")]
    MismatchedAnalysis(String),
    #[error("invalid construction parameters: {0}")]
    InvalidParams(String),
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
    #[error("corpus error: {0}")]
    Corpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
