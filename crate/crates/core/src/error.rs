use thiserror::Error;

/// Errors produced by the library. Every fallible operation returns one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex id {id} out of range for graph of order {n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operation would disconnect the graph")]
    WouldDisconnect,
    #[error("empty vertex set")]
    EmptySet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {message}")]
    Ingest { line: usize, message: String },
    #[error("mixed orders in graph stream: expected {expected}, found {found}")]
    MixedOrders { expected: usize, found: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("empty graph source")]
    EmptySource,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
