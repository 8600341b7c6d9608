use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not 2-connected")]
    Not2Connected,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("wanted {want} internally disjoint paths, only {found} exist")]
    InsufficientConnectivity { want: usize, found: usize },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("tree too small: {0}")]
    TooSmall(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("bag has no admissible vertex")]
    EmptyBag,
    #[error("subtrees {0} and {1} are disjoint")]
    NotPairwiseIntersecting(usize, usize),
    #[error("core capture violated: {0}")]
    CaptureViolation(String),
    #[error("wanted {want} spanning vertices, found {found}")]
    SpanDeficit { want: usize, found: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("host tree has a single node")]
    HostTooSmall,
    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
