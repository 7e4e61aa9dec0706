use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Vertex indices carried inside errors are 0-based, as everywhere inside the
/// library. The command-line front end translates them when it prints.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("graph has an isolated vertex {0}; neighborhood total domination is undefined")]
    IsolatedVertexInInput(usize),
    #[error("graph has {n} vertices, above the exhaustive search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no set containing the required vertices satisfies the condition")]
    Infeasible,
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),
    #[error("graph is not a proper interval graph")]
    NotProperInterval,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("set is not a neighborhood total dominating set (witness vertex {0})")]
    NotNtd(usize),
    #[error("set is not a dominating set (witness vertex {0})")]
    NotDominating(usize),
    #[error("vertex {vertex} has degree {degree}, above the cap of {cap}")]
    DegreeTooHigh { vertex: usize, degree: usize, cap: usize },
    #[error("no gadget conforms to the contract `{0}`")]
    NoConformingGadget(String),
    #[error("domination chain violated: gamma={gamma}, gamma_nt={gamma_nt}, gamma_t={gamma_t}")]
    ChainViolated {
        gamma: usize,
        gamma_nt: usize,
        gamma_t: usize,
    },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
