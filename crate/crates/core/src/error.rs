use thiserror::Error;

/// Errors raised by analyses and constructions.
///
/// The variants map onto the CLI exit codes: input problems (1), violated
/// model assumptions (2) and search-capacity limits (3).
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("self-loop: {0}")]
    SelfLoop(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid vertex metadata: {0}")]
    Metadata(String),

    #[error("unknown vertex: {0}")]
    UnknownVertex(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("model violation: {0}")]
    ModelViolation(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("internal invariant broken: {0}")]
    Invariant(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ModelViolation(_) | Error::Invariant(_) => 2,
            Error::Capacity(_) => 3,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
