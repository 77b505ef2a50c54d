use thiserror::Error;

/// Errors raised while reading instance files or assembling the data model.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("not a cactus: {0}")]
    NotACactus(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// Errors raised by solvers and analysis routines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("instance is infeasible: {0}")]
    Infeasible(String),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("geometric mean requires positive values")]
    NonPositive,
    #[error("empty input")]
    EmptyInput,
    #[error("unsupported: {0}")]
    Unsupported(String),
}
