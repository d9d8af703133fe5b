use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The channel is outside the regime an operation is stated for.
    #[error("regime precondition violated: {0}")]
    Precondition(String),

    #[error("region is unbounded")]
    Unbounded,

    #[error("region is empty")]
    Empty,

    #[error("point set is lower-dimensional; 3-D hull undefined")]
    Degenerate,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("Fourier-Motzkin row cap exceeded ({rows} > {cap})")]
    RowCap { rows: usize, cap: usize },

    #[error("missing mutual-information term {0}")]
    MissingTerm(String),

    #[error("joint distribution has {cells} cells, above the limit of {limit}")]
    TooLarge { cells: usize, limit: usize },

    #[error("degenerate objective: {0}")]
    DegenerateObjective(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
