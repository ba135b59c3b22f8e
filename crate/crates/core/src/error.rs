use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: {message} at position {position}")]
    Parse {
        what: &'static str,
        position: usize,
        message: String,
    },

    #[error("element is not homogeneous: term {first} has excess {first_excess}, term {second} has excess {second_excess}")]
    NotHomogeneous {
        first: String,
        first_excess: i64,
        second: String,
        second_excess: i64,
    },

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("matrix is not unipotent lower-triangular: {0}")]
    NotUnipotent(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: requested {requested} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("ground sets differ: {left} vs {right} elements")]
    GroundSetMismatch { left: usize, right: usize },
}

impl Error {
    pub(crate) fn parse(what: &'static str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            what,
            position,
            message: message.into(),
        }
    }

    /// Stable machine-greppable code used by the CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::NotHomogeneous { .. } => "E_NOT_HOMOGENEOUS",
            Error::OrderMismatch { .. } => "E_ORDER_MISMATCH",
            Error::NotUnipotent(_) => "E_NOT_UNIPOTENT",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::BoundExceeded { .. } => "E_BOUND",
            Error::GroundSetMismatch { .. } => "E_GROUND_SET",
        }
    }
}
