use thiserror::Error;

use crate::exponent::ExponentVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error(
        "exponent overflow (entries are capped at {})",
        crate::exponent::MAX_EXPONENT
    )]
    Overflow,

    #[error("power index must be at least 1")]
    ZeroPower,

    #[error("{0} ideal is not allowed here")]
    DegenerateIdeal(&'static str),

    #[error("the zero exponent vector is not allowed here")]
    ZeroVector,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("minimal element {gamma:?} touches the search box boundary; enlarge the box")]
    BoxBoundary { gamma: ExponentVector },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("{element:?} is not in the radical of the ideal")]
    NotInRadical { element: ExponentVector },

    #[error("no failing n found for n <= {limit}")]
    NoFailingN { limit: u64 },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("staircase rendering needs extent at least {required:?}")]
    ExtentTooSmall { required: ExponentVector },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input text or arguments, as opposed
    /// to well-formed ideals outside a routine's hypotheses.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::UnknownVariable { .. }
                | Error::InvalidArgument(_)
                | Error::ZeroDimension
                | Error::ZeroPower
        )
    }
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}
