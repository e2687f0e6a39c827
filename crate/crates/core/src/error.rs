use thiserror::Error;

use crate::lie::Violation;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("algebras are defined over different fields")]
    FieldMismatch,

    #[error("graph undefined for abelian algebras")]
    AbelianAlgebra,

    #[error("Lie axiom violated: {0}")]
    Axiom(Violation),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("not computed: {what} needs {size}, guard is {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
