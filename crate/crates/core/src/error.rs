use thiserror::Error;

/// Errors produced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("letter `{letter}` is not a generator of {context}")]
    UnknownLetter { letter: char, context: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    #[error("not a polygon quotient: {0}")]
    NotPolygonQuotient(String),

    #[error("edge {0} is a loop and cannot be contracted")]
    LoopContraction(usize),

    #[error("complex is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("homomorphism failed verification: {0}")]
    Unverified(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(message: impl Into<String>) -> Error {
    Error::Precondition(message.into())
}
