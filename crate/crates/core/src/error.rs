use thiserror::Error;

use crate::Rational;

/// Errors produced by map construction and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a map needs at least two breakpoints, got {0}")]
    TooFewPoints(usize),

    #[error("duplicate x-coordinate {x} at breakpoint {index}")]
    DuplicateX { index: usize, x: Rational },

    #[error("x-coordinates not increasing at breakpoint {index}")]
    XNotIncreasing { index: usize },

    #[error("y-coordinates not strictly increasing at breakpoint {index}")]
    YNotIncreasing { index: usize },

    #[error("map must start at (0,0) and end at (1,1), found ({x0},{y0}) .. ({x1},{y1})")]
    BadEndpoints {
        x0: Rational,
        y0: Rational,
        x1: Rational,
        y1: Rational,
    },

    #[error("{value} is outside the domain {domain}")]
    OutOfDomain { value: Rational, domain: &'static str },

    #[error("map is not strictly above the diagonal on (0,1)")]
    NotInF,

    #[error("invalid single-node parameters: {0}")]
    InvalidNodeParameters(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("cannot parse rational {text:?}: {reason}")]
    ParseRational { text: String, reason: String },

    #[error("malformed map document at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("breakpoint {index}: {source}")]
    AtBreakpoint {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        match self {
            Error::Internal(_) => true,
            Error::AtBreakpoint { source, .. } => source.is_internal(),
            _ => false,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
