use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("variable index {index} out of range for a ring of arity {arity}")]
    VariableIndex { index: usize, arity: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooSmall { target: u32, degree: u32 },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("exponent cap {given} is too small, at least {needed} is required")]
    CapTooSmall { given: u32, needed: u32 },
    #[error("distinguished data requires monomial input: {0}")]
    NotMonomial(String),
    #[error("common zero exists: the generators do not generate the unit ideal")]
    NotZeroFree,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}
