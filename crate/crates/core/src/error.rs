use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("polynomial vector of degree {degree} does not fit in degree bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("input vector must be nonzero")]
    ZeroVector,

    #[error("input vector must have at least 2 entries, found {0}")]
    TooFewEntries(usize),

    #[error("leading vector of the zero vector is undefined")]
    UndefinedLeadingVector,

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("computation exceeded its deadline")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
