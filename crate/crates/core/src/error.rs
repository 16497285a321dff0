use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: every cyclic factor needs modulus >= 2")]
    InvalidModulus(u64),

    #[error("moduli are not an invariant-factor chain: {0} does not divide {1}")]
    DivisibilityViolation(u64, u64),

    #[error("element does not belong to the group: {0}")]
    GroupMismatch(String),

    #[error("carry modulus must be positive")]
    NonPositiveModulus,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("table is not a normalized cocycle")]
    NotACocycle,

    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        limit: u64,
    },

    #[error("cyclotomic sum is not an integer multiple of {0}")]
    NonIntegral(String),

    #[error("{0} is not a perfect square")]
    NonSquare(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid cocycle specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
