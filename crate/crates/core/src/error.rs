use thiserror::Error;

/// Errors raised while constructing or analysing a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("budget exceeded: {what} needs more than {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("generator {0} is a singular matrix")]
    SingularGenerator(usize),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("action is not a homomorphism: phi({b}) * phi({s}) != phi({b}*{s})")]
    NotAHomomorphism { b: usize, s: usize },

    #[error("group of order {order} is too large for this operation (limit {limit})")]
    TooLarge { order: usize, limit: usize },

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("unknown group family: {0}")]
    UnknownFamily(String),

    #[error("no suitable prime below 2^31")]
    SearchExhausted,

    #[error("eigenspace splitting failed: {0}")]
    SplitFailure(String),

    #[error("no degree matches the central character of row {0}")]
    DegreeNotFound(usize),

    #[error("Frobenius-Schur sum of row {0} is not one of 0, |G|, -|G| mod p")]
    IndicatorAmbiguous(usize),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::BudgetExceeded { .. } | Error::TooLarge { .. } => 3,
            Error::SplitFailure(_)
            | Error::DegreeNotFound(_)
            | Error::IndicatorAmbiguous(_)
            | Error::InvariantViolation(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
