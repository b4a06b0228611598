use std::fmt;

/// Errors raised by the library. Budget overruns are reported here only when
/// an operation cannot return a partial result with a status flag instead.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {k} is not coprime to {n}")]
    NonCoprime { k: i64, n: u64 },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("alphabet mismatch: {0}")]
    Alphabet(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

/// Coarse classification used for exit codes and structured output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Budget,
    Input,
    Falsified,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BudgetExceeded(_) => ErrorKind::Budget,
            Error::Inconsistent(_) => ErrorKind::Falsified,
            _ => ErrorKind::Input,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::NonCoprime { .. } => "non_coprime",
            Error::BudgetExceeded(_) => "budget_exceeded",
            Error::UnknownCatalog(_) => "unknown_catalog",
            Error::Parse(_) => "parse",
            Error::UnknownSymbol(_) => "unknown_symbol",
            Error::Arity(_) => "arity_mismatch",
            Error::Alphabet(_) => "alphabet_mismatch",
            Error::Invalid(_) => "invalid_input",
            Error::Precondition(_) => "precondition",
            Error::Inconsistent(_) => "inconsistent",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ErrorKind::Budget => "budget",
            ErrorKind::Input => "input",
            ErrorKind::Falsified => "falsified",
        };
        f.write_str(s)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
