use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("need at least two words, got {0}")]
    TooFewWords(usize),

    #[error("empty word set")]
    EmptySet,

    #[error(
        "not an orthogonal array of strength {strength}: columns {columns:?} contain tuple {tuple:?} {count} times (expected {expected})"
    )]
    NotOA {
        strength: usize,
        columns: Vec<usize>,
        tuple: Vec<u16>,
        count: usize,
        expected: usize,
    },

    #[error("infeasible parameters: {0}")]
    ParamsInfeasible(String),

    #[error("parameters out of range: {0}")]
    ParamsOutOfRange(String),

    #[error("kernel on columns {columns:?} has dimension {dimension}, expected a full-support line")]
    KernelDimension { columns: Vec<usize>, dimension: usize },

    #[error("derivation needs t > 1")]
    DerivationUndefined,

    #[error("word {0} contains a zero symbol")]
    NotFullWeight(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no family matches {0}")]
    Unclassifiable(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
