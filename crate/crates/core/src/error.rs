use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable x{index} is out of range for a ring in {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("polynomial involves variables other than {allowed}")]
    UnexpectedVariable { allowed: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("maps are not mutually inverse")]
    NotInverse,

    #[error("enumeration guard: {0}")]
    Guard(String),

    /// A consistency check that the theory guarantees has failed.
    #[error("consistency failure: {0}")]
    RedFlag(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
