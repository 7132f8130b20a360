use thiserror::Error;

/// Errors raised by the term, word and diagram layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("`{0}` is not a one-variable term built from o")]
    NotCircTerm(String),

    #[error("`{0}` is not a one-variable term built from *")]
    NotStarTerm(String),

    #[error("`{0}` uses more than one variable")]
    MultiVariable(String),

    #[error("expected {expected} sequence entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("term sequences must be nonempty")]
    EmptySequence,

    #[error("index must be at least 1")]
    ZeroIndex,

    #[error("no {law} {direction} redex at position {position}")]
    PatternMismatch {
        law: String,
        direction: String,
        position: String,
    },

    #[error("position {0} is outside the term")]
    BadPosition(String),

    #[error("strand {index} out of range for a diagram with {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },

    #[error("terms are LD-equal; no ordering witness exists")]
    EqualInputs,
}

pub type Result<T> = std::result::Result<T, Error>;
