use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("window length {n} out of range for sequence of length {len}")]
    WindowLength { n: usize, len: usize },

    #[error("order {n} exceeds capacity (maximum {max})")]
    Capacity { n: usize, max: usize },

    #[error("order {n} below minimum {min}")]
    OrderTooSmall { n: usize, min: usize },

    #[error("sequence is unbalanced ({ones} ones, {zeros} zeros)")]
    Unbalanced { ones: usize, zeros: usize },

    #[error("greedy construction stopped after {emitted} bits, expected {expected}")]
    ConstructionFailure { emitted: usize, expected: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),

    #[error("integer overflow computing {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
