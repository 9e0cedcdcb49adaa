use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("sieve limit {requested} exceeds capacity cap {cap}")]
    CapacityExceeded { requested: usize, cap: usize },

    #[error("Kronecker symbol (a|n) requires n != 0")]
    ZeroModulus,

    #[error("invalid real character: {0}")]
    InvalidCharacter(String),

    #[error("degenerate Euler product: {0}")]
    DegenerateSpec(String),

    #[error("truncation insufficient: achieved bound {achieved:e}, requested {requested:e}")]
    TruncationInsufficient { achieved: f64, requested: f64 },

    #[error("index {n} outside table limit {limit}")]
    IndexOutOfRange { n: u64, limit: u64 },
}
