use thiserror::Error;

#[derive(Debug, Error)]
pub enum RemainderError {
    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),

    #[error("x = {x} outside table coverage {limit}")]
    Coverage { x: f64, limit: usize },

    #[error("unsupported spec for this variant: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Arith(#[from] arith_core::ArithError),

    #[error(transparent)]
    Lfunc(#[from] lfunc_eval::LfuncError),
}
