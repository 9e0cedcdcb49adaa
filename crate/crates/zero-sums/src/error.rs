use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZeroSumError {
    #[error("contour invariant violated: {0}")]
    Contour(String),

    #[error("z = {z} within {dist:e} of the pole at log {n}")]
    PoleProximity { z: num_complex::Complex64, n: u64, dist: f64 },

    #[error("grouping height {0} is not admissible for this table")]
    InadmissibleHeight(f64),

    #[error("half-plane violated: {0}")]
    HalfPlane(String),

    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),

    #[error("unsupported spec: {0}")]
    Unsupported(String),

    #[error("branch violated: {0}")]
    Branch(String),

    #[error(transparent)]
    Arith(#[from] arith_core::ArithError),

    #[error(transparent)]
    Lfunc(#[from] lfunc_eval::LfuncError),

    #[error(transparent)]
    Special(#[from] special_fn::SpecialFnError),
}
