use thiserror::Error;

#[derive(Debug, Error)]
pub enum MellinError {
    #[error("domain: {0}")]
    Domain(String),

    #[error("tail bound {achieved:e} exceeds tolerance {requested:e}; raise X_cut")]
    TailTooLarge { achieved: f64, requested: f64 },

    #[error(transparent)]
    Remainder(#[from] remainder::RemainderError),

    #[error(transparent)]
    Lfunc(#[from] lfunc_eval::LfuncError),
}
