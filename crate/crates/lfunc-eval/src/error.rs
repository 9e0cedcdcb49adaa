use thiserror::Error;

#[derive(Debug, Error)]
pub enum LfuncError {
    #[error("pole: {0}")]
    Pole(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("zero ordinates too close at index {index}: spacing {spacing:e}")]
    NearMultipleZero { index: usize, spacing: f64 },

    #[error("unsupported spec: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Special(#[from] special_fn::SpecialFnError),

    #[error("io error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
