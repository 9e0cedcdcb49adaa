use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecialFnError {
    #[error("pole: {0}")]
    Pole(String),

    #[error("argument on the branch cut: {0}")]
    BranchCut(String),

    #[error("parameter outside the function's domain: {0}")]
    Domain(String),

    #[error("contour cannot separate the pole families: {0}")]
    Contour(String),
}
