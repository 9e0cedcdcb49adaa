//! The zero-sum functions f(z, F) and f^-(z, F), the contour integrals
//! f1, f2, f3 and their mirrors, the Whittaker-series continuations, the
//! residue families, B(z, F), and the identity residuals connecting them.

mod bseries;
mod continuation;
mod contour;
mod engine;
mod error;
mod phases;

pub use bseries::b_zeta_explicit;
pub use continuation::SeriesCuts;
pub use contour::ContourSpec;
pub use engine::{IdentityResidual, ValueWithErr, ZeroSumValue, ZeroSums};
pub use error::ZeroSumError;
pub use phases::{residue_term, whittaker_block, Phase, PoleKind};
