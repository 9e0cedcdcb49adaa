//! Verification of the Mellin-transform identity for the analytic part,
//! the Perron kernel limits, and the Riesz-mean contour identities.

mod error;
mod mellin;
mod perron;
mod riesz_contour;

pub use error::MellinError;
pub use mellin::{mellin_check, mellin_lhs, mellin_rhs, MellinCheck, MellinSide};
pub use perron::{perron_kernel, PerronValue};
pub use riesz_contour::{riesz_contour_check, RieszContourReport};
