//! Error terms E(x), the series f and g, the arithmetic/analytic
//! decomposition, Volterra-equation residuals, and Riesz means.

mod ctx;
mod error;
mod ops;

pub use ctx::{RemainderCtx, Variant};
pub use error::RemainderError;
pub use ops::{
    saw_tooth, DecompositionReport, GValue, RieszPair, TailMode, TruncationPolicy, VolterraReport,
};
