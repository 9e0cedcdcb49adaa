//! Shared numerical machinery for the verification crates.
//!
//! The identity checks in this workspace subtract quantities of size ~1e8
//! and assert agreement at 1e-8 or better, which is past what naive f64
//! accumulation delivers. `dd` provides double-double (~31 digit) arithmetic
//! for those hot paths, `sum` provides compensated and deterministic
//! reductions, and `quad` the quadrature rules used on vertical lines and
//! polylines in the complex plane.

pub mod dd;
pub mod par;
pub mod quad;
pub mod sum;

pub use dd::Dd;
