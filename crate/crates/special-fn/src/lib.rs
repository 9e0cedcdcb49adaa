//! Complex special functions used by the contour and series machinery:
//! gamma and digamma, Kummer's confluent hypergeometric function, the
//! Tricomi function of the second kind, and the Whittaker function with
//! series, Barnes-integral, and small-argument asymptotic routes.

mod error;
mod gamma;
mod kummer;
mod tricomi;
mod whittaker;

pub use error::SpecialFnError;
pub use gamma::{cot_pi, digamma_cx, gamma_cx, ln_gamma_cx, ln_sin_pi, EULER_GAMMA};
pub use kummer::kummer_phi;
pub use tricomi::tricomi_psi;
pub use whittaker::{
    asymptotic_small_z, whittaker_w, whittaker_w_barnes, whittaker_w_polar, AsymptoticValue,
    BarnesQuadrature, WhittakerParams,
};
