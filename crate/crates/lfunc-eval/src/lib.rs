//! Numerical evaluation of zeta(s), Dirichlet L(s, chi), composite Euler
//! products F(s) and F'(rho), plus zero-table ingestion and grouping
//! heights.

mod error;
mod eval;
mod zeros;

pub use error::LfuncError;
pub use eval::{
    dirichlet_l, f_eval, f_prime_at, hurwitz_zeta, zeta_cx, DerivValue, EvalConfig,
};
pub use zeros::{grouping_heights, is_admissible_height, load_zeros, ZeroTable};
