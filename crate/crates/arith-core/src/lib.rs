//! Sieved arithmetic functions, real Dirichlet characters, polynomial Euler
//! product specifications, and the coefficient sequences derived from them.

mod character;
mod coeff;
mod constant;
mod error;
mod kronecker;
mod sieve;
mod spec;

pub use character::RealCharacter;
pub use coeff::{
    aF_coeff, alpha_coeff, assoc_totient, g_coeff, gamma_p, mu_F_coeff, CoefficientTable,
};
pub use constant::{c_of_f, CValue};
pub use error::ArithError;
pub use kronecker::kronecker;
pub use sieve::{for_each_prime, sieve, sieve_with_cap, SieveTables, DEFAULT_SIEVE_CAP};
pub use spec::{EulerProductSpec, Factor, FeData};
