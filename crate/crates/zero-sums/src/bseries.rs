//! The explicit double series for B(z) in the Riemann zeta case:
//!   B(z) = -(6/pi^2) e^{2z} + (1/2 pi^2) sum_{k,n} mu(k)/(n^2 k)
//!          [ 1/(nk e^z - 1)^2 + 2/(nk e^z - 1)
//!          + 1/(nk e^z + 1)^2 - 2/(nk e^z + 1) ],
//! meromorphic with double poles at z = -log(nk).

use arith_core::sieve;
use num_complex::Complex64;
use numkit::sum::NeumaierC;

use crate::error::ZeroSumError;

/// Evaluate the explicit series with cut k, n <= cut. The bracket behaves
/// like 6/(nk e^z)^2 + O((nk)^{-4}), so the dominant part of the tail is
/// closed with the zeta constants; the remainder is O(cut^{-3}).
pub fn b_zeta_explicit(z: Complex64, cut: usize) -> Result<Complex64, ZeroSumError> {
    let tables = sieve(cut)?;
    let ez = z.exp();
    let one = Complex64::new(1.0, 0.0);

    let mut acc = NeumaierC::new();
    let mut s3 = 0.0f64; // sum mu(k)/k^3 partial
    let mut s4 = 0.0f64; // sum 1/n^4 partial
    for k in 1..=cut {
        let mk = tables.mobius(k);
        if mk == 0 {
            continue;
        }
        let mkf = mk as f64;
        s3 += mkf / (k as f64).powi(3);
        for n in 1..=cut {
            let w = ez * (n as f64 * k as f64);
            let dm = w - one;
            let dp = w + one;
            if dm.norm() < 1e-6 {
                return Err(ZeroSumError::PoleProximity {
                    z,
                    n: (n * k) as u64,
                    dist: dm.norm(),
                });
            }
            let bracket = one / (dm * dm) + 2.0 / dm + one / (dp * dp) - 2.0 / dp;
            acc.add(bracket * (mkf / (n as f64 * n as f64 * k as f64)));
        }
    }
    for n in 1..=cut {
        s4 += 1.0 / (n as f64).powi(4);
    }
    // closure of the 6/(nk e^z)^2 part of the bracket beyond the cut:
    // (1/2pi^2) sum' mu(k)/(n^2 k) 6 e^{-2z}/(nk)^2
    //   = (3 e^{-2z}/pi^2) (1/zeta(3) zeta(4) - S3 S4)
    let zeta3 = 1.202_056_903_159_594_3;
    let zeta4 = std::f64::consts::PI.powi(4) / 90.0;
    let closure = 3.0 * (-2.0 * z).exp() / std::f64::consts::PI.powi(2)
        * (zeta4 / zeta3 - s3 * s4);

    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    Ok(-(6.0 / pi2) * (2.0 * z).exp() + acc.total() / (2.0 * pi2) + closure)
}
