//! Kummer's confluent hypergeometric function Phi(alpha, gamma; z).

use num_complex::Complex64;

use crate::error::SpecialFnError;

const MAX_TERMS: usize = 2000;

/// Power series sum_{n>=0} (alpha)_n / (gamma)_n z^n / n!, entire in z.
/// Terms are added until |term| < 1e-18 |partial| with a minimum of 10
/// terms; gamma must avoid {0, -1, -2, ...}.
pub fn kummer_phi(
    alpha: Complex64,
    gamma: Complex64,
    z: Complex64,
) -> Result<Complex64, SpecialFnError> {
    if gamma.im == 0.0 && gamma.re <= 0.0 && (gamma.re - gamma.re.round()).abs() < 1e-14 {
        return Err(SpecialFnError::Domain(format!(
            "Kummer gamma parameter {gamma} is a nonpositive integer"
        )));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (alpha + nf) / (gamma + nf) * z / (nf + 1.0);
        sum += term;
        if n >= 9 && term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn at_zero_is_one() {
        let v = kummer_phi(c(0.7, 0.1), c(1.3, 0.0), c(0.0, 0.0)).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn collapses_to_exp() {
        // (1)_n / (1)_n = 1, so Phi(1,1;z) = e^z
        let v = kummer_phi(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((v.re - std::f64::consts::E).abs() < 1e-14);
        let z = c(0.4, -0.9);
        let v2 = kummer_phi(c(1.0, 0.0), c(1.0, 0.0), z).unwrap();
        assert!((v2 - z.exp()).norm() < 1e-14);
    }

    #[test]
    fn reference_value() {
        // mpmath: hyp1f1(0.7, 1.3, 0.5+0.5i)
        let v = kummer_phi(c(0.7, 0.0), c(1.3, 0.0), c(0.5, 0.5)).unwrap();
        assert!((v - c(1.252_488_171_438_584_9, 0.381_996_652_529_482_3)).norm() < 1e-13);
    }

    #[test]
    fn ode_residual_fourth_order_differences() {
        // z u'' + (gamma - z) u' - alpha u = 0 at (0.7, 1.3, 0.5+0.5i)
        let alpha = c(0.7, 0.0);
        let gamma = c(1.3, 0.0);
        let z = c(0.5, 0.5);
        let h = 0.01;
        let u = |dz: f64| kummer_phi(alpha, gamma, z + dz).unwrap();
        let (um2, um1, u0, up1, up2) = (u(-2.0 * h), u(-h), u(0.0), u(h), u(2.0 * h));
        let d1 = (-up2 + up1 * 8.0 - um1 * 8.0 + um2) / (12.0 * h);
        let d2 = (-up2 + up1 * 16.0 - u0 * 30.0 + um1 * 16.0 - um2) / (12.0 * h * h);
        let residual = z * d2 + (gamma - z) * d1 - alpha * u0;
        assert!(residual.norm() < 1e-8, "residual {:e}", residual.norm());
    }

    #[test]
    fn excluded_gamma_rejected() {
        assert!(kummer_phi(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(kummer_phi(c(1.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn random_ode_residuals_in_unit_bidisk() {
        // deterministic pseudo-random admissible parameters
        let mut s = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            (s >> 11) as f64 / (1u64 << 53) as f64
        };
        let h = 0.01;
        for _ in 0..10 {
            let alpha = c(next() * 2.0 - 1.0, next() * 2.0 - 1.0);
            let gamma = c(1.1 + next(), next() * 0.5);
            let z = c(next() - 0.5, next() - 0.5);
            let u = |dz: f64| kummer_phi(alpha, gamma, z + dz).unwrap();
            let (um2, um1, u0, up1, up2) = (u(-2.0 * h), u(-h), u(0.0), u(h), u(2.0 * h));
            let d1 = (-up2 + up1 * 8.0 - um1 * 8.0 + um2) / (12.0 * h);
            let d2 = (-up2 + up1 * 16.0 - u0 * 30.0 + um1 * 16.0 - um2) / (12.0 * h * h);
            let residual = z * d2 + (gamma - z) * d1 - alpha * u0;
            assert!(residual.norm() < 1e-8, "residual {:e}", residual.norm());
        }
    }
}
