//! Tricomi's confluent hypergeometric function of the second kind.

use num_complex::Complex64;

use crate::error::SpecialFnError;
use crate::gamma::gamma_cx;
use crate::kummer::kummer_phi;

const EPS_GAMMA: f64 = 1e-6;

fn psi_direct(
    alpha: Complex64,
    gamma: Complex64,
    z: Complex64,
) -> Result<Complex64, SpecialFnError> {
    let one = Complex64::new(1.0, 0.0);
    let t1 = gamma_cx(one - gamma)? / gamma_cx(one + alpha - gamma)?
        * kummer_phi(alpha, gamma, z)?;
    let t2 = gamma_cx(gamma - one)? / gamma_cx(alpha)?
        * z.powc(one - gamma)
        * kummer_phi(one + alpha - gamma, Complex64::new(2.0, 0.0) - gamma, z)?;
    Ok(t1 + t2)
}

/// Psi(alpha, gamma; z) on the principal branch (plane cut along the
/// negative real axis). Integer gamma is served by a two-sided
/// eps-perturbation of gamma (the continuation limit exists).
pub fn tricomi_psi(
    alpha: Complex64,
    gamma: Complex64,
    z: Complex64,
) -> Result<Complex64, SpecialFnError> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(SpecialFnError::BranchCut(format!(
            "z = {z} lies on the cut along the negative real axis"
        )));
    }
    // Psi(0, gamma; z) = 1: 1/Gamma(0) = 0 kills the second term
    if alpha.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let integer_gamma =
        gamma.im.abs() < 1e-12 && (gamma.re - gamma.re.round()).abs() < 1e-9;
    if !integer_gamma {
        // 1/Gamma at the alpha poles is an honest zero, not an error
        if is_gamma_pole(alpha) {
            let one = Complex64::new(1.0, 0.0);
            return Ok(gamma_cx(one - gamma)? / gamma_cx(one + alpha - gamma)?
                * kummer_phi(alpha, gamma, z)?);
        }
        if is_gamma_pole(Complex64::new(1.0, 0.0) + alpha - gamma) {
            let one = Complex64::new(1.0, 0.0);
            return Ok(gamma_cx(gamma - one)? / gamma_cx(alpha)?
                * z.powc(one - gamma)
                * kummer_phi(one + alpha - gamma, Complex64::new(2.0, 0.0) - gamma, z)?);
        }
        return psi_direct(alpha, gamma, z);
    }
    let e = Complex64::new(EPS_GAMMA, 0.0);
    let hi = psi_direct(alpha, gamma + e, z)?;
    let lo = psi_direct(alpha, gamma - e, z)?;
    Ok((hi + lo) * 0.5)
}

fn is_gamma_pole(w: Complex64) -> bool {
    w.im.abs() < 1e-12 && w.re <= 0.5 && (w.re - w.re.round()).abs() < 1e-12 && w.re.round() <= 0.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn alpha_zero_is_one() {
        for &(g, z) in &[(c(1.5, 0.0), c(1.0, 1.0)), (c(0.3, 0.2), c(2.0, -0.5))] {
            let v = tricomi_psi(c(0.0, 0.0), g, z).unwrap();
            assert!((v - c(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn reference_value() {
        // mpmath: hyperu(0.5, 1.5, 1+1i)
        let v = tricomi_psi(c(0.5, 0.0), c(1.5, 0.0), c(1.0, 1.0)).unwrap();
        assert!(
            (v - c(0.776_886_987_015_018_6, -0.321_797_126_452_791_3)).norm() < 1e-12,
            "{v}"
        );
    }

    #[test]
    fn branch_cut_rejected() {
        assert!(tricomi_psi(c(0.5, 0.0), c(1.5, 0.0), c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn integer_gamma_limit_is_stable() {
        // compare the eps limit against gamma slightly off-integer
        let a = c(0.7, 0.0);
        let z = c(0.8, 0.4);
        let at_int = tricomi_psi(a, c(2.0, 0.0), z).unwrap();
        let near = tricomi_psi(a, c(2.0 + 1e-4, 0.0), z).unwrap();
        assert!((at_int - near).norm() < 1e-3);
        let nearer = tricomi_psi(a, c(2.0 + 1e-5, 0.0), z).unwrap();
        assert!((at_int - nearer).norm() < (at_int - near).norm());
    }
}
