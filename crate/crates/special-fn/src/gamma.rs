//! Complex gamma and digamma via the Lanczos approximation with reflection.

use num_complex::Complex64;

use crate::error::SpecialFnError;

/// Euler's constant C_0.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// Godfrey's 15-term Lanczos coefficients for g = 607/128.
const LANCZOS_G: f64 = 4.742_187_5;
const LANCZOS_C: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_188_6e-5,
    4.652_362_892_704_857_7e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_124_8e-4,
    -2.102_644_417_241_048_7e-4,
    2.174_396_181_152_126_4e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_274e-5,
    -2.619_083_840_158_140_6e-5,
    3.689_918_265_953_162e-6,
];

const LN_2PI_HALF: f64 = 0.918_938_533_204_672_8; // ln(2 pi)/2

fn lanczos_sum(z: Complex64) -> Complex64 {
    // valid for Re z >= 0.5; argument shifted so the series sees z-1
    let mut acc = Complex64::new(LANCZOS_C[0], 0.0);
    for (k, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        acc += c / (z - 1.0 + k as f64);
    }
    acc
}

fn lanczos_sum_deriv(z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        let d = z - 1.0 + k as f64;
        acc -= c / (d * d);
    }
    acc
}

fn near_nonpositive_integer(z: Complex64) -> bool {
    z.re <= 0.5 && z.im.abs() < 1e-12 && (z.re - z.re.round()).abs() < 1e-12 && z.re.round() <= 0.0
}

/// log sin(pi z), stable for large |Im z|. The imaginary part is not
/// normalized to a principal range; callers exponentiate.
pub fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    let i = Complex64::new(0.0, 1.0);
    // sin(pi z) = e^{-i pi z} (1 - e^{2 pi i z}) * (i/2), |e^{2 pi i z}| <= 1
    let w = (2.0 * std::f64::consts::PI * i * z).exp();
    -i * std::f64::consts::PI * z + (Complex64::new(1.0, 0.0) - w).ln() + (i / 2.0).ln()
}

/// cot(pi z), stable for large |Im z|.
pub fn cot_pi(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    if z.im.abs() < 1.0 {
        let w = std::f64::consts::PI * z;
        return w.cos() / w.sin();
    }
    // cot(w) = i (e^{2iw} + 1)/(e^{2iw} - 1); for Im z < 0 use conjugation
    if z.im < 0.0 {
        return cot_pi(z.conj()).conj();
    }
    let e = (2.0 * std::f64::consts::PI * i * z).exp();
    i * (e + 1.0) / (e - 1.0)
}

/// A logarithm of Gamma(z). Accurate relative error ~1e-13; the imaginary
/// part may differ from the principal log-gamma by multiples of 2 pi.
pub fn ln_gamma_cx(z: Complex64) -> Result<Complex64, SpecialFnError> {
    if near_nonpositive_integer(z) {
        return Err(SpecialFnError::Pole(format!("Gamma pole at z = {z}")));
    }
    if z.re >= 0.5 {
        let t = z + (LANCZOS_G - 0.5);
        Ok(LN_2PI_HALF + (z - 0.5) * t.ln() - t + lanczos_sum(z).ln())
    } else if z.re > -40.0 {
        // recurrence lift: ln Gamma(z) = ln Gamma(z + n) - sum ln(z + j);
        // keeps tiny arguments exact-real and avoids reflection noise
        let n = (0.5 - z.re).ceil() as usize + 1;
        let mut logs = Complex64::new(0.0, 0.0);
        for j in 0..n {
            logs += (z + j as f64).ln();
        }
        Ok(ln_gamma_cx(z + n as f64)? - logs)
    } else {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let rest = ln_gamma_cx(Complex64::new(1.0, 0.0) - z)?;
        Ok(std::f64::consts::PI.ln() - ln_sin_pi(z) - rest)
    }
}

/// Gamma(z); pole inputs are rejected.
pub fn gamma_cx(z: Complex64) -> Result<Complex64, SpecialFnError> {
    Ok(ln_gamma_cx(z)?.exp())
}

/// Digamma psi(z) = Gamma'(z)/Gamma(z), by logarithmic differentiation of
/// the same Lanczos scheme, with reflection for Re z < 1/2.
pub fn digamma_cx(z: Complex64) -> Result<Complex64, SpecialFnError> {
    if near_nonpositive_integer(z) {
        return Err(SpecialFnError::Pole(format!("digamma pole at z = {z}")));
    }
    if z.re >= 0.5 {
        let t = z + (LANCZOS_G - 0.5);
        let a = lanczos_sum(z);
        Ok(t.ln() + (z - 0.5) / t - 1.0 + lanczos_sum_deriv(z) / a)
    } else if z.re > -40.0 {
        // psi(z) = psi(z + n) - sum 1/(z + j)
        let n = (0.5 - z.re).ceil() as usize + 1;
        let mut s = Complex64::new(0.0, 0.0);
        for j in 0..n {
            s += 1.0 / (z + j as f64);
        }
        Ok(digamma_cx(z + n as f64)? - s)
    } else {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        let rest = digamma_cx(Complex64::new(1.0, 0.0) - z)?;
        Ok(rest - std::f64::consts::PI * cot_pi(z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_factorials() {
        assert!((gamma_cx(c(5.0, 0.0)).unwrap() - c(24.0, 0.0)).norm() < 1e-12);
        assert!((gamma_cx(c(1.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-14);
        assert!((gamma_cx(c(0.5, 0.0)).unwrap().re - std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn reflection_identity() {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z) at z = 0.3 + 0.2i, 1e-12
        let z = c(0.3, 0.2);
        let lhs = gamma_cx(z).unwrap() * gamma_cx(c(1.0, 0.0) - z).unwrap();
        let rhs = std::f64::consts::PI / (std::f64::consts::PI * z).sin();
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-12);
    }

    #[test]
    fn gamma_reference_value() {
        // mpmath: gamma(0.3+0.2i) = 1.9803581728234425 - 1.4145760083733033i
        let v = gamma_cx(c(0.3, 0.2)).unwrap();
        assert!((v - c(1.980_358_172_823_442_5, -1.414_576_008_373_303_3)).norm() < 1e-12);
    }

    #[test]
    fn gamma_large_imaginary_is_finite() {
        let v = gamma_cx(c(-0.25, 60.0)).unwrap();
        assert!(v.norm() > 0.0 && v.norm().is_finite());
        let lg = ln_gamma_cx(c(-0.25, 400.0)).unwrap();
        assert!(lg.re.is_finite());
    }

    #[test]
    fn digamma_euler_constant() {
        // oracle: C_0 from the harmonic sum with Euler-Maclaurin correction
        let n = 100.0f64;
        let mut h = 0.0;
        for k in 1..=100u64 {
            h += 1.0 / k as f64;
        }
        let gamma_oracle =
            h - n.ln() - 1.0 / (2.0 * n) + 1.0 / (12.0 * n * n) - 1.0 / (120.0 * n.powi(4));
        assert!((gamma_oracle - EULER_GAMMA).abs() < 1e-13);

        let v = digamma_cx(c(1.0, 0.0)).unwrap();
        assert!((v.re + gamma_oracle).abs() < 1e-12, "psi(1) = {}", v.re);
        assert!(v.im.abs() < 1e-14);
        // psi(2) = 1 - C_0
        let v2 = digamma_cx(c(2.0, 0.0)).unwrap();
        assert!((v2.re - 0.422_784_335_098_467_14).abs() < 1e-12);
    }

    #[test]
    fn digamma_recurrence() {
        // psi(s+1) = psi(s) + 1/s
        for &s in &[c(0.3, 0.4), c(-1.7, 0.9), c(2.5, -3.0)] {
            let lhs = digamma_cx(s + 1.0).unwrap();
            let rhs = digamma_cx(s).unwrap() + 1.0 / s;
            assert!((lhs - rhs).norm() < 1e-11, "s = {s}");
        }
    }

    #[test]
    fn poles_rejected() {
        assert!(gamma_cx(c(0.0, 0.0)).is_err());
        assert!(gamma_cx(c(-3.0, 0.0)).is_err());
        assert!(digamma_cx(c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn conjugate_symmetry() {
        let z = c(1.3, 2.2);
        let a = gamma_cx(z).unwrap();
        let b = gamma_cx(z.conj()).unwrap();
        assert!((a.conj() - b).norm() / a.norm() < 1e-13);
    }
}
