//! The four phase-tagged residue families and the Whittaker block.
//!
//! All four families share one implementation: the phase angle phi fixes
//! the exponential shift e^{(z - i phi) s} of the inner integrand
//!   e^{s (log X + z - i phi)} Gamma(s - mu) Gamma(s + mu) Gamma(2 - s),
//! X = 2 pi n k Q^2, and the Whittaker block carries the argument
//! e^{i phi - z} / X on the branch of angle phi - Im z.

use num_complex::Complex64;
use special_fn::{digamma_cx, gamma_cx, whittaker_w_polar, EULER_GAMMA};

use crate::error::ZeroSumError;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Phase selector. The angle is the phi of the Whittaker argument
/// e^{i phi - z}; the residue shift is e^{(z - i phi) s0}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    /// phi = +3 pi/2: the upper continuation series (first family)
    IUpper,
    /// phi = -3 pi/2: the lower mirror (second family)
    ILower,
    /// phi = +pi/2: the first cross term (third family)
    AUpper,
    /// phi = -pi/2: the second cross term (fourth family)
    ALower,
}

impl Phase {
    pub fn angle(self) -> f64 {
        match self {
            Phase::IUpper => 1.5 * std::f64::consts::PI,
            Phase::ILower => -1.5 * std::f64::consts::PI,
            Phase::AUpper => 0.5 * std::f64::consts::PI,
            Phase::ALower => -0.5 * std::f64::consts::PI,
        }
    }

    pub const ALL: [Phase; 4] = [Phase::IUpper, Phase::ILower, Phase::AUpper, Phase::ALower];
}

/// Which pole of the inner integrand the residue belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleKind {
    /// simple pole at s = mu - m1 (mu not 0 or 1/2)
    MuMinus { m1: u32 },
    /// simple pole at s = -mu - m2
    MuPlusNeg { m2: u32 },
    /// double pole at s = -m for mu = 0
    DoubleInt { m: u32 },
    /// double pole at s = 1/2 - m for mu = 1/2
    DoubleHalf { m: u32 },
}

fn factorial(m: u32) -> f64 {
    (1..=m).map(|j| j as f64).product::<f64>().max(1.0)
}

fn harmonic(m: u32) -> f64 {
    (1..=m).map(|j| 1.0 / j as f64).sum()
}

/// Closed-form residue of the shifted integrand at the selected pole.
pub fn residue_term(
    phase: Phase,
    kind: PoleKind,
    x_scale: f64,
    z: Complex64,
    mu: f64,
) -> Result<Complex64, ZeroSumError> {
    let shift = z - I * phase.angle();
    let lx = x_scale.ln();
    match kind {
        PoleKind::MuMinus { m1 } => {
            let sgn = if m1 % 2 == 0 { 1.0 } else { -1.0 };
            let g1 = gamma_cx(Complex64::new(2.0 * mu - m1 as f64, 0.0))?;
            let g2 = gamma_cx(Complex64::new(2.0 - mu + m1 as f64, 0.0))?;
            let s0 = mu - m1 as f64;
            Ok(sgn / factorial(m1) * g1 * g2 * (s0 * (shift + lx)).exp())
        }
        PoleKind::MuPlusNeg { m2 } => {
            let sgn = if m2 % 2 == 0 { 1.0 } else { -1.0 };
            let g1 = gamma_cx(Complex64::new(-2.0 * mu - m2 as f64, 0.0))?;
            let g2 = gamma_cx(Complex64::new(2.0 + mu + m2 as f64, 0.0))?;
            let s0 = -mu - m2 as f64;
            Ok(sgn / factorial(m2) * g1 * g2 * (s0 * (shift + lx)).exp())
        }
        PoleKind::DoubleInt { m } => {
            // (m+1)/m! e^{-shift m} X^{-m} {log X + shift + H_m - C0 - 1/(m+1)}
            let mf = m as f64;
            let bracket =
                Complex64::new(lx + harmonic(m) - EULER_GAMMA - 1.0 / (mf + 1.0), 0.0) + shift;
            Ok((mf + 1.0) / factorial(m)
                * (-shift * mf).exp()
                * x_scale.powf(-mf)
                * bracket)
        }
        PoleKind::DoubleHalf { m } => {
            let mf = m as f64;
            let g32m = gamma_cx(Complex64::new(1.5 + mf, 0.0))?;
            let psi_a = digamma_cx(Complex64::new(1.5 + mf, 0.0))?;
            let psi_b = digamma_cx(Complex64::new(mf + 1.0, 0.0))?;
            let bracket = (psi_a - 2.0 * psi_b) * mf
                - (Complex64::new(lx, 0.0) + shift) * mf
                + 1.0;
            Ok(g32m / (factorial(m) * factorial(m))
                * ((0.5 - mf) * shift).exp()
                * x_scale.powf(0.5 - mf)
                * bracket)
        }
    }
}

/// Poles of the inner integrand strictly right of Re s = a: exactly those
/// crossed when deforming the line onto the Barnes contour.
pub fn poles_right_of(a: f64, mu: f64) -> Vec<PoleKind> {
    let mut out = Vec::new();
    if mu.abs() < 1e-9 {
        let mut m = 0u32;
        while -(m as f64) > a {
            out.push(PoleKind::DoubleInt { m });
            m += 1;
        }
    } else if (mu - 0.5).abs() < 1e-9 {
        let mut m = 0u32;
        while 0.5 - m as f64 > a {
            out.push(PoleKind::DoubleHalf { m });
            m += 1;
        }
    } else {
        let mut m1 = 0u32;
        while mu - m1 as f64 > a {
            out.push(PoleKind::MuMinus { m1 });
            m1 += 1;
        }
        let mut m2 = 0u32;
        while -mu - m2 as f64 > a {
            out.push(PoleKind::MuPlusNeg { m2 });
            m2 += 1;
        }
    }
    out
}

/// The closed Whittaker block
///   X^{1/2} exp(w/2 + z/2 - i phi/2) Gamma(2-mu) Gamma(2+mu)
///   W_{-3/2, mu}(w),  w = e^{i phi - z} / X
/// with the W argument on the branch of angle phi - Im z.
pub fn whittaker_block(
    phase: Phase,
    x_scale: f64,
    z: Complex64,
    mu: f64,
) -> Result<Complex64, ZeroSumError> {
    let phi = phase.angle();
    let theta = phi - z.im;
    if theta.abs() >= 1.5 * std::f64::consts::PI {
        return Err(ZeroSumError::Branch(format!(
            "W argument angle {theta} outside (-3pi/2, 3pi/2)"
        )));
    }
    let ln_r = -z.re - x_scale.ln();
    let w_point = Complex64::new(ln_r, 0.0).exp() * Complex64::new(theta.cos(), theta.sin());
    let w = whittaker_w_polar(
        Complex64::new(-1.5, 0.0),
        Complex64::new(mu, 0.0),
        ln_r,
        theta,
    )?;
    let g = gamma_cx(Complex64::new(2.0 - mu, 0.0))? * gamma_cx(Complex64::new(2.0 + mu, 0.0))?;
    Ok(x_scale.sqrt() * (w_point / 2.0 + z / 2.0 - I * (phi / 2.0)).exp() * g * w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use numkit::quad::integrate_circle;
    use special_fn::ln_gamma_cx;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Circle-integral oracle: (1/2pi i) contour integral of the inner
    /// integrand around the pole, radius 0.1, 64-point trapezoid.
    fn circle_oracle(kind: PoleKind, phase: Phase, x_scale: f64, z: Complex64, mu: f64) -> Complex64 {
        let s0 = match kind {
            PoleKind::MuMinus { m1 } => c(mu - m1 as f64, 0.0),
            PoleKind::MuPlusNeg { m2 } => c(-mu - m2 as f64, 0.0),
            PoleKind::DoubleInt { m } => c(-(m as f64), 0.0),
            PoleKind::DoubleHalf { m } => c(0.5 - m as f64, 0.0),
        };
        let lambda = c(x_scale.ln(), 0.0) + z - I * phase.angle();
        let f = |s: Complex64| {
            let g = ln_gamma_cx(s - mu).unwrap()
                + ln_gamma_cx(s + mu).unwrap()
                + ln_gamma_cx(c(2.0, 0.0) - s).unwrap();
            (g + s * lambda).exp()
        };
        integrate_circle(&f, s0, 0.1, 64) / (2.0 * std::f64::consts::PI * I)
    }

    #[test]
    fn spec_pinned_residue_value() {
        // mu = 0.3, m1 = 0, first family, X = 2 pi, z = 0:
        // Gamma(0.6) Gamma(1.7) (2 pi)^{0.3} e^{-(3/2) pi i 0.3}
        let x = 2.0 * std::f64::consts::PI;
        let v = residue_term(Phase::IUpper, PoleKind::MuMinus { m1: 0 }, x, c(0.0, 0.0), 0.3)
            .unwrap();
        let expect = gamma_cx(c(0.6, 0.0)).unwrap()
            * gamma_cx(c(1.7, 0.0)).unwrap()
            * x.powf(0.3)
            * (-I * (1.5 * std::f64::consts::PI * 0.3)).exp();
        assert!((v - expect).norm() < 1e-12);
    }

    #[test]
    fn residues_match_circle_oracle() {
        let x = 2.0 * std::f64::consts::PI;
        let z = c(0.3, 0.2);
        for phase in Phase::ALL {
            // generic mu
            for kind in [PoleKind::MuMinus { m1: 0 }, PoleKind::MuMinus { m1: 1 }] {
                let closed = residue_term(phase, kind, x, z, 0.3).unwrap();
                let oracle = circle_oracle(kind, phase, x, z, 0.3);
                assert!(
                    (closed - oracle).norm() < 1e-6 * (1.0 + closed.norm()),
                    "{phase:?} {kind:?}: {closed} vs {oracle}"
                );
            }
            let kind = PoleKind::MuPlusNeg { m2: 0 };
            let closed = residue_term(phase, kind, x, z, 0.3).unwrap();
            let oracle = circle_oracle(kind, phase, x, z, 0.3);
            assert!((closed - oracle).norm() < 1e-6 * (1.0 + closed.norm()));

            // mu = 0 double poles
            for m in [0u32, 1] {
                let kind = PoleKind::DoubleInt { m };
                let closed = residue_term(phase, kind, x, z, 0.0).unwrap();
                let oracle = circle_oracle(kind, phase, x, z, 0.0);
                assert!(
                    (closed - oracle).norm() < 1e-6 * (1.0 + closed.norm()),
                    "{phase:?} m={m}: {closed} vs {oracle}"
                );
            }

            // mu = 1/2 double poles
            for m in [0u32, 1] {
                let kind = PoleKind::DoubleHalf { m };
                let closed = residue_term(phase, kind, x, z, 0.5).unwrap();
                let oracle = circle_oracle(kind, phase, x, z, 0.5);
                assert!(
                    (closed - oracle).norm() < 1e-6 * (1.0 + closed.norm()),
                    "{phase:?} half m={m}: {closed} vs {oracle}"
                );
            }
        }
    }

    #[test]
    fn half_family_m0_closed_form() {
        // Gamma(3/2) e^{(z - 3 pi i/2)/2} X^{1/2} * 1
        let x = 4.0;
        let z = c(0.1, 0.4);
        let v = residue_term(Phase::IUpper, PoleKind::DoubleHalf { m: 0 }, x, z, 0.5).unwrap();
        let expect = gamma_cx(c(1.5, 0.0)).unwrap()
            * ((z - I * (1.5 * std::f64::consts::PI)) * 0.5).exp()
            * x.sqrt();
        assert!((v - expect).norm() < 1e-12);
    }

    #[test]
    fn pole_enumeration_default_a() {
        let a = -0.25;
        assert_eq!(poles_right_of(a, 0.0), vec![PoleKind::DoubleInt { m: 0 }]);
        assert_eq!(poles_right_of(a, 0.5), vec![PoleKind::DoubleHalf { m: 0 }]);
        assert_eq!(poles_right_of(a, 0.3), vec![PoleKind::MuMinus { m1: 0 }]);
        // mu = 0.2 < 1/4 brings the -mu pole inside too
        assert_eq!(
            poles_right_of(a, 0.2),
            vec![PoleKind::MuMinus { m1: 0 }, PoleKind::MuPlusNeg { m2: 0 }]
        );
        // deeper line crosses more
        assert_eq!(
            poles_right_of(-1.1, 0.3),
            vec![
                PoleKind::MuMinus { m1: 0 },
                PoleKind::MuMinus { m1: 1 },
                PoleKind::MuPlusNeg { m2: 0 }
            ]
        );
    }

    #[test]
    fn block_line_integral_identity() {
        // int_{a-i inf}^{a+i inf} e^{s lambda} Gamma(s-mu) Gamma(s+mu)
        // Gamma(2-s) ds = 2 pi i (block - sum residues right of a);
        // checked by direct quadrature at (k, n) = (1, 1)
        let a = -0.25;
        let x_scale = 2.0 * std::f64::consts::PI;
        for (mu, z) in [(0.0, c(0.2, 0.1)), (0.3, c(0.1, 0.5)), (0.5, c(-0.2, 0.3))] {
            let phase = Phase::IUpper;
            let lambda = c(x_scale.ln(), 0.0) + z - I * phase.angle();
            let f = |t: f64| {
                let s = c(a, t);
                let g = ln_gamma_cx(s - mu).unwrap()
                    + ln_gamma_cx(s + mu).unwrap()
                    + ln_gamma_cx(c(2.0, 0.0) - s).unwrap();
                (g + s * lambda).exp() * I
            };
            // direct line quadrature; integrand decays like e^{-(3pi/2-|y-phi|)|t|}
            let up = numkit::quad::integrate_to_inf(&f, 0.0, 2.0, 1e-12, 600);
            let f_down = |t: f64| f(-t);
            let down = numkit::quad::integrate_to_inf(&f_down, 0.0, 2.0, 1e-12, 600);
            let line = up.value + down.value - f(0.0) * 0.0;
            let block = whittaker_block(phase, x_scale, z, mu).unwrap();
            let mut res_sum = Complex64::new(0.0, 0.0);
            for kind in poles_right_of(a, mu) {
                res_sum += residue_term(phase, kind, x_scale, z, mu).unwrap();
            }
            let rhs = 2.0 * std::f64::consts::PI * I * (block - res_sum);
            assert!(
                (line - rhs).norm() < 1e-6 * (1.0 + rhs.norm()),
                "mu={mu} z={z}: {line} vs {rhs} (err {:e})",
                (line - rhs).norm()
            );
        }
    }

    #[test]
    fn block_conjugation_symmetry() {
        // conj(block(phi) at z) = block(-phi) at conj z (real spec data)
        let x_scale = 5.0;
        let z = c(0.3, 0.4);
        let pairs = [(Phase::IUpper, Phase::ILower), (Phase::AUpper, Phase::ALower)];
        for (p_up, p_dn) in pairs {
            for mu in [0.0, 0.3, 0.5] {
                let a = whittaker_block(p_up, x_scale, z, mu).unwrap();
                let b = whittaker_block(p_dn, x_scale, z.conj(), mu).unwrap();
                assert!(
                    (a.conj() - b).norm() < 1e-10 * (1.0 + b.norm()),
                    "{p_up:?} mu={mu}: {} vs {b}",
                    a.conj()
                );
            }
        }
    }

    #[test]
    fn block_decay_slope_matches_lemma() {
        // |block - sum residues| should decay like (nk)^{mu-1} (log factor
        // tolerated at mu = 0); slope over nk in {1e2, 1e3, 1e4}. The rate
        // requires the line left of both m = 0 poles, so a = -0.45 here:
        // with a > -mu the un-subtracted pole at -mu leaves an (nk)^{-mu}
        // term in the bracket.
        for mu in [0.0, 0.3, 0.5] {
            let z = c(0.4, 0.8);
            let mut mags = Vec::new();
            let scales = [1e2, 1e3, 1e4];
            for &nk in &scales {
                let x_scale = 2.0 * std::f64::consts::PI * nk;
                let block = whittaker_block(Phase::IUpper, x_scale, z, mu).unwrap();
                let mut res = Complex64::new(0.0, 0.0);
                for kind in poles_right_of(-0.45, mu) {
                    res += residue_term(Phase::IUpper, kind, x_scale, z, mu).unwrap();
                }
                mags.push((block - res).norm());
            }
            let slope = 0.5
                * ((mags[1] / mags[0]).ln() / (scales[1] / scales[0] as f64).ln()
                    + (mags[2] / mags[1]).ln() / (scales[2] / scales[1] as f64).ln());
            assert!(
                slope <= mu - 1.0 + 0.1,
                "mu={mu}: decay slope {slope} vs {}",
                mu - 1.0
            );
        }
    }
}
