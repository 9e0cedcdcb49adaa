//! The Whittaker function W_{k,mu}(z) by three routes: the confluent
//! hypergeometric series, the Barnes integral, and small-argument
//! asymptotic expansions.

use num_complex::Complex64;

use crate::error::SpecialFnError;
use crate::gamma::{digamma_cx, gamma_cx, ln_gamma_cx, EULER_GAMMA};
use crate::kummer::kummer_phi;
use crate::tricomi::tricomi_psi;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Copy, Debug)]
pub struct WhittakerParams {
    pub k: Complex64,
    pub mu: Complex64,
    pub z: Complex64,
}

impl WhittakerParams {
    pub fn new(k: Complex64, mu: Complex64, z: Complex64) -> Self {
        WhittakerParams { k, mu, z }
    }

    /// The Barnes route additionally requires that neither k + mu + 1/2 nor
    /// k - mu + 1/2 is zero or a positive integer.
    pub fn barnes_admissible(&self) -> bool {
        !is_nonneg_integer(self.k + self.mu + 0.5) && !is_nonneg_integer(self.k - self.mu + 0.5)
    }
}

fn is_nonneg_integer(w: Complex64) -> bool {
    w.im.abs() < 1e-9 && (w.re - w.re.round()).abs() < 1e-9 && w.re.round() >= 0.0
}

fn is_gamma_pole_arg(w: Complex64) -> bool {
    w.im.abs() < 1e-9 && (w.re - w.re.round()).abs() < 1e-9 && w.re.round() <= 0.0
}

/// Gamma(num)/Gamma(den) with the convention 1/Gamma(pole) = 0.
fn gamma_ratio(num: Complex64, den: Complex64) -> Result<Complex64, SpecialFnError> {
    if is_gamma_pole_arg(den) {
        if is_gamma_pole_arg(num) {
            return Err(SpecialFnError::Domain(format!(
                "gamma ratio {num}/{den} is pole over pole"
            )));
        }
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok((ln_gamma_cx(num)? - ln_gamma_cx(den)?).exp())
}

/// W_{k,mu}(z) on the principal branch via
/// z^{mu+1/2} e^{-z/2} Psi(1/2 - k + mu, 2 mu + 1; z).
pub fn whittaker_w(p: &WhittakerParams) -> Result<Complex64, SpecialFnError> {
    let WhittakerParams { k, mu, z } = *p;
    if z.norm() == 0.0 || (z.im == 0.0 && z.re < 0.0) {
        return Err(SpecialFnError::BranchCut(format!(
            "z = {z} not on the principal branch"
        )));
    }
    let psi = tricomi_psi(0.5 - k + mu, mu * 2.0 + 1.0, z)?;
    Ok(z.powc(mu + 0.5) * (-z / 2.0).exp() * psi)
}

/// W_{k,mu} at the point exp(ln_r + i theta), where `theta` is NOT reduced
/// mod 2 pi: this is the analytic continuation along the given angle, needed
/// for arguments with |arg| up to 3 pi / 2. The multivaluedness of W sits
/// entirely in the power factors; the Kummer series is entire.
pub fn whittaker_w_polar(
    k: Complex64,
    mu: Complex64,
    ln_r: f64,
    theta: f64,
) -> Result<Complex64, SpecialFnError> {
    let two_mu = mu * 2.0;
    if two_mu.im.abs() < 1e-9 && (two_mu.re - two_mu.re.round()).abs() < 1e-9 {
        // degenerate pair of exponents: two-sided average in mu
        let e = Complex64::new(1e-6, 0.0);
        let hi = w_polar_direct(k, mu + e, ln_r, theta)?;
        let lo = w_polar_direct(k, mu - e, ln_r, theta)?;
        return Ok((hi + lo) * 0.5);
    }
    w_polar_direct(k, mu, ln_r, theta)
}

fn w_polar_direct(
    k: Complex64,
    mu: Complex64,
    ln_r: f64,
    theta: f64,
) -> Result<Complex64, SpecialFnError> {
    // the point itself (single-valued factors)
    let z = Complex64::new(ln_r, 0.0).exp() * Complex64::new(theta.cos(), theta.sin());
    let log_z = Complex64::new(ln_r, theta);
    let a = gamma_ratio(-two(mu), 0.5 - k - mu)?;
    let b = gamma_ratio(two(mu), 0.5 - k + mu)?;
    let t1 = a * ((mu + 0.5) * log_z).exp() * kummer_phi(0.5 - k + mu, ONE + two(mu), z)?;
    let t2 = b * ((0.5 - mu) * log_z).exp() * kummer_phi(0.5 - k - mu, ONE - two(mu), z)?;
    Ok((-z / 2.0).exp() * (t1 + t2))
}

fn two(w: Complex64) -> Complex64 {
    w * 2.0
}

/// Quadrature controls for the Barnes route.
#[derive(Clone, Copy, Debug)]
pub struct BarnesQuadrature {
    /// Abscissa of the vertical line; chosen automatically when None.
    pub c: Option<f64>,
    /// Trapezoid step along the line.
    pub step: f64,
    /// Hard cap on the integration height; decay-based when None.
    pub height_cut: Option<f64>,
}

impl Default for BarnesQuadrature {
    fn default() -> Self {
        BarnesQuadrature { c: None, step: 0.05, height_cut: None }
    }
}

/// W_{k,mu}(z) from the Barnes integral
///   e^{-z/2} z^k / (2 pi i) int Gamma(s) Gamma(-s-k-mu+1/2)
///   Gamma(-s-k+mu+1/2) / (Gamma(-k-mu+1/2) Gamma(-k+mu+1/2)) z^s ds
/// on a vertical line separating the poles of Gamma(s) from the others.
/// When no straight line separates them, the line is placed at c > 0 and
/// the crossed simple poles are restored by explicit residues.
///
/// Returns the value and an estimated quadrature error.
pub fn whittaker_w_barnes(
    p: &WhittakerParams,
    quad: &BarnesQuadrature,
) -> Result<(Complex64, f64), SpecialFnError> {
    let WhittakerParams { k, mu, z } = *p;
    if z.norm() == 0.0 {
        return Err(SpecialFnError::BranchCut("z = 0".into()));
    }
    if !p.barnes_admissible() {
        return Err(SpecialFnError::Domain(
            "k +- mu + 1/2 is zero or a positive integer".into(),
        ));
    }
    let log_z = z.ln();

    // right pole families: s = 1/2 - k -+ mu + m, m >= 0
    let base1 = 0.5 - k - mu;
    let base2 = 0.5 - k + mu;

    // the trapezoid accuracy is set by the distance from the line to the
    // nearest pole of ANY family, so place c in the widest gap among the
    // pole real parts in (0, ...]; right poles left of c get residues
    let (c, gap_half) = match quad.c {
        Some(c) => {
            if c <= 0.0 {
                return Err(SpecialFnError::Contour(
                    "line abscissa must be positive".into(),
                ));
            }
            (c, 0.25)
        }
        None => {
            let mut marks: Vec<f64> = vec![0.0];
            for base in [base1.re, base2.re] {
                let mut m = 0;
                loop {
                    let x = base + m as f64;
                    if x > 6.0 {
                        break;
                    }
                    if x > 0.0 {
                        marks.push(x);
                    }
                    m += 1;
                }
            }
            // both families entirely right of the window: a plain line works
            if marks.len() == 1 {
                marks.push(base1.re.min(base2.re).min(6.5));
            }
            marks.sort_by(|a, b| a.partial_cmp(b).unwrap());
            marks.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
            let mut best = (0.5 * (marks[0] + marks[1]), 0.5 * (marks[1] - marks[0]));
            for w in marks.windows(2) {
                let half = 0.5 * (w[1] - w[0]);
                if half > best.1 {
                    best = (0.5 * (w[0] + w[1]), half);
                }
            }
            best
        }
    };
    // step small enough that pole-induced aliasing stays below ~1e-12
    let h_cap = 0.2 * gap_half;

    // poles of the right families crossed by the straight line at c
    let mut crossed: Vec<Complex64> = Vec::new();
    for (base, other_gamma_shift) in [(base1, two(mu)), (base2, -two(mu))] {
        let mut m = 0u32;
        loop {
            let s0 = base + m as f64;
            if s0.re >= c {
                break;
            }
            if (s0.re - c).abs() < 1e-6 {
                return Err(SpecialFnError::Contour(format!(
                    "pole at {s0} lies on the line Re s = {c}"
                )));
            }
            // collision with the other right family -> double pole (mu
            // degenerate); collision with Gamma(s) poles also degenerate
            if is_gamma_pole_arg(other_gamma_shift - m as f64) || is_gamma_pole_arg(s0) {
                return Err(SpecialFnError::Contour(format!(
                    "crossed pole at {s0} collides with another pole family"
                )));
            }
            // residue of the integrand at s0
            let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
            let fact: f64 = (1..=m).map(|j| j as f64).product::<f64>().max(1.0);
            let res = sign / fact
                * gamma_cx(s0)?
                * gamma_cx(other_gamma_shift - m as f64)?
                * (s0 * log_z).exp();
            crossed.push(res);
            m += 1;
            if m > 64 {
                return Err(SpecialFnError::Contour("too many crossed poles".into()));
            }
        }
    }

    let integrand = |t: f64| -> Complex64 {
        let s = Complex64::new(c, t);
        let g1 = ln_gamma_cx(s).unwrap_or(Complex64::new(f64::NEG_INFINITY, 0.0));
        let g2 = ln_gamma_cx(-s - k - mu + 0.5).unwrap_or(Complex64::new(f64::NEG_INFINITY, 0.0));
        let g3 = ln_gamma_cx(-s - k + mu + 0.5).unwrap_or(Complex64::new(f64::NEG_INFINITY, 0.0));
        (g1 + g2 + g3 + s * log_z).exp()
    };

    // trapezoid with fixed step; height from decay unless capped
    let h = quad.step.min(h_cap);
    let t_max = quad.height_cut.unwrap_or(400.0);
    let mut sum = integrand(0.0);
    let mut sum_coarse = sum;
    let mut peak = sum.norm();
    let mut t = h;
    let mut steps = 0usize;
    while t <= t_max {
        let v = integrand(t) + integrand(-t);
        sum += v;
        if steps % 2 == 1 {
            sum_coarse += v;
        }
        peak = peak.max(v.norm());
        if t > 5.0 && v.norm() < 1e-18 * peak {
            break;
        }
        t += h;
        steps += 1;
    }
    let line_integral = I * sum * h;
    let line_coarse = I * sum_coarse * 2.0 * h;
    let residue_part: Complex64 = -2.0 * std::f64::consts::PI * I * crossed.iter().sum::<Complex64>();
    let total = line_integral + residue_part;

    let denom = gamma_cx(-k - mu + 0.5)? * gamma_cx(-k + mu + 0.5)?;
    let prefactor = (-z / 2.0).exp() * (k * log_z).exp() / (2.0 * std::f64::consts::PI * I) / denom;
    let value = prefactor * total;
    let err = (prefactor * (line_integral - line_coarse)).norm();
    Ok((value, err))
}

/// Leading small-z behaviour of W_{k,mu}(z) with the order of the stated
/// remainder.
#[derive(Clone, Debug)]
pub struct AsymptoticValue {
    pub leading: Complex64,
    /// |z| exponent of the remainder term.
    pub remainder_exponent: f64,
    /// true when the stated remainder carries a |log z| factor
    pub remainder_has_log: bool,
    pub case: &'static str,
}

/// Dispatch on mu per the z -> 0 expansions; valid for |z| <= 0.1.
pub fn asymptotic_small_z(p: &WhittakerParams) -> Result<AsymptoticValue, SpecialFnError> {
    let WhittakerParams { k, mu, z } = *p;
    if z.norm() == 0.0 || z.norm() > 0.1 {
        return Err(SpecialFnError::Domain(format!(
            "|z| = {} outside (0, 0.1]",
            z.norm()
        )));
    }
    let mu_is_zero = mu.norm() < 1e-9;
    let mu_is_half = (mu - 0.5).norm() < 1e-9;

    if mu_is_zero {
        let g = gamma_cx(0.5 - k)?;
        let psi = digamma_cx(0.5 - k)?;
        let leading = -z.powc(Complex64::new(0.5, 0.0)) / g * (z.ln() + psi + 2.0 * EULER_GAMMA);
        return Ok(AsymptoticValue {
            leading,
            remainder_exponent: 1.5,
            remainder_has_log: true,
            case: "mu = 0",
        });
    }
    if mu_is_half {
        let leading = gamma_ratio(ONE, ONE - k)?;
        return Ok(AsymptoticValue {
            leading,
            remainder_exponent: 1.0,
            remainder_has_log: true,
            case: "mu = 1/2",
        });
    }
    if mu.re.abs() < 1e-9 {
        // purely imaginary mu: both powers oscillate, two-term form
        let t1 = gamma_ratio(-two(mu), 0.5 - mu - k)? * z.powc(mu + 0.5);
        let t2 = gamma_ratio(two(mu), mu + 0.5 - k)? * z.powc(-mu + 0.5);
        return Ok(AsymptoticValue {
            leading: t1 + t2,
            remainder_exponent: mu.re + 1.5,
            remainder_has_log: false,
            case: "Re mu = 0, mu != 0",
        });
    }
    let leading = gamma_ratio(two(mu), 0.5 + mu - k)? * z.powc(0.5 - mu);
    if mu.re >= 0.5 {
        Ok(AsymptoticValue {
            leading,
            remainder_exponent: 1.5 - mu.re,
            remainder_has_log: false,
            case: "Re mu >= 1/2, mu != 1/2",
        })
    } else if mu.re > 0.0 {
        Ok(AsymptoticValue {
            leading,
            remainder_exponent: mu.re + 0.5,
            remainder_has_log: false,
            case: "0 < Re mu < 1/2",
        })
    } else {
        Err(SpecialFnError::Domain(format!(
            "Re mu = {} < 0 is not covered by the expansion cases",
            mu.re
        )))
    }
}
