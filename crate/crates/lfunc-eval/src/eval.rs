//! Euler-Maclaurin evaluation of Hurwitz zeta, Riemann zeta, Dirichlet
//! L-functions, and product Euler products with derivatives at zeros.

use arith_core::{EulerProductSpec, Factor, RealCharacter};
use num_complex::Complex64;
use numkit::sum::NeumaierC;
use special_fn::{ln_gamma_cx, ln_sin_pi};

use crate::error::LfuncError;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// B_2, B_4, ..., B_30.
const BERNOULLI: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Euler-Maclaurin controls.
#[derive(Clone, Copy, Debug)]
pub struct EvalConfig {
    /// Base number of directly summed terms (grows with |Im s|).
    pub em_terms: usize,
    /// Bernoulli correction order B (even, 2..=30).
    pub bernoulli_order: usize,
    /// Step for numerical derivatives.
    pub derivative_step: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { em_terms: 32, bernoulli_order: 24, derivative_step: 1e-5 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<(), LfuncError> {
        if self.em_terms < 10 {
            return Err(LfuncError::Validation("em_terms must be >= 10".into()));
        }
        if self.bernoulli_order % 2 != 0 || !(2..=30).contains(&self.bernoulli_order) {
            return Err(LfuncError::Validation(
                "bernoulli_order must be even and within 2..=30".into(),
            ));
        }
        if !(self.derivative_step > 0.0) {
            return Err(LfuncError::Validation("derivative_step must be positive".into()));
        }
        Ok(())
    }
}

/// (e^w - 1)/w, stable near w = 0.
fn expm1_over(w: Complex64) -> Complex64 {
    if w.norm() < 0.25 {
        let mut term = ONE;
        let mut acc = ONE;
        for k in 2..=12 {
            term = term * w / k as f64;
            acc += term;
        }
        acc
    } else {
        (w.exp() - 1.0) / w
    }
}

/// zeta(s, a) - 1/(s-1): the Hurwitz zeta with its pole removed, entire in
/// s. Removing the pole termwise lets character combinations cancel it
/// exactly.
fn hurwitz_reg(s: Complex64, a: f64, cfg: &EvalConfig) -> Complex64 {
    let m = cfg.em_terms + (0.75 * s.im.abs()).ceil() as usize;
    let mut acc = NeumaierC::new();
    for n in 0..m {
        acc.add((-s * (n as f64 + a).ln()).exp());
    }
    let ma = m as f64 + a;
    let lma = ma.ln();
    // (ma^{1-s} - 1)/(s-1) = -lma * (e^{(1-s) lma} - 1)/((1-s) lma)
    acc.add(-lma * expm1_over((ONE - s) * lma));
    let ma_pow = (-s * lma).exp();
    acc.add(0.5 * ma_pow);
    // sum_j B_2j/(2j)! s(s+1)...(s+2j-2) ma^{-s-2j+1}
    let mut poch = s;
    let mut fact = 1.0f64;
    let mut pw = ma_pow * ma;
    for j in 1..=(cfg.bernoulli_order / 2) {
        fact *= (2 * j - 1) as f64 * (2 * j) as f64;
        pw /= ma * ma;
        acc.add(BERNOULLI[j - 1] / fact * poch * pw);
        poch *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
    }
    acc.total()
}

/// Hurwitz zeta(s, a) for 0 < a <= 1, s != 1.
pub fn hurwitz_zeta(s: Complex64, a: f64, cfg: &EvalConfig) -> Result<Complex64, LfuncError> {
    if (s - ONE).norm() < 1e-12 {
        return Err(LfuncError::Pole("Hurwitz zeta pole at s = 1".into()));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(LfuncError::Validation(format!("Hurwitz parameter a = {a} outside (0, 1]")));
    }
    Ok(hurwitz_reg(s, a, cfg) + 1.0 / (s - 1.0))
}

/// Riemann zeta via Euler-Maclaurin, reflected for Re s < 0.
pub fn zeta_cx(s: Complex64, cfg: &EvalConfig) -> Result<Complex64, LfuncError> {
    if (s - ONE).norm() < 1e-12 {
        return Err(LfuncError::Pole("zeta pole at s = 1".into()));
    }
    if s.re < 0.0 {
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s), assembled
        // in log space so large |Im s| cannot overflow the sine
        let chi = s * std::f64::consts::LN_2
            + (s - 1.0) * std::f64::consts::PI.ln()
            + ln_sin_pi(s / 2.0)
            + ln_gamma_cx(ONE - s)?;
        return Ok(chi.exp() * zeta_cx(ONE - s, cfg)?);
    }
    Ok(hurwitz_reg(s, 1.0, cfg) + 1.0 / (s - 1.0))
}

/// Dirichlet L(s, chi) for a non-principal real character: entire, built
/// from pole-removed Hurwitz values so s = 1 needs no special casing.
pub fn dirichlet_l(
    s: Complex64,
    chi: &RealCharacter,
    cfg: &EvalConfig,
) -> Result<Complex64, LfuncError> {
    let q = chi.modulus() as f64;
    let mut acc = NeumaierC::new();
    for r in 1..=chi.modulus() {
        let v = chi.value(r as u64);
        if v == 0 {
            continue;
        }
        // the dropped 1/(s-1) terms cancel exactly: sum chi(r) = 0
        acc.add(hurwitz_reg(s, r as f64 / q, cfg) * v as f64);
    }
    Ok((-s * q.ln()).exp() * acc.total())
}

/// F(s) as the product of its primitive factors.
pub fn f_eval(
    spec: &EulerProductSpec,
    s: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64, LfuncError> {
    let factors = spec
        .factors()
        .ok_or_else(|| LfuncError::Unsupported(format!("{} has no factor form", spec.name())))?;
    let mut acc = ONE;
    for f in factors {
        acc *= match f {
            Factor::Zeta => zeta_cx(s, cfg)?,
            Factor::LFunction(chi) => dirichlet_l(s, &chi, cfg)?,
        };
    }
    Ok(acc)
}

/// Derivative with a Richardson error estimate.
#[derive(Clone, Copy, Debug)]
pub struct DerivValue {
    pub value: Complex64,
    pub err_est: f64,
}

/// F'(rho) by Richardson-extrapolated central differences with steps h and
/// h/2 (real direction; F is holomorphic so the direction is irrelevant).
pub fn f_prime_at(
    spec: &EulerProductSpec,
    rho: Complex64,
    cfg: &EvalConfig,
) -> Result<DerivValue, LfuncError> {
    let h = cfg.derivative_step;
    let d = |step: f64| -> Result<Complex64, LfuncError> {
        Ok((f_eval(spec, rho + step, cfg)? - f_eval(spec, rho - step, cfg)?) / (2.0 * step))
    };
    let d1 = d(h)?;
    let d2 = d(h / 2.0)?;
    let value = (d2 * 4.0 - d1) / 3.0;
    Ok(DerivValue { value, err_est: (d2 - d1).norm() / 3.0 })
}
