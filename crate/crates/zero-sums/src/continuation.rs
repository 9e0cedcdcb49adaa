//! Analytic continuation of f1 and f1^- through the functional equation:
//! three half-line quadratures, the Whittaker double series, and the
//! remaining quadrature term; then B(z, F) and the end-to-end functional
//! equation residual.

use lfunc_eval::{f_eval, ZeroTable};
use num_complex::Complex64;
use numkit::par::sum_terms_c;
use numkit::quad::integrate_to_inf;
use special_fn::ln_gamma_cx;

use crate::contour::ContourSpec;
use crate::engine::{IdentityResidual, ValueWithErr, ZeroSums};
use crate::error::ZeroSumError;
use crate::phases::{poles_right_of, residue_term, whittaker_block, Phase};

const I: Complex64 = Complex64::new(0.0, 1.0);
const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Cuts for the Whittaker double series: k <= k_cut, n <= n_cut, ordered
/// by (n k, k).
#[derive(Clone, Copy, Debug)]
pub struct SeriesCuts {
    pub k_cut: usize,
    pub n_cut: usize,
}

impl Default for SeriesCuts {
    fn default() -> Self {
        SeriesCuts { k_cut: 2000, n_cut: 600 }
    }
}

struct FeContext {
    q: f64,
    mu: f64,
    /// omega-bar e^{+mu pi i} / ((2 pi)^3 Q i)
    kp: Complex64,
    /// omega-bar e^{-mu pi i} / ((2 pi)^3 Q i)
    km: Complex64,
    two_pi_q2: f64,
}

impl ZeroSums {
    fn fe_context(&self) -> Result<FeContext, ZeroSumError> {
        let fe = self.spec().fe_data().ok_or_else(|| {
            ZeroSumError::Unsupported(format!(
                "{}: continuation needs functional-equation data with (r, lambda) = (1, 1)",
                self.spec().name()
            ))
        })?;
        let q = fe.q_scale;
        let mu = fe.mu_shift;
        let denom = Complex64::new(TWO_PI, 0.0).powi(3) * q * I;
        let om = fe.omega.conj();
        Ok(FeContext {
            q,
            mu,
            kp: om * (I * (mu * std::f64::consts::PI)).exp() / denom,
            km: om * (-I * (mu * std::f64::consts::PI)).exp() / denom,
            two_pi_q2: TWO_PI * q * q,
        })
    }

    /// G(s) = (2 pi Q^2)^s zeta(2-s) Gamma(s-mu) Gamma(s+mu) Gamma(2-s)
    ///        / conj(F(1 - conj(s))).
    fn g_kernel(&self, fe: &FeContext, s: Complex64) -> Complex64 {
        let gammas = ln_gamma_cx(s - fe.mu)
            .and_then(|a| Ok(a + ln_gamma_cx(s + fe.mu)?))
            .and_then(|a| Ok(a + ln_gamma_cx(Complex64::new(2.0, 0.0) - s)?));
        let gammas = match gammas {
            Ok(g) => g,
            Err(_) => return Complex64::new(0.0, 0.0),
        };
        let zeta2s = match lfunc_eval::zeta_cx(Complex64::new(2.0, 0.0) - s, self.cfg()) {
            Ok(v) => v,
            Err(_) => return Complex64::new(0.0, 0.0),
        };
        let fbar = match f_eval(self.spec(), Complex64::new(1.0, 0.0) - s.conj(), self.cfg()) {
            Ok(v) => v.conj(),
            Err(_) => return Complex64::new(0.0, 0.0),
        };
        (s * fe.two_pi_q2.ln() + gammas).exp() * zeta2s / fbar
    }

    /// U(w) = int_a^{a+i inf} G(s) e^{ws} ds (converges for Im w > -3pi/2).
    fn half_line_up(
        &self,
        fe: &FeContext,
        w: Complex64,
        a: f64,
        tol: f64,
    ) -> ValueWithErr {
        let f = |t: f64| {
            let s = Complex64::new(a, t);
            self.g_kernel(fe, s) * (w * s).exp()
        };
        let r = integrate_to_inf(&f, 0.0, 1.0, tol, 4000);
        ValueWithErr { value: I * r.value, err_est: r.err_est }
    }

    /// D(w) = int_{a-i inf}^{a} G(s) e^{ws} ds (converges for Im w < 3pi/2).
    fn half_line_down(
        &self,
        fe: &FeContext,
        w: Complex64,
        a: f64,
        tol: f64,
    ) -> ValueWithErr {
        let f = |t: f64| {
            let s = Complex64::new(a, -t);
            self.g_kernel(fe, s) * (w * s).exp()
        };
        let r = integrate_to_inf(&f, 0.0, 1.0, tol, 4000);
        ValueWithErr { value: I * r.value, err_est: r.err_est }
    }

    /// The Whittaker double series S(phi; z): the value of the full line
    /// integral int_{a-i inf}^{a+i inf} G(s) e^{(z - i phi) s} ds expressed
    /// through blocks and residues, convergent for every z.
    pub fn phase_series(
        &self,
        phase: Phase,
        z: Complex64,
        a: f64,
        cuts: &SeriesCuts,
    ) -> Result<ValueWithErr, ZeroSumError> {
        let fe = self.fe_context()?;
        let mu = fe.mu;
        let poles = poles_right_of(a, mu);
        let k_cut = cuts.k_cut.min(self.mu_f().len().saturating_sub(1));
        let n_cut = cuts.n_cut;

        // pairs ordered by (n k, then k); zero mu_F(k) rows skipped
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for k in 1..=k_cut as u32 {
            if self.mu_f()[k as usize].norm() == 0.0 {
                continue;
            }
            for n in 1..=n_cut as u32 {
                pairs.push((k, n));
            }
        }
        pairs.sort_by_key(|&(k, n)| (n as u64 * k as u64, k));

        let curly = |k: u32, n: u32| -> Result<Complex64, ZeroSumError> {
            let x_scale = fe.two_pi_q2 * (k as u64 * n as u64) as f64;
            let block = whittaker_block(phase, x_scale, z, mu)?;
            let mut res = Complex64::new(0.0, 0.0);
            for &kind in &poles {
                res += residue_term(phase, kind, x_scale, z, mu)?;
            }
            Ok(block - res)
        };

        // deterministic chunked reduction in the fixed pair order
        let value = sum_terms_c(pairs.len(), |i| {
            let (k, n) = pairs[i];
            let c = match curly(k, n) {
                Ok(v) => v,
                Err(_) => Complex64::new(0.0, 0.0),
            };
            self.mu_f()[k as usize].conj() / (k as f64 * (n as f64) * (n as f64))
                * TWO_PI
                * I
                * c
        });

        // tail estimate from the lemma's decay with a fitted constant
        let mut fit = 0.0f64;
        for &(k, n) in pairs.iter().rev().take(64) {
            let nk = (k as u64 * n as u64) as f64;
            if let Ok(c) = curly(k, n) {
                let decay = if mu.abs() < 1e-9 {
                    nk.ln().max(1.0) / nk
                } else {
                    nk.powf(mu - 1.0)
                };
                fit = fit.max(c.norm() / decay);
            }
        }
        let tail = 10.0 * fit * TWO_PI * tail_weight(k_cut as f64, n_cut as f64, mu);
        Ok(ValueWithErr { value, err_est: tail })
    }

    /// Continuation of f1(z, F) valid for Im z > -pi.
    pub fn f1_continuation(
        &self,
        z: Complex64,
        contour: &ContourSpec,
        cuts: &SeriesCuts,
    ) -> Result<ValueWithErr, ZeroSumError> {
        let fe = self.fe_context()?;
        if z.im <= -std::f64::consts::PI {
            return Err(ZeroSumError::HalfPlane(format!(
                "continuation of f1 is valid for Im z > -pi, got {}",
                z.im
            )));
        }
        let a = contour.a;
        let tol = contour.quad_tol;
        let pi = std::f64::consts::PI;
        let u1 = self.half_line_up(&fe, z + I * (1.5 * pi), a, tol);
        let u2 = self.half_line_up(&fe, z - I * (0.5 * pi), a, tol);
        let u3 = self.half_line_up(&fe, z + I * (0.5 * pi), a, tol);
        let s = self.phase_series(Phase::IUpper, z, a, cuts)?;
        let d = self.half_line_down(&fe, z - I * (1.5 * pi), a, tol);
        let value = fe.km * u1.value - fe.kp * u2.value + fe.km * u3.value - fe.kp * s.value
            + fe.kp * d.value;
        let err = (u1.err_est + u2.err_est + u3.err_est + d.err_est) / (TWO_PI.powi(3) * fe.q)
            + s.err_est / (TWO_PI.powi(3) * fe.q);
        Ok(ValueWithErr { value, err_est: err })
    }

    /// Continuation of f1^-(z, F) valid for Im z < pi.
    pub fn f1_minus_continuation(
        &self,
        z: Complex64,
        contour: &ContourSpec,
        cuts: &SeriesCuts,
    ) -> Result<ValueWithErr, ZeroSumError> {
        let fe = self.fe_context()?;
        if z.im >= std::f64::consts::PI {
            return Err(ZeroSumError::HalfPlane(format!(
                "continuation of f1^- is valid for Im z < pi, got {}",
                z.im
            )));
        }
        let a = contour.a;
        let tol = contour.quad_tol;
        let pi = std::f64::consts::PI;
        let s = self.phase_series(Phase::ILower, z, a, cuts)?;
        let u = self.half_line_up(&fe, z + I * (1.5 * pi), a, tol);
        let d2 = self.half_line_down(&fe, z - I * (0.5 * pi), a, tol);
        let d3 = self.half_line_down(&fe, z + I * (0.5 * pi), a, tol);
        let d4 = self.half_line_down(&fe, z - I * (1.5 * pi), a, tol);
        let value = fe.km * s.value - fe.km * u.value - fe.kp * d2.value + fe.km * d3.value
            - fe.kp * d4.value;
        let err = (u.err_est + d2.err_est + d3.err_est + d4.err_est + s.err_est)
            / (TWO_PI.powi(3) * fe.q);
        Ok(ValueWithErr { value, err_est: err })
    }

    /// B(z, F) = (f1 + f1^-)/(2 pi i) - e^{2z}/F(2) from the two
    /// continuations; valid on |Im z| < pi.
    pub fn b_of_f(
        &self,
        z: Complex64,
        contour: &ContourSpec,
        cuts: &SeriesCuts,
    ) -> Result<ValueWithErr, ZeroSumError> {
        if z.im.abs() >= std::f64::consts::PI {
            return Err(ZeroSumError::HalfPlane(format!(
                "B(z, F) assembled on |Im z| < pi, got {}",
                z.im
            )));
        }
        let c1 = self.f1_continuation(z, contour, cuts)?;
        let c2 = self.f1_minus_continuation(z, contour, cuts)?;
        let f2 = self.f_at_two()?;
        let value = (c1.value + c2.value) / (TWO_PI * I) - (2.0 * z).exp() / f2;
        Ok(ValueWithErr {
            value,
            err_est: (c1.err_est + c2.err_est) / TWO_PI,
        })
    }

    /// End-to-end functional-equation residual
    ///   |f(z) + conj(f(conj z)) - B(z, F)|
    /// with f(conj z) realized as B(conj z, F) - f^-(conj z, F). This
    /// composes the conjugation identity with the two-continuation split of
    /// B and therefore also witnesses the reflection property of B.
    pub fn fe_residual(
        &self,
        table: &ZeroTable,
        z: Complex64,
        contour: &ContourSpec,
        cuts: &SeriesCuts,
        t: f64,
    ) -> Result<IdentityResidual, ZeroSumError> {
        if !(z.im > 0.0 && z.im < std::f64::consts::PI) {
            return Err(ZeroSumError::HalfPlane(
                "fe residual needs 0 < Im z < pi".into(),
            ));
        }
        if !self.spec().real_coefficients() {
            return Err(ZeroSumError::Unsupported("fe residual needs real coefficients".into()));
        }
        let f_up = self.f_zero_sum(table, z, t)?;
        let b_conj = self.b_of_f(z.conj(), contour, cuts)?;
        let f_minus = self.f_minus_zero_sum(table, z.conj(), t)?;
        let b_here = self.b_of_f(z, contour, cuts)?;
        let lhs = f_up.value + (b_conj.value - f_minus.value).conj();
        let rhs = b_here.value;
        Ok(IdentityResidual {
            z,
            lhs,
            rhs,
            residual: (lhs - rhs).norm(),
            zeros_used: f_up.zeros_used,
            quad_err: b_conj.err_est + b_here.err_est,
            series_tail: f_up.tail_est + f_minus.tail_est,
        })
    }
}

/// Crude bound for sum over (k, n) outside the cut of tau(k)/(k n^2) times
/// the lemma decay (nk)^{mu-1}.
fn tail_weight(k_cut: f64, n_cut: f64, mu: f64) -> f64 {
    let mu = mu.min(0.75);
    // sum_{k > K} tau(k) k^{mu-2} ~ (ln K + 1) K^{mu-1}/(1-mu), zeta-ish
    // constants for the convergent n part (and symmetrically for n)
    let k_tail = (k_cut.ln() + 1.0) * k_cut.powf(mu - 1.0) / (1.0 - mu) * 2.0;
    let n_tail = n_cut.powf(mu - 2.0) / (2.0 - mu) * 3.0;
    k_tail + n_tail
}
