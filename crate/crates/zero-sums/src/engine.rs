//! Zero sums and the three-part contour decomposition.

use arith_core::{sieve, CoefficientTable, EulerProductSpec};
use lfunc_eval::{f_eval, f_prime_at, is_admissible_height, zeta_cx, EvalConfig, ZeroTable};
use num_complex::Complex64;
use numkit::quad::{integrate_segment, integrate_to_inf};
use numkit::sum::NeumaierC;

use crate::contour::ContourSpec;
use crate::error::ZeroSumError;

const I: Complex64 = Complex64::new(0.0, 1.0);
const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// A value carrying its truncation/quadrature error estimate.
#[derive(Clone, Copy, Debug)]
pub struct ValueWithErr {
    pub value: Complex64,
    pub err_est: f64,
}

/// A zero-sum value with its exponential tail estimate.
#[derive(Clone, Copy, Debug)]
pub struct ZeroSumValue {
    pub value: Complex64,
    pub tail_est: f64,
    pub zeros_used: usize,
}

/// Structured result of one identity check.
#[derive(Clone, Debug)]
pub struct IdentityResidual {
    pub z: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub zeros_used: usize,
    pub quad_err: f64,
    pub series_tail: f64,
}

/// Evaluator for one spec: coefficient tables for the f3 series and the
/// Whittaker double series, plus the L-function evaluation config.
pub struct ZeroSums {
    spec: EulerProductSpec,
    cfg: EvalConfig,
    /// g(n) for the f3 series
    g: Vec<Complex64>,
    /// mu_F(k) for the double series
    mu_f: Vec<Complex64>,
}

impl ZeroSums {
    /// Build tables up to `table_limit` (bounds both the f3 cut and the
    /// double-series k cut).
    pub fn new(spec: &EulerProductSpec, table_limit: usize) -> Result<Self, ZeroSumError> {
        let tables = sieve(table_limit)?;
        let ct = CoefficientTable::build(spec, &tables, table_limit)?;
        Ok(ZeroSums {
            spec: spec.clone(),
            cfg: EvalConfig::default(),
            g: ct.g,
            mu_f: ct.mu_f,
        })
    }

    pub fn spec(&self) -> &EulerProductSpec {
        &self.spec
    }

    pub fn cfg(&self) -> &EvalConfig {
        &self.cfg
    }

    pub(crate) fn mu_f(&self) -> &[Complex64] {
        &self.mu_f
    }

    /// f(z, F) = sum over zeros 0 < gamma < T of e^{rho z} zeta(rho-1)/F'(rho).
    pub fn f_zero_sum(
        &self,
        table: &ZeroTable,
        z: Complex64,
        t: f64,
    ) -> Result<ZeroSumValue, ZeroSumError> {
        if z.im <= 0.0 {
            return Err(ZeroSumError::HalfPlane(format!("Im z = {} must be positive", z.im)));
        }
        if !is_admissible_height(table, t) {
            return Err(ZeroSumError::InadmissibleHeight(t));
        }
        let zeros = table.below(t);
        let mut acc = NeumaierC::new();
        let mut fit_c = 0.0f64;
        for &gamma in zeros {
            let rho = Complex64::new(0.5, gamma);
            let term = (rho * z).exp() * zeta_cx(rho - 1.0, &self.cfg)?
                / f_prime_at(&self.spec, rho, &self.cfg)?.value;
            acc.add(term);
            fit_c = fit_c.max(term.norm() * (gamma * z.im).exp() / gamma.powf(2.5));
        }
        // tail: c int_T^inf u^{2.5} e^{-u y} du ~ c T^{2.5} e^{-T y}/y,
        // with a 10x safety factor on the fitted constant
        let y = z.im;
        let tail = 10.0 * fit_c * t.powf(2.5) * (-t * y).exp() / y * (1.0 + 2.5 / (t * y));
        Ok(ZeroSumValue { value: acc.total(), tail_est: tail, zeros_used: zeros.len() })
    }

    /// f^-(z, F): lower zeros by conjugation of factors (real coefficients).
    pub fn f_minus_zero_sum(
        &self,
        table: &ZeroTable,
        z: Complex64,
        t: f64,
    ) -> Result<ZeroSumValue, ZeroSumError> {
        if z.im >= 0.0 {
            return Err(ZeroSumError::HalfPlane(format!("Im z = {} must be negative", z.im)));
        }
        if !self.spec.real_coefficients() {
            return Err(ZeroSumError::Unsupported(
                "lower zeros by conjugation need real coefficients".into(),
            ));
        }
        if !is_admissible_height(table, t) {
            return Err(ZeroSumError::InadmissibleHeight(t));
        }
        let zeros = table.below(t);
        let mut acc = NeumaierC::new();
        let mut fit_c = 0.0f64;
        for &gamma in zeros {
            let rho = Complex64::new(0.5, gamma);
            let zeta_v = zeta_cx(rho - 1.0, &self.cfg)?.conj();
            let fp = f_prime_at(&self.spec, rho, &self.cfg)?.value.conj();
            let term = (rho.conj() * z).exp() * zeta_v / fp;
            acc.add(term);
            fit_c = fit_c.max(term.norm() * (-gamma * z.im).exp() / gamma.powf(2.5));
        }
        let y = -z.im;
        let tail = 10.0 * fit_c * t.powf(2.5) * (-t * y).exp() / y * (1.0 + 2.5 / (t * y));
        Ok(ZeroSumValue { value: acc.total(), tail_est: tail, zeros_used: zeros.len() })
    }

    /// zeta(s-1)/F(s) e^{s z} at s.
    fn integrand(&self, s: Complex64, z: Complex64) -> Result<Complex64, ZeroSumError> {
        Ok(zeta_cx(s - 1.0, &self.cfg)? / f_eval(&self.spec, s, &self.cfg)? * (s * z).exp())
    }

    /// f1(z, F) = int_{a+i inf}^{a} zeta(s-1)/F(s) e^{sz} ds (Im z > 0).
    pub fn f1_integral(
        &self,
        z: Complex64,
        contour: &ContourSpec,
    ) -> Result<ValueWithErr, ZeroSumError> {
        if z.im <= 0.0 {
            return Err(ZeroSumError::HalfPlane("f1 needs Im z > 0".into()));
        }
        let a = contour.a;
        let f = |t: f64| {
            self.integrand(Complex64::new(a, t), z)
                .unwrap_or_else(|_| Complex64::new(0.0, 0.0))
        };
        let r = integrate_to_inf(&f, 0.0, 2.0, contour.quad_tol, 2000);
        // f1 = -i * int_0^inf
        Ok(ValueWithErr { value: -I * r.value, err_est: r.err_est })
    }

    /// f1^-(z, F) = int_{a}^{a-i inf} (Im z < 0).
    pub fn f1_minus_integral(
        &self,
        z: Complex64,
        contour: &ContourSpec,
    ) -> Result<ValueWithErr, ZeroSumError> {
        if z.im >= 0.0 {
            return Err(ZeroSumError::HalfPlane("f1^- needs Im z < 0".into()));
        }
        let a = contour.a;
        let f = |t: f64| {
            self.integrand(Complex64::new(a, -t), z)
                .unwrap_or_else(|_| Complex64::new(0.0, 0.0))
        };
        let r = integrate_to_inf(&f, 0.0, 2.0, contour.quad_tol, 2000);
        Ok(ValueWithErr { value: -I * r.value, err_est: r.err_est })
    }

    /// f2(z, F): the polyline a -> (a+b)/2 + i alpha -> b.
    pub fn f2_integral(
        &self,
        z: Complex64,
        contour: &ContourSpec,
    ) -> Result<ValueWithErr, ZeroSumError> {
        let mid = Complex64::new(0.5 * (contour.a + contour.b), contour.alpha);
        let f = |s: Complex64| {
            self.integrand(s, z)
                .unwrap_or_else(|_| Complex64::new(0.0, 0.0))
        };
        let r1 = integrate_segment(&f, Complex64::new(contour.a, 0.0), mid, contour.quad_tol);
        let r2 = integrate_segment(&f, mid, Complex64::new(contour.b, 0.0), contour.quad_tol);
        Ok(ValueWithErr { value: r1.value + r2.value, err_est: r1.err_est + r2.err_est })
    }

    /// f2^-(z, F): the mirrored polyline traversed from b back to a.
    pub fn f2_minus_integral(
        &self,
        z: Complex64,
        contour: &ContourSpec,
    ) -> Result<ValueWithErr, ZeroSumError> {
        let mid = Complex64::new(0.5 * (contour.a + contour.b), -contour.alpha);
        let f = |s: Complex64| {
            self.integrand(s, z)
                .unwrap_or_else(|_| Complex64::new(0.0, 0.0))
        };
        let r1 = integrate_segment(&f, Complex64::new(contour.b, 0.0), mid, contour.quad_tol);
        let r2 = integrate_segment(&f, mid, Complex64::new(contour.a, 0.0), contour.quad_tol);
        Ok(ValueWithErr { value: r1.value + r2.value, err_est: r1.err_est + r2.err_est })
    }

    /// f3(z, F) = -e^{bz} sum g(n) / (n^b (z - log n)).
    pub fn f3_series(
        &self,
        z: Complex64,
        b: f64,
        n_terms: usize,
    ) -> Result<ValueWithErr, ZeroSumError> {
        let n_used = n_terms.min(self.g.len().saturating_sub(1));
        // pole proximity: z near log n
        if z.im.abs() < 1e-6 && z.re > -0.5 {
            let centre = z.re.exp().round() as i64;
            for n in (centre - 2).max(1)..=(centre + 2).min(n_used as i64) {
                let d = (z - (n as f64).ln()).norm();
                if d < 1e-6 {
                    return Err(ZeroSumError::PoleProximity { z, n: n as u64, dist: d });
                }
            }
        }
        let mut acc = NeumaierC::new();
        let mut fit_g = 0.0f64;
        for n in 1..=n_used {
            let nf = n as f64;
            let term = self.g[n] / (nf.powf(b) * (z - nf.ln()));
            acc.add(term);
            if n * 10 >= n_used {
                fit_g = fit_g.max(self.g[n].norm() / nf.powf(1.1));
            }
        }
        let value = -(z * b).exp() * acc.total();
        // tail: |g(n)| <= fit 10 n^{1.1}; distance from z to [log N, inf)
        let ln_n = (n_used.max(2) as f64).ln();
        let dist = if z.re <= ln_n {
            (z - ln_n).norm()
        } else {
            z.im.abs()
        };
        let tail = 10.0 * fit_g * (n_used as f64).powf(2.1 - b) / ((b - 2.1) * dist.max(1e-12))
            * (z * b).exp().norm();
        Ok(ValueWithErr { value, err_est: tail })
    }

    /// f3^-(z, F) = +e^{bz} sum ... = -f3(z, F): the mirrored half-line
    /// integral produces the same series with the opposite sign.
    pub fn f3_minus_series(
        &self,
        z: Complex64,
        b: f64,
        n_terms: usize,
    ) -> Result<ValueWithErr, ZeroSumError> {
        let r = self.f3_series(z, b, n_terms)?;
        Ok(ValueWithErr { value: -r.value, err_est: r.err_est })
    }

    /// |2 pi i f(z) - (f1 + f2 + f3)| with all truncation metadata.
    pub fn identity_residual_upper(
        &self,
        table: &ZeroTable,
        z: Complex64,
        contour: &ContourSpec,
        t: f64,
        f3_terms: usize,
    ) -> Result<IdentityResidual, ZeroSumError> {
        let zs = self.f_zero_sum(table, z, t)?;
        let f1 = self.f1_integral(z, contour)?;
        let f2 = self.f2_integral(z, contour)?;
        let f3 = self.f3_series(z, contour.b, f3_terms)?;
        let lhs = TWO_PI * I * zs.value;
        let rhs = f1.value + f2.value + f3.value;
        Ok(IdentityResidual {
            z,
            lhs,
            rhs,
            residual: (lhs - rhs).norm(),
            zeros_used: zs.zeros_used,
            quad_err: f1.err_est + f2.err_est,
            series_tail: f3.err_est + zs.tail_est,
        })
    }

    /// Mirror: |2 pi i f^-(z) - (f1^- + f2^- + f3^-)|.
    pub fn identity_residual_lower(
        &self,
        table: &ZeroTable,
        z: Complex64,
        contour: &ContourSpec,
        t: f64,
        f3_terms: usize,
    ) -> Result<IdentityResidual, ZeroSumError> {
        let zs = self.f_minus_zero_sum(table, z, t)?;
        let f1 = self.f1_minus_integral(z, contour)?;
        let f2 = self.f2_minus_integral(z, contour)?;
        let f3 = self.f3_minus_series(z, contour.b, f3_terms)?;
        let lhs = TWO_PI * I * zs.value;
        let rhs = f1.value + f2.value + f3.value;
        Ok(IdentityResidual {
            z,
            lhs,
            rhs,
            residual: (lhs - rhs).norm(),
            zeros_used: zs.zeros_used,
            quad_err: f1.err_est + f2.err_est,
            series_tail: f3.err_est + zs.tail_est,
        })
    }

    /// Residue of the assembled right side at z = log n by a 64-point
    /// circle integral over f2 + f3. The pole sits in f3 (residue -g(n));
    /// f2 is entire and f1, analytic across the point, has no integral
    /// representation below the axis, so the fit integrates what carries
    /// the singularity.
    pub fn pole_residue_fit(
        &self,
        n: u64,
        contour: &ContourSpec,
        n_terms: usize,
    ) -> Result<Complex64, ZeroSumError> {
        let centre = Complex64::new((n as f64).ln(), 0.0);
        let radius = 0.01;
        let mut acc = NeumaierC::new();
        let m = 64;
        for j in 0..m {
            let th = TWO_PI * j as f64 / m as f64;
            let e = Complex64::new(0.0, th).exp();
            let zp = centre + e * radius;
            let v = self.f3_series(zp, contour.b, n_terms)?.value
                + self.f2_integral(zp, contour)?.value;
            acc.add(v * I * e * radius);
        }
        Ok(acc.total() * (TWO_PI / m as f64) / (TWO_PI * I))
    }

    /// F(2), used by the closed forms.
    pub fn f_at_two(&self) -> Result<Complex64, ZeroSumError> {
        Ok(f_eval(&self.spec, Complex64::new(2.0, 0.0), &self.cfg)?)
    }
}
