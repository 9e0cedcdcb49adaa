//! The contour parameters for the zero-sum decomposition: the vertical
//! abscissa a, the right abscissa b, and the bulge height alpha that lifts
//! the polyline over possible real zeros.

use arith_core::{EulerProductSpec, Factor};
use lfunc_eval::ZeroTable;

use crate::error::ZeroSumError;

#[derive(Clone, Copy, Debug)]
pub struct ContourSpec {
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    /// absolute tolerance target for the line quadratures
    pub quad_tol: f64,
}

impl ContourSpec {
    /// Default contour: a = -1/4, b = 3, alpha from the zero table.
    pub fn for_table(
        spec: &EulerProductSpec,
        table: &ZeroTable,
    ) -> Result<Self, ZeroSumError> {
        Self::with_params(spec, table, -0.25, 3.0)
    }

    pub fn with_params(
        spec: &EulerProductSpec,
        table: &ZeroTable,
        a: f64,
        b: f64,
    ) -> Result<Self, ZeroSumError> {
        // a must exceed max{-3/2, half the largest negative trivial-zero
        // real part} for the built-in factors
        let mut max_neg: f64 = f64::NEG_INFINITY;
        if let Some(factors) = spec.factors() {
            for f in factors {
                let t = match f {
                    Factor::Zeta => -2.0,
                    Factor::LFunction(chi) => {
                        // odd characters have trivial zeros at -1, -3, ...;
                        // even ones at 0, -2, ... (0 is not negative)
                        if chi.value(chi.modulus() as u64 - 1) == 1 {
                            -2.0
                        } else {
                            -1.0
                        }
                    }
                };
                max_neg = max_neg.max(t);
            }
        } else {
            max_neg = -2.0;
        }
        let lower = (-1.5f64).max(0.5 * max_neg);
        if !(lower < a && a < 0.0) {
            return Err(ZeroSumError::Contour(format!(
                "a = {a} outside ({lower}, 0)"
            )));
        }
        if !(b > 2.5) {
            return Err(ZeroSumError::Contour(format!("b = {b} must exceed 5/2")));
        }
        // gamma-factor poles on Re s = a when the functional equation is in
        // play: a must avoid mu - m and -mu - m
        if let Some(fe) = spec.fe_data() {
            let mu = fe.mu_shift;
            let mut m = 0.0;
            while -mu - m >= a - 1.0 {
                if (a - (mu - m)).abs() < 1e-9 || (a - (-mu - m)).abs() < 1e-9 {
                    return Err(ZeroSumError::Contour(format!(
                        "a = {a} collides with a pole of Gamma(s +- mu)"
                    )));
                }
                m += 1.0;
            }
        }
        let alpha = 0.5 * table.ordinates()[0];
        Ok(ContourSpec { a, b, alpha, quad_tol: 1e-10 })
    }
}
