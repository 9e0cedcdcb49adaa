//! The remainder operations: E(x), f, g, the decomposition report, the
//! Volterra residual, and Riesz means. All heavy accumulations run in
//! double-double so identity residuals sit at roundoff, not at f64 noise.

use num_complex::Complex64;
use numkit::dd::{Dd, DdSum};

use crate::ctx::{RemainderCtx, Variant};
use crate::error::RemainderError;

/// Saw tooth: 0 at integers, 1/2 - {x} otherwise.
pub fn saw_tooth(x: f64) -> f64 {
    let fr = x - x.floor();
    if fr == 0.0 {
        0.0
    } else {
        0.5 - fr
    }
}

/// Truncation controls for the g series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailMode {
    /// Require n_terms >= ceil(x): the tail closes exactly.
    ExactClosure,
    /// Sum to n_terms and attach the tail bound; flags tolerance misses.
    BoundOnly,
}

#[derive(Clone, Copy, Debug)]
pub struct TruncationPolicy {
    pub n_terms: usize,
    pub target_tol: f64,
    pub tail_mode: TailMode,
}

impl TruncationPolicy {
    pub fn exact(n_terms: usize) -> Self {
        TruncationPolicy { n_terms, target_tol: 0.0, tail_mode: TailMode::ExactClosure }
    }
}

/// g value with its truncation metadata.
#[derive(Clone, Copy, Debug)]
pub struct GValue {
    pub value: f64,
    pub tail_bound: f64,
    pub n_used: usize,
    pub tol_miss: bool,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub x: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub e_ar: f64,
    pub e_an: f64,
    pub residual: f64,
    pub n_terms: usize,
    pub two_c: f64,
}

#[derive(Clone, Debug)]
pub struct VolterraReport {
    pub x: f64,
    pub a: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct RieszPair {
    pub log_weighted: f64,
    pub piecewise: f64,
    pub diff: f64,
}

impl RemainderCtx {
    /// E(x) = sum_{n<=x} b(n) - C x^2 in double-double, rounded at the end.
    pub fn error_term(&self, x: f64) -> Result<f64, RemainderError> {
        Ok(self.error_term_dd(x)?.value())
    }

    fn error_term_dd(&self, x: f64) -> Result<Dd, RemainderError> {
        self.check_coverage(x)?;
        let m = x.floor() as usize;
        let p = if m >= 1 { self.phi_prefix[m.min(self.limit)] } else { Dd::ZERO };
        Ok(p.sub(Dd::prod(x, x).mul_f64(self.two_c * 0.5)))
    }

    /// Midpoint error term at integer x (character variant); elsewhere E(x).
    pub fn error_term_midpoint(&self, x: f64) -> Result<f64, RemainderError> {
        self.check_coverage(x)?;
        if x.fract() == 0.0 && x >= 1.0 {
            let m = x as usize;
            let half_jump = Dd::from(self.phi[m]).mul_f64(0.5);
            Ok(self.error_term_dd(x)?.sub(half_jump).value())
        } else {
            self.error_term(x)
        }
    }

    fn gamma_floor(&self, x: f64) -> Dd {
        let m = x.floor() as usize;
        if m >= 1 {
            self.phi_over_n_prefix[m.min(self.limit)]
        } else {
            Dd::ZERO
        }
    }

    /// The series f evaluated through the finite identity
    /// f(x) = -2C x + sum_{n<=x} alpha(n)/n [x/n]; the character variant
    /// uses the saw-tooth form with its exact tail closure.
    pub fn f_series(&self, x: f64) -> Result<f64, RemainderError> {
        Ok(self.f_series_dd(x)?.value())
    }

    fn f_series_dd(&self, x: f64) -> Result<Dd, RemainderError> {
        self.check_coverage(x)?;
        match self.variant {
            Variant::ZetaClassic | Variant::EulerProduct => {
                // sum alpha(n)/n [x/n] = gamma_{[x]} exactly (telescoped)
                Ok(self.gamma_floor(x).sub(Dd::prod(self.two_c, x)))
            }
            Variant::Character => {
                // f = s1/2 - x 2C + sum_{d<=x} alpha(d)/d [x/d]
                //     - (1/2) [x integer] sum_{d|x} alpha(d)/d
                if x == 0.0 {
                    // s(0/d) = 0 for every d: the series vanishes termwise
                    return Ok(Dd::ZERO);
                }
                let mut acc = DdSum::new();
                acc.add(Dd::from(self.s1).mul_f64(0.5));
                acc.add(Dd::prod(-self.two_c, x));
                acc.add(self.gamma_floor(x));
                if x.fract() == 0.0 && x >= 1.0 {
                    let n = x as usize;
                    let mut corr = DdSum::new();
                    let mut d = 1usize;
                    while d * d <= n {
                        if n % d == 0 {
                            corr.add(Dd::div_f64(self.alpha[d], d as f64));
                            let e = n / d;
                            if e != d {
                                corr.add(Dd::div_f64(self.alpha[e], e as f64));
                            }
                        }
                        d += 1;
                    }
                    acc.add(corr.total().mul_f64(-0.5));
                }
                Ok(acc.total())
            }
        }
    }

    /// One-sided limits of f at integer points, for the jump identity.
    pub fn f_one_sided(&self, n: usize) -> Result<(f64, f64), RemainderError> {
        let x = n as f64;
        self.check_coverage(x)?;
        let base = self.gamma_floor(x).sub(Dd::prod(self.two_c, x));
        let mut jump = DdSum::new();
        let mut d = 1usize;
        while d * d <= n {
            if n % d == 0 {
                jump.add(Dd::div_f64(self.alpha[d], d as f64));
                let e = n / d;
                if e != d {
                    jump.add(Dd::div_f64(self.alpha[e], e as f64));
                }
            }
            d += 1;
        }
        let plus = base.value();
        let minus = base.sub(jump.total()).value();
        Ok((minus, plus))
    }

    /// The series g with exact tail closure (or a bound in BoundOnly mode).
    pub fn g_series(&self, x: f64, policy: &TruncationPolicy) -> Result<GValue, RemainderError> {
        Ok(self.g_series_impl(x, policy)?.1)
    }

    fn g_series_impl(
        &self,
        x: f64,
        policy: &TruncationPolicy,
    ) -> Result<(Dd, GValue), RemainderError> {
        self.check_coverage(x)?;
        let need = x.ceil() as usize;
        let n_used = policy.n_terms.min(self.limit);
        if policy.tail_mode == TailMode::ExactClosure && n_used < need {
            return Err(RemainderError::TruncationInsufficient(format!(
                "exact closure needs n_terms >= ceil(x) = {need}, got {n_used}"
            )));
        }
        let mut acc = DdSum::new();
        for n in 1..=n_used {
            let a = self.alpha[n];
            if a == 0.0 {
                continue;
            }
            let (fl, fr) = Dd::div_rem(x, n as f64);
            match self.variant {
                Variant::ZetaClassic => acc.add(fr.sqr().mul_f64(a)),
                Variant::EulerProduct => acc.add(fr.sqr().add_f64(fl).mul_f64(a)),
                Variant::Character => {
                    // {x/d}({x/d} - 1)
                    acc.add(fr.sqr().sub(fr).mul_f64(a));
                }
            }
        }
        // tail closure over n > n_used: terms reduce to their power form
        let s2_tail = Dd::from(self.two_c).sub(self.alpha_n2_prefix[n_used]);
        let x2 = Dd::prod(x, x);
        acc.add(x2.mul(s2_tail));
        if self.variant == Variant::Character {
            let s1_tail = Dd::from(self.s1).sub(self.alpha_n1_prefix[n_used]);
            acc.add(s1_tail.mul_f64(-x).mul_f64(1.0));
        }
        let exact = n_used >= need;
        // closure is exact when every open term has n > x; otherwise bound
        // the replaced terms crudely by their worst-case size
        let tail_bound = if exact {
            0.0
        } else {
            let miss = (need - n_used) as f64;
            miss * (1.0 + 2.0 * x / n_used.max(1) as f64)
        };
        let tol_miss = policy.tail_mode == TailMode::BoundOnly
            && policy.target_tol > 0.0
            && tail_bound > policy.target_tol;
        let total = acc.total();
        Ok((
            total,
            GValue { value: total.value(), tail_bound, n_used, tol_miss },
        ))
    }

    /// Decomposition constant: 1/2 for the classical zeta variant, else 0.
    pub fn decomposition_constant(&self) -> f64 {
        match self.variant {
            Variant::ZetaClassic => 0.5,
            _ => 0.0,
        }
    }

    /// Full report of E = x f + g/2 + c with the residual formed in
    /// double-double (the consistent 2C cancels algebraically).
    pub fn decomposition_report(&self, x: f64) -> Result<DecompositionReport, RemainderError> {
        self.check_coverage(x)?;
        let policy = TruncationPolicy::exact(x.ceil() as usize);
        let e = match self.variant {
            Variant::Character => Dd::from(self.error_term_midpoint(x)?),
            _ => self.error_term_dd(x)?,
        };
        let f = self.f_series_dd(x)?;
        let (g, gmeta) = self.g_series_impl(x, &policy)?;
        let c = self.decomposition_constant();
        let residual = e
            .sub(f.mul_f64(x))
            .sub(g.mul_f64(0.5))
            .add_f64(-c)
            .value();
        let e_an = g.mul_f64(0.5).add_f64(c).value();
        Ok(DecompositionReport {
            x,
            e: e.value(),
            f: f.value(),
            g: g.value(),
            e_ar: f.value() * x,
            e_an,
            residual,
            n_terms: gmeta.n_used,
            two_c: self.two_c,
        })
    }

    /// E^AN(x) = E(x) - x f(x) on the segment [m, m+1): a quadratic
    /// P_m + C x^2 - gamma_m x (plus the character closing terms).
    pub fn analytic_part(&self, x: f64) -> Result<f64, RemainderError> {
        self.check_coverage(x)?;
        let e = match self.variant {
            Variant::Character => Dd::from(self.error_term_midpoint(x)?),
            _ => self.error_term_dd(x)?,
        };
        Ok(e.sub(self.f_series_dd(x)?.mul_f64(x)).value())
    }

    /// Coefficients (p, c2, c1) with E^AN(x) = p + c2 x^2 + c1 x on
    /// [m, m+1): used by the Mellin integrator for exact panel integrals.
    /// Euler-product variants only.
    pub fn analytic_part_segment(&self, m: usize) -> Result<(f64, f64, f64), RemainderError> {
        if self.variant == Variant::Character {
            return Err(RemainderError::Unsupported(
                "segment form applies to the Euler-product variants".into(),
            ));
        }
        self.check_coverage(m as f64)?;
        let p = if m >= 1 { self.phi_prefix[m] } else { Dd::ZERO };
        let gamma = if m >= 1 { self.phi_over_n_prefix[m] } else { Dd::ZERO };
        Ok((p.value(), 0.5 * self.two_c, -gamma.value()))
    }

    /// Residual of F1(x) - int_0^x F1(t) dt/t = Er(x) for F1 = (f + A) x.
    /// The integral of f is exact piecewise: on [m, m+1) the series part is
    /// the constant gamma_m.
    pub fn volterra_residual(&self, x: f64, a: Complex64) -> Result<VolterraReport, RemainderError> {
        self.check_coverage(x)?;
        if x == 0.0 {
            return Ok(VolterraReport {
                x,
                a,
                lhs: Complex64::new(0.0, 0.0),
                rhs: Complex64::new(0.0, 0.0),
                residual: 0.0,
            });
        }
        let f = self.f_series_dd(x)?;
        // int_0^x f(t) dt
        let mut int_f = DdSum::new();
        // linear part: -2C t (+ s1/2 for the character variant)
        int_f.add(Dd::prod(x, x).mul_f64(-self.two_c * 0.5));
        if self.variant == Variant::Character {
            int_f.add(Dd::prod(self.s1 * 0.5, x));
        }
        let mx = x.floor() as usize;
        for m in 1..=mx {
            let len = if (m + 1) as f64 <= x { 1.0 } else { x - m as f64 };
            int_f.add(self.phi_over_n_prefix[m].mul_f64(len));
        }
        let er = match self.variant {
            Variant::Character => self.error_term_midpoint(x)?,
            _ => self.error_term(x)?,
        };
        // lhs - rhs = (f(x)+A)x - [A x + int f] - Er(x); assembled so the
        // A-terms cancel in complex arithmetic, not symbolically
        let f1x = (Complex64::new(f.value(), 0.0) + a) * x;
        let rhs = a * x + int_f.value() + er;
        let residual = (f1x - rhs).norm();
        Ok(VolterraReport { x, a, lhs: f1x, rhs, residual })
    }

    /// Riesz typical mean of order k computed two ways: the log-weighted
    /// finite sum and the exact piecewise integral of delta_k(E).
    pub fn riesz_mean(&self, k: u8, x: f64) -> Result<RieszPair, RemainderError> {
        self.check_coverage(x)?;
        assert!(k == 1 || k == 2, "k must be 1 or 2");
        let c_half = 0.5 * self.two_c;
        let mx = x.floor() as usize;
        let lx = if x > 0.0 { x.ln() } else { 0.0 };

        // way 1: (1/k!) sum_{n<=x} phi(n) ln^k(x/n) - C x^2 / 2^k
        let mut way1 = DdSum::new();
        for n in 1..=mx {
            let l = lx - (n as f64).ln();
            let w = if k == 1 { l } else { 0.5 * l * l };
            way1.add(Dd::prod(self.phi[n], w));
        }
        way1.add(Dd::prod(x, x).mul_f64(-c_half / (2.0f64.powi(k as i32))));

        // way 2: exact piecewise integration of delta_k(E)
        let mut way2 = DdSum::new();
        if k == 1 {
            // int P(t)/t dt over segments + int -C t dt
            for m in 1..=mx {
                let hi = ((m + 1) as f64).min(x);
                way2.add(self.phi_prefix[m].mul_f64(hi.ln() - (m as f64).ln()));
            }
            way2.add(Dd::prod(x, x).mul_f64(-c_half / 2.0));
        } else {
            // delta_1(E)(t) = P_m ln t - L_m - C t^2/2 on [m, m+1)
            for m in 1..=mx {
                let lo = (m as f64).ln();
                let hi = ((m + 1) as f64).min(x).ln();
                way2.add(self.phi_prefix[m].mul_f64(0.5 * (hi * hi - lo * lo)));
                way2.add(self.phi_log_prefix[m].mul_f64(-(hi - lo)));
            }
            way2.add(Dd::prod(x, x).mul_f64(-c_half / 4.0));
        }
        let w1 = way1.total().value();
        let w2 = way2.total().value();
        Ok(RieszPair { log_weighted: w1, piecewise: w2, diff: (w1 - w2).abs() })
    }
}
