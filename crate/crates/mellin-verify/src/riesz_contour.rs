//! The Riesz-mean contour identities: (1/2 pi i) int over the detour path
//! of zeta(s-1) [sum alpha(n) n^{-s}] x^s / s^{k+1} ds equals delta_k(E).
//!
//! The alpha series is truncated at N >= x, which keeps the identity exact:
//! the truncated integrand is entire but for the zeta pole at s = 2, whose
//! residue is restored explicitly, and the Dirichlet coefficients of
//! zeta(s-1) S_N(s) agree with phi(j, F) for every j <= x.

use num_complex::Complex64;
use numkit::quad::integrate;
use numkit::sum::NeumaierC;
use remainder::{RemainderCtx, Variant};

use crate::error::MellinError;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Debug)]
pub struct RieszContourReport {
    pub x: f64,
    pub k: u8,
    pub contour_value: f64,
    pub riesz_value: f64,
    pub residual: f64,
    pub t_cut: f64,
}

/// Compare the contour integral against the exact piecewise Riesz mean.
pub fn riesz_contour_check(
    ctx: &RemainderCtx,
    k: u8,
    x: f64,
    t_cut: f64,
) -> Result<RieszContourReport, MellinError> {
    if ctx.variant() == Variant::Character {
        return Err(MellinError::Domain(
            "contour form applies to the Euler-product variants".into(),
        ));
    }
    if !(k == 1 || k == 2) {
        return Err(MellinError::Domain("k must be 1 or 2".into()));
    }
    if x < 1.0 || x.fract() == 0.0 {
        return Err(MellinError::Domain(
            "x must be >= 1 and non-integral to avoid the jump ambiguity".into(),
        ));
    }
    let n_alpha = (x.ceil() as usize).max(64).min(ctx.limit());
    let cfg = lfunc_eval::EvalConfig::default();

    let integrand = |s: Complex64| -> Complex64 {
        let mut series = NeumaierC::new();
        for n in 1..=n_alpha {
            let a = ctx.alpha_at(n);
            if a != 0.0 {
                series.add(a * (-s * (n as f64).ln()).exp());
            }
        }
        let zeta = lfunc_eval::zeta_cx(s - 1.0, &cfg).unwrap_or_default();
        zeta * series.total() * (s * x.ln()).exp() / s.powu(k as u32 + 1)
    };

    // vertical piece [3 + 2i, 3 + iT] and its mirror; both traverse upward
    // so ds = +i dt on each, with a first-order oscillation correction for
    // the truncated tails
    let lnx = x.ln();
    let vert = |sign: f64| -> Complex64 {
        let f = |t: f64| integrand(Complex64::new(3.0, sign * t)) * I;
        let n0 = ((t_cut - 2.0) * (lnx + 5.0) / 4.0) as usize;
        integrate(&f, 2.0, t_cut, 1e-9, n0.max(64), 1 << 22).value
    };
    let up = vert(1.0);
    let down = vert(-1.0);
    // tails: int_T^inf i H(3+it) dt ~ -H(3+iT)/ln x (and mirrored)
    let tail_up = -integrand(Complex64::new(3.0, t_cut)) / lnx;
    let tail_down = integrand(Complex64::new(3.0, -t_cut)) / lnx;

    // semicircle s = 3 + 2 e^{i theta}, theta from 3 pi/2 down to pi/2
    let arc = {
        let f = |th: f64| {
            let e = Complex64::new(0.0, th).exp();
            let s = Complex64::new(3.0, 0.0) + 2.0 * e;
            integrand(s) * 2.0 * I * e
        };
        let r = integrate(
            &f,
            0.5 * std::f64::consts::PI,
            1.5 * std::f64::consts::PI,
            1e-10,
            64,
            1 << 14,
        );
        -r.value
    };

    let total = (up + down + arc + tail_up + tail_down) / (2.0 * std::f64::consts::PI * I);

    // the detour leaves the zeta(s-1) pole at s = 2 on its right, so the
    // contour value sits above R_k by the crossed residue with the alpha
    // series truncated: (1/2 pi i) int_L = R_k + x^2/2^{k+1} (2C - S_N(2));
    // the consistent 2C cancels against the R_k definition
    let mut s_n2 = 0.0;
    for n in 1..=n_alpha {
        s_n2 += ctx.alpha_at(n) / (n as f64 * n as f64);
    }
    let closure = x * x / 2.0f64.powi(k as i32 + 1) * (ctx.two_c() - s_n2);
    let contour_value = total.re - closure;

    let riesz = ctx.riesz_mean(k, x)?;
    Ok(RieszContourReport {
        x,
        k,
        contour_value,
        riesz_value: riesz.piecewise,
        residual: (contour_value - riesz.piecewise).abs(),
        t_cut,
    })
}
