//! Panel quadrature for complex-valued integrands.
//!
//! Everything is built from 16-point Gauss-Legendre panels with
//! deterministic refinement (panel count doubles until the value settles),
//! which is enough for the analytic integrands on vertical lines and
//! polylines used by the contour checks.

use num_complex::Complex64;

use crate::sum::NeumaierC;

/// 16-point Gauss-Legendre abscissae (positive half) on [-1, 1].
const GL16_X: [f64; 8] = [
    0.095012509837637440185,
    0.281603550779258913230,
    0.458016777657227386342,
    0.617876244402643748447,
    0.755404408355003033895,
    0.865631202387831743880,
    0.944575023073232576078,
    0.989400934991649932596,
];

/// Matching weights.
const GL16_W: [f64; 8] = [
    0.189450610455068496285,
    0.182603415044923588867,
    0.169156519395002538189,
    0.149595988816576732081,
    0.124628971255533872052,
    0.095158511682492784810,
    0.062253523938647892863,
    0.027152459411754094852,
];

/// One Gauss-Legendre panel over [a, b].
pub fn gl16<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Complex64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = NeumaierC::new();
    for i in 0..8 {
        let dx = half * GL16_X[i];
        acc.add((f(mid - dx) + f(mid + dx)) * GL16_W[i]);
    }
    acc.total() * half
}

fn panels<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, n: usize) -> Complex64 {
    let h = (b - a) / n as f64;
    let mut acc = NeumaierC::new();
    for i in 0..n {
        let x0 = a + i as f64 * h;
        acc.add(gl16(f, x0, x0 + h));
    }
    acc.total()
}

/// Integral with an error estimate.
#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: Complex64,
    pub err_est: f64,
}

/// Integrate `f` over the real interval [a, b], doubling the panel count
/// until successive values agree to `tol` (absolute) or `max_panels` is hit.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    n0: usize,
    max_panels: usize,
) -> QuadResult {
    let mut n = n0.max(1);
    let mut prev = panels(f, a, b, n);
    loop {
        n *= 2;
        let cur = panels(f, a, b, n);
        let err = (cur - prev).norm();
        if err <= tol || n >= max_panels {
            return QuadResult { value: cur, err_est: err };
        }
        prev = cur;
    }
}

/// Integrate `f(t)` over [t0, inf) where the integrand decays exponentially.
/// Blocks of fixed length are added until a block contributes less than
/// `tol` relative to the accumulated magnitude (with an absolute floor),
/// each block integrated to `tol`.
pub fn integrate_to_inf<F: Fn(f64) -> Complex64>(
    f: &F,
    t0: f64,
    block: f64,
    tol: f64,
    max_blocks: usize,
) -> QuadResult {
    let mut acc = NeumaierC::new();
    let mut err = 0.0f64;
    let mut a = t0;
    let mut last_block_mag = f64::INFINITY;
    for _ in 0..max_blocks {
        let r = integrate(f, a, a + block, tol * 0.25, 4, 256);
        acc.add(r.value);
        err += r.err_est;
        last_block_mag = r.value.norm();
        a += block;
        if last_block_mag <= tol * (1.0 + acc.total().norm()) {
            break;
        }
    }
    QuadResult {
        value: acc.total(),
        err_est: err + last_block_mag,
    }
}

/// Integrate along the straight segment from `z0` to `z1` in the plane.
pub fn integrate_segment<F: Fn(Complex64) -> Complex64>(
    f: &F,
    z0: Complex64,
    z1: Complex64,
    tol: f64,
) -> QuadResult {
    let dir = z1 - z0;
    let g = |t: f64| f(z0 + dir * t) * dir;
    integrate(&g, 0.0, 1.0, tol, 8, 4096)
}

/// Integrate counterclockwise around the circle |s - center| = radius with
/// an `n`-point trapezoid rule (exponentially accurate for analytic f).
pub fn integrate_circle<F: Fn(Complex64) -> Complex64>(
    f: &F,
    center: Complex64,
    radius: f64,
    n: usize,
) -> Complex64 {
    let mut acc = NeumaierC::new();
    for j in 0..n {
        let th = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let e = Complex64::new(0.0, th).exp();
        let s = center + e * radius;
        // ds = i * radius * e^{i th} dtheta
        acc.add(f(s) * Complex64::new(0.0, 1.0) * e * radius);
    }
    acc.total() * (2.0 * std::f64::consts::PI / n as f64)
}
