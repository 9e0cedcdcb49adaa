//! Tests that tie the evaluators to the ingested zero tables.

use lfunc_eval::{f_eval, f_prime_at, load_zeros, zeta_cx, EvalConfig};
use num_complex::Complex64;
use std::path::PathBuf;

fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(file)
}

#[test]
fn zeta_vanishes_at_first_tabulated_zero() {
    let table = load_zeros(&data("zeros_zeta.txt"), "zeta").unwrap();
    let g1 = table.ordinates()[0];
    assert!((14.1347..=14.1348).contains(&g1));
    let v = zeta_cx(Complex64::new(0.5, g1), &EvalConfig::default()).unwrap();
    assert!(v.norm() < 1e-6, "|zeta(1/2 + i g1)| = {:e}", v.norm());
}

#[test]
fn zqi_vanishes_at_union_zeros() {
    let cfg = EvalConfig::default();
    let spec = arith_core::EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
    let zeta_zeros = load_zeros(&data("zeros_zeta.txt"), "zeta").unwrap();
    let chi_zeros = load_zeros(&data("zeros_chi4.txt"), "chi4").unwrap();
    for g in zeta_zeros.ordinates().iter().take(20) {
        let v = f_eval(&spec, Complex64::new(0.5, *g), &cfg).unwrap();
        assert!(v.norm() < 1e-5, "zeta zero {g}: {:e}", v.norm());
    }
    for g in chi_zeros.ordinates().iter().take(20) {
        let v = f_eval(&spec, Complex64::new(0.5, *g), &cfg).unwrap();
        assert!(v.norm() < 1e-5, "chi4 zero {g}: {:e}", v.norm());
    }
}

#[test]
fn f_prime_stable_at_first_fifty_zeros() {
    let cfg = EvalConfig::default();
    let halved = EvalConfig { derivative_step: 0.5e-5, ..cfg };
    let spec = arith_core::EulerProductSpec::zeta();
    let table = load_zeros(&data("zeros_zeta.txt"), "zeta").unwrap();
    for g in table.ordinates().iter().take(50) {
        let rho = Complex64::new(0.5, *g);
        let a = f_prime_at(&spec, rho, &cfg).unwrap();
        let b = f_prime_at(&spec, rho, &halved).unwrap();
        let rel = (a.value - b.value).norm() / a.value.norm();
        assert!(rel < 1e-6, "zero {g}: rel change {rel:e}");
    }
}

#[test]
fn f_eval_dirichlet_series_in_absolute_region() {
    // F(3) = sum a_F(n) n^{-3} truncated at 1e5
    let cfg = EvalConfig::default();
    let spec = arith_core::EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
    let sieve = arith_core::sieve(100_000).unwrap();
    let ct = arith_core::CoefficientTable::build(&spec, &sieve, 100_000).unwrap();
    let mut acc = numkit::sum::NeumaierC::new();
    for n in 1..=100_000usize {
        acc.add(ct.a_f[n] / (n as f64).powi(3));
    }
    let direct = f_eval(&spec, Complex64::new(3.0, 0.0), &cfg).unwrap();
    assert!((direct - acc.total()).norm() < 1e-9);
}

#[test]
fn f_eval_zqi_dirichlet_series_at_two() {
    // slower convergence at s = 2: mean of a_F is pi/4 per unit, so apply
    // the first Abel tail term (pi/4)/N
    let cfg = EvalConfig::default();
    let spec = arith_core::EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
    let n_max = 1_000_000usize;
    let sieve = arith_core::sieve(n_max).unwrap();
    let ct = arith_core::CoefficientTable::build(&spec, &sieve, n_max).unwrap();
    let mut acc = numkit::sum::NeumaierC::new();
    for n in 1..=n_max {
        acc.add(ct.a_f[n] / (n as f64 * n as f64));
    }
    let oracle = acc.total() + std::f64::consts::FRAC_PI_4 / n_max as f64;
    let direct = f_eval(&spec, Complex64::new(2.0, 0.0), &cfg).unwrap();
    assert!(
        (direct - oracle).norm() < 1e-8,
        "{direct} vs {oracle}"
    );
}
