//! Series-level invariants tying the coefficient tables to the Euler
//! product constant.

use arith_core::{c_of_f, sieve, CoefficientTable, EulerProductSpec, RealCharacter};
use num_complex::Complex64;
use numkit::sum::NeumaierC;

fn specs() -> Vec<EulerProductSpec> {
    vec![
        EulerProductSpec::zeta(),
        EulerProductSpec::dirichlet(RealCharacter::from_discriminant(5).unwrap()),
        EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap(),
    ]
}

#[test]
fn alpha_series_converges_to_twice_c() {
    // sum_{n<=N} alpha(n)/n^2 -> 2 C(F)
    let n_max = 1_000_000usize;
    let t = sieve(n_max).unwrap();
    for spec in specs() {
        let ct = CoefficientTable::build(&spec, &t, n_max).unwrap();
        let mut acc = NeumaierC::new();
        for n in 1..=n_max {
            acc.add(ct.alpha[n] / (n as f64 * n as f64));
        }
        let c = c_of_f(&spec, n_max as u64, None).unwrap();
        let diff = (acc.total() - c.value * 2.0).norm();
        assert!(
            diff <= 10.0 * c.bound,
            "{}: partial {} vs 2C {} (bound {:e})",
            spec.name(),
            acc.total(),
            c.value * 2.0,
            c.bound
        );
    }
}

#[test]
fn totient_dirichlet_series_identity_at_4() {
    // sum phi(n,F)/n^4 = zeta(3) sum alpha(n)/n^4 for spec = zeta, N = 1e5
    let n_max = 100_000usize;
    let t = sieve(n_max).unwrap();
    let spec = EulerProductSpec::zeta();
    let ct = CoefficientTable::build(&spec, &t, n_max).unwrap();

    let mut lhs = NeumaierC::new();
    let mut rhs = NeumaierC::new();
    for n in 1..=n_max {
        let n4 = (n as f64).powi(4);
        lhs.add(ct.phi_f[n] / n4);
        rhs.add(ct.alpha[n] / n4);
    }
    // zeta(3) by direct summation with an Euler-Maclaurin tail correction
    let zeta3 = {
        let m = 200.0f64;
        let mut s = 0.0;
        for k in 1..200u64 {
            s += 1.0 / (k as f64).powi(3);
        }
        s + 1.0 / (2.0 * m * m) + 1.0 / (2.0 * m * m * m) + 1.0 / (4.0 * m * m * m * m)
    };
    let diff = (lhs.total() - rhs.total() * zeta3).norm();
    assert!(diff <= 1e-6, "identity residual {diff:e}");
}

#[test]
fn c_of_f_chi5_matches_l_value() {
    // C(L(chi_5)) = 1/(2 L(2, chi_5)); reference value from the Hurwitz
    // series to 17 digits
    let chi = RealCharacter::from_discriminant(5).unwrap();
    let spec = EulerProductSpec::dirichlet(chi);
    let c = c_of_f(&spec, 2_000_000, None).unwrap();
    let l2 = 0.70621140325974097f64;
    let expect = 1.0 / (2.0 * l2);
    assert!(
        (c.value - Complex64::new(expect, 0.0)).norm() < c.bound.max(3e-7),
        "{} vs {}",
        c.value,
        expect
    );
}
