//! Coefficient sequences attached to a polynomial Euler product:
//! gamma(p), alpha(n), the associated totient phi(n, F), the inverse
//! coefficients mu_F(n), the Dirichlet coefficients a_F(n), and
//! g(n) = (mu_F * Id)(n).

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::ArithError;
use crate::sieve::SieveTables;
use crate::spec::EulerProductSpec;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// gamma(p) = p (1 - 1/F_p(1)).
///
/// Computed as p * r with r = 1 - prod_j(1 - alpha_j/p) accumulated via
/// r <- r + u - r u, which avoids the 1 - (1 - eps) cancellation that a
/// direct product would amplify by p.
pub fn gamma_p(spec: &EulerProductSpec, p: u64) -> Complex64 {
    let mut r = ZERO;
    for a in spec.local_roots(p) {
        let u = a / p as f64;
        r = r + u - r * u;
    }
    r * p as f64
}

/// Coefficients of the local polynomial prod_j (1 - alpha_j(p) x).
fn local_poly(spec: &EulerProductSpec, p: u64) -> Vec<Complex64> {
    let roots = spec.local_roots(p);
    let mut c = vec![ZERO; roots.len() + 1];
    c[0] = ONE;
    for (j, a) in roots.iter().enumerate() {
        // multiply by (1 - a x)
        for k in (1..=j + 1).rev() {
            let prev = c[k - 1];
            c[k] -= a * prev;
        }
    }
    c
}

/// mu_F(p^k): k-th coefficient of the local polynomial (and 0 for k > d).
fn mu_f_pk(poly: &[Complex64], k: usize) -> Complex64 {
    if k < poly.len() {
        poly[k]
    } else {
        ZERO
    }
}

/// a_F(p^k): complete homogeneous symmetric function of the local roots,
/// from the power-series inverse of the local polynomial.
fn a_f_pk(poly: &[Complex64], k: usize) -> Complex64 {
    let mut h = vec![ZERO; k + 1];
    h[0] = ONE;
    for m in 1..=k {
        let mut acc = ZERO;
        for i in 1..=usize::min(m, poly.len() - 1) {
            acc += poly[i] * h[m - i];
        }
        h[m] = -acc;
    }
    h[k]
}

/// g(p^k) = sum_{i<=k} mu_F(p^i) p^{k-i}.
fn g_pk(poly: &[Complex64], p: u64, k: usize) -> Complex64 {
    let mut acc = ZERO;
    let mut pw = (p as f64).powi(k as i32);
    for i in 0..=k {
        acc += mu_f_pk(poly, i) * pw;
        pw /= p as f64;
    }
    acc
}

fn factorize(tables: &SieveTables, n: usize) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let mut m = n;
    while m > 1 {
        let p = tables.spf(m) as u64;
        let mut e = 0;
        while m % p as usize == 0 {
            m /= p as usize;
            e += 1;
        }
        out.push((p, e));
    }
    out
}

/// alpha(n) = mu(n) prod_{p|n} gamma(p); zero off squarefree n.
pub fn alpha_coeff(spec: &EulerProductSpec, tables: &SieveTables, n: usize) -> Complex64 {
    assert!(n >= 1 && n <= tables.limit());
    if tables.mobius(n) == 0 {
        return ZERO;
    }
    let mut acc = Complex64::new(tables.mobius(n) as f64, 0.0);
    for (p, _) in factorize(tables, n) {
        acc *= gamma_p(spec, p);
    }
    acc
}

/// phi(n, F) = n prod_{p|n} F_p(1)^{-1}.
pub fn assoc_totient(spec: &EulerProductSpec, tables: &SieveTables, n: usize) -> Complex64 {
    assert!(n >= 1 && n <= tables.limit());
    let mut acc = Complex64::new(n as f64, 0.0);
    for (p, _) in factorize(tables, n) {
        acc *= spec.local_inv_at_one(p);
    }
    acc
}

/// mu_F(n), multiplicative with mu_F(p^k) the local polynomial coefficient.
#[allow(non_snake_case)]
pub fn mu_F_coeff(spec: &EulerProductSpec, tables: &SieveTables, n: usize) -> Complex64 {
    assert!(n >= 1 && n <= tables.limit());
    let mut acc = ONE;
    for (p, e) in factorize(tables, n) {
        acc *= mu_f_pk(&local_poly(spec, p), e);
    }
    acc
}

/// a_F(n), the Dirichlet-series coefficients of F.
#[allow(non_snake_case)]
pub fn aF_coeff(spec: &EulerProductSpec, tables: &SieveTables, n: usize) -> Complex64 {
    assert!(n >= 1 && n <= tables.limit());
    let mut acc = ONE;
    for (p, e) in factorize(tables, n) {
        acc *= a_f_pk(&local_poly(spec, p), e);
    }
    acc
}

/// g(n) = sum_{d|n} mu_F(d) n/d.
pub fn g_coeff(spec: &EulerProductSpec, tables: &SieveTables, n: usize) -> Complex64 {
    assert!(n >= 1 && n <= tables.limit());
    let mut acc = ONE;
    for (p, e) in factorize(tables, n) {
        acc *= g_pk(&local_poly(spec, p), p, e);
    }
    acc
}

/// Dense tables of all five coefficient sequences for n <= limit.
pub struct CoefficientTable {
    limit: usize,
    pub alpha: Vec<Complex64>,
    pub mu_f: Vec<Complex64>,
    pub a_f: Vec<Complex64>,
    pub g: Vec<Complex64>,
    pub phi_f: Vec<Complex64>,
}

impl CoefficientTable {
    /// Multiplicative fill over the spf factorization. The result is
    /// identical to calling the per-n functions at every index.
    pub fn build(
        spec: &EulerProductSpec,
        tables: &SieveTables,
        limit: usize,
    ) -> Result<Self, ArithError> {
        if limit > tables.limit() {
            return Err(ArithError::IndexOutOfRange {
                n: limit as u64,
                limit: tables.limit() as u64,
            });
        }
        let n = limit + 1;
        let mut alpha = vec![ZERO; n];
        let mut mu_f = vec![ZERO; n];
        let mut a_f = vec![ZERO; n];
        let mut g = vec![ZERO; n];
        let mut phi_f = vec![ZERO; n];
        if limit >= 1 {
            alpha[1] = ONE;
            mu_f[1] = ONE;
            a_f[1] = ONE;
            g[1] = ONE;
            phi_f[1] = ONE;
        }
        let mut poly_cache: HashMap<u32, Vec<Complex64>> = HashMap::new();

        for i in 2..n {
            let p = tables.spf(i);
            let mut m = i;
            let mut e = 0usize;
            while m % p as usize == 0 {
                m /= p as usize;
                e += 1;
            }
            let poly = poly_cache
                .entry(p)
                .or_insert_with(|| local_poly(spec, p as u64));
            if m == 1 {
                let pf = p as f64;
                let inv1 = {
                    // F_p(1)^{-1} from the local polynomial at x = 1/p
                    let mut acc = ZERO;
                    let mut pw = 1.0;
                    for c in poly.iter() {
                        acc += c * pw;
                        pw /= pf;
                    }
                    acc
                };
                // alpha(p) = -gamma(p) = sum_{k>=1} c_k p^{1-k}, free of the
                // 1 - (1 - eps) cancellation
                alpha[i] = if e == 1 {
                    let mut acc = ZERO;
                    let mut pw = 1.0;
                    for c in poly.iter().skip(1) {
                        acc += c * pw;
                        pw /= pf;
                    }
                    acc
                } else {
                    ZERO
                };
                mu_f[i] = mu_f_pk(poly, e);
                a_f[i] = a_f_pk(poly, e);
                g[i] = g_pk(poly, p as u64, e);
                phi_f[i] = inv1 * (i as f64);
            } else {
                let pe = i / m;
                alpha[i] = alpha[pe] * alpha[m];
                mu_f[i] = mu_f[pe] * mu_f[m];
                a_f[i] = a_f[pe] * a_f[m];
                g[i] = g[pe] * g[m];
                phi_f[i] = phi_f[pe] * phi_f[m];
            }
        }
        Ok(CoefficientTable { limit, alpha, mu_f, a_f, g, phi_f })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::RealCharacter;
    use crate::sieve::sieve;

    fn specs() -> Vec<EulerProductSpec> {
        vec![
            EulerProductSpec::zeta(),
            EulerProductSpec::dirichlet(RealCharacter::from_discriminant(5).unwrap()),
            EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap(),
        ]
    }

    #[test]
    fn gamma_p_examples() {
        let z = EulerProductSpec::zeta();
        assert!((gamma_p(&z, 7) - ONE).norm() < 1e-15);

        let l5 = EulerProductSpec::dirichlet(RealCharacter::from_discriminant(5).unwrap());
        // gamma(p) = chi(p) for degree-1 characters
        assert!((gamma_p(&l5, 2) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);

        let qi = EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
        assert!((gamma_p(&qi, 3) - Complex64::new(1.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn alpha_examples() {
        let t = sieve(100).unwrap();
        let z = EulerProductSpec::zeta();
        // alpha(n) = mu(n) for zeta
        for n in 1..=100 {
            let a = alpha_coeff(&z, &t, n);
            assert!((a - Complex64::new(t.mobius(n) as f64, 0.0)).norm() < 1e-15);
        }
        let qi = EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
        assert!((alpha_coeff(&qi, &t, 3) - Complex64::new(-1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert_eq!(alpha_coeff(&qi, &t, 4), ZERO);
    }

    #[test]
    fn assoc_totient_examples() {
        let t = sieve(100).unwrap();
        let z = EulerProductSpec::zeta();
        assert!((assoc_totient(&z, &t, 12) - Complex64::new(4.0, 0.0)).norm() < 1e-12);
        let l5 = EulerProductSpec::dirichlet(RealCharacter::from_discriminant(5).unwrap());
        assert!((assoc_totient(&l5, &t, 2) - Complex64::new(3.0, 0.0)).norm() < 1e-12);
        for s in specs() {
            assert!((assoc_totient(&s, &t, 1) - ONE).norm() < 1e-15);
        }
    }

    #[test]
    fn totient_identity_route_agreement() {
        // phi(n,F) = n sum_{m|n} alpha(m)/m, relative 1e-12
        let t = sieve(1000).unwrap();
        for s in specs() {
            let ct = CoefficientTable::build(&s, &t, 1000).unwrap();
            for n in 1..=1000usize {
                let direct = ct.phi_f[n];
                let mut via_alpha = ZERO;
                for d in t.divisors(n) {
                    via_alpha += ct.alpha[d as usize] / d as f64;
                }
                via_alpha *= n as f64;
                let denom = direct.norm().max(1e-30);
                assert!(
                    (direct - via_alpha).norm() / denom < 1e-12,
                    "{} n={n}: {direct} vs {via_alpha}",
                    s.name()
                );
            }
        }
    }

    #[test]
    fn mu_f_convolution_inverse() {
        // (mu_F * a_F)(n) = [n = 1], exact to 1e-12
        let t = sieve(1000).unwrap();
        for s in specs() {
            let ct = CoefficientTable::build(&s, &t, 1000).unwrap();
            for n in 1..=1000usize {
                let mut acc = ZERO;
                for d in t.divisors(n) {
                    acc += ct.mu_f[d as usize] * ct.a_f[n / d as usize];
                }
                let expect = if n == 1 { ONE } else { ZERO };
                assert!((acc - expect).norm() < 1e-12, "{} n={n}", s.name());
            }
        }
    }

    #[test]
    fn zeta_g_equals_totient() {
        let t = sieve(1000).unwrap();
        let z = EulerProductSpec::zeta();
        let ct = CoefficientTable::build(&z, &t, 1000).unwrap();
        for n in 1..=1000usize {
            assert!((ct.g[n] - Complex64::new(t.totient(n) as f64, 0.0)).norm() < 1e-9);
            // brute-force convolution oracle
            let mut conv = ZERO;
            for d in t.divisors(n) {
                conv += ct.mu_f[d as usize] * ((n / d as usize) as f64);
            }
            assert!((ct.g[n] - conv).norm() < 1e-9);
        }
    }

    #[test]
    fn zqi_mu_f_at_3() {
        let t = sieve(10).unwrap();
        let qi = EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
        // -(1 + chi(3)) = 0
        assert!(mu_F_coeff(&qi, &t, 3).norm() < 1e-15);
        assert!((mu_F_coeff(&qi, &t, 1) - ONE).norm() < 1e-15);
    }

    #[test]
    fn table_matches_per_n_functions() {
        let t = sieve(400).unwrap();
        for s in specs() {
            let ct = CoefficientTable::build(&s, &t, 400).unwrap();
            for n in 1..=400usize {
                assert!((ct.alpha[n] - alpha_coeff(&s, &t, n)).norm() < 1e-12);
                assert!((ct.mu_f[n] - mu_F_coeff(&s, &t, n)).norm() < 1e-12);
                assert!((ct.a_f[n] - aF_coeff(&s, &t, n)).norm() < 1e-12);
                assert!((ct.g[n] - g_coeff(&s, &t, n)).norm() < 1e-9);
                assert!((ct.phi_f[n] - assoc_totient(&s, &t, n)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn a_f_is_chi_for_dirichlet() {
        let t = sieve(500).unwrap();
        let chi = RealCharacter::from_discriminant(5).unwrap();
        let l5 = EulerProductSpec::dirichlet(chi.clone());
        let ct = CoefficientTable::build(&l5, &t, 500).unwrap();
        for n in 1..=500usize {
            assert!((ct.a_f[n] - Complex64::new(chi.value(n as u64) as f64, 0.0)).norm() < 1e-12);
        }
    }
}
