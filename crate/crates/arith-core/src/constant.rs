//! The mean-value constant C(F) = (1/2) prod_p (1 - gamma(p)/p^2) with a
//! rigorous truncation bound.

use num_complex::Complex64;
use numkit::par::map_ordered;
use numkit::sum::NeumaierC;

use crate::coeff::gamma_p;
use crate::error::ArithError;
use crate::sieve::for_each_prime;
use crate::spec::EulerProductSpec;

/// Truncated constant and a bound such that the true C(F) lies within
/// `bound` of `value`.
#[derive(Clone, Copy, Debug)]
pub struct CValue {
    pub value: Complex64,
    pub bound: f64,
    pub prime_limit: u64,
}

const SEGMENT: u64 = 1 << 21;

/// Truncated Euler product over p <= prime_limit. When `tol` is given and
/// the rigorous tail bound exceeds it, the achieved bound is reported as an
/// error instead.
pub fn c_of_f(
    spec: &EulerProductSpec,
    prime_limit: u64,
    tol: Option<f64>,
) -> Result<CValue, ArithError> {
    if prime_limit < 2 {
        return Err(ArithError::TruncationInsufficient {
            achieved: f64::INFINITY,
            requested: tol.unwrap_or(0.0),
        });
    }
    // log-sum over fixed segments; combined in segment order so the result
    // does not depend on thread count
    let nseg = prime_limit.div_ceil(SEGMENT) as usize;
    let partials = map_ordered(nseg, |k| {
        let lo = k as u64 * SEGMENT;
        let hi = u64::min(lo + SEGMENT - 1, prime_limit);
        let mut acc = NeumaierC::new();
        segment_primes(lo.max(2), hi, |p| {
            let w = gamma_p(spec, p) / (p as f64 * p as f64);
            acc.add((Complex64::new(1.0, 0.0) - w).ln());
        });
        acc.total()
    });
    let mut logsum = NeumaierC::new();
    for p in partials {
        logsum.add(p);
    }
    let value = logsum.total().exp() * 0.5;

    // |gamma(p)| <= d, so |log prod_{p>P}(1 - gamma/p^2)| <= 2d/(P-1)
    let d = spec.degree() as f64;
    let log_tail = 2.0 * d / (prime_limit - 1) as f64;
    let bound = value.norm() * log_tail.exp_m1().abs();

    if let Some(t) = tol {
        if bound > t {
            return Err(ArithError::TruncationInsufficient { achieved: bound, requested: t });
        }
    }
    Ok(CValue { value, bound, prime_limit })
}

/// Primes in [lo, hi] in ascending order.
fn segment_primes<F: FnMut(u64)>(lo: u64, hi: u64, mut f: F) {
    if hi < lo {
        return;
    }
    let root = (hi as f64).sqrt() as u64 + 1;
    let mut small = Vec::new();
    for_each_prime(root, |p| small.push(p));
    let len = (hi - lo + 1) as usize;
    let mut mark = vec![false; len];
    for &p in &small {
        if p * p > hi {
            break;
        }
        let mut start = u64::max(p * p, lo.div_ceil(p) * p);
        while start <= hi {
            mark[(start - lo) as usize] = true;
            start += p;
        }
    }
    for (i, &m) in mark.iter().enumerate() {
        let v = lo + i as u64;
        if !m && v >= 2 {
            f(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_constant_small_limit() {
        // single factor at p = 2: (1/2)(1 - 1/4) = 0.375
        let z = EulerProductSpec::zeta();
        let c = c_of_f(&z, 2, None).unwrap();
        assert!((c.value.re - 0.375).abs() < 1e-15);
        assert!(c.bound > 1e-3);
    }

    #[test]
    fn zeta_constant_converges() {
        // C(zeta) = 3/pi^2
        let z = EulerProductSpec::zeta();
        let c = c_of_f(&z, 1_000_000, None).unwrap();
        let target = 3.0 / (std::f64::consts::PI * std::f64::consts::PI);
        assert!((c.value.re - target).abs() < c.bound.max(1e-7));
        assert!((c.value.re - target).abs() < 2e-7);
        assert!(c.value.im.abs() < 1e-15);
    }

    #[test]
    fn tolerance_rejection() {
        let z = EulerProductSpec::zeta();
        assert!(matches!(
            c_of_f(&z, 100, Some(1e-9)),
            Err(ArithError::TruncationInsufficient { .. })
        ));
    }

    #[test]
    fn segment_primes_cover() {
        let mut a = Vec::new();
        segment_primes(2, 10_000, |p| a.push(p));
        let mut b = Vec::new();
        for_each_prime(10_000, |p| b.push(p));
        assert_eq!(a, b);

        let mut mid = Vec::new();
        segment_primes(5_000, 6_000, |p| mid.push(p));
        let expect: Vec<u64> = b.iter().copied().filter(|&p| (5_000..=6_000).contains(&p)).collect();
        assert_eq!(mid, expect);
    }
}
