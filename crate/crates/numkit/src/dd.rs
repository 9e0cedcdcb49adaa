//! Double-double ("double-word") arithmetic.
//!
//! A value is stored as an unevaluated sum `hi + lo` with |lo| <= ulp(hi)/2,
//! giving roughly 31 significant decimal digits. Only the operations the
//! workspace actually needs are implemented. Error-free transformations
//! follow Dekker and Knuth; products use FMA via `f64::mul_add`.

/// Unevaluated sum of two doubles, `hi + lo`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: returns (s, e) with s = fl(a+b) and a+b = s+e exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming |a| >= |b|.
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product: returns (p, e) with p = fl(a*b) and a*b = p+e exactly.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Dd {
        let (s, e) = two_sum(self.hi, x);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Quotient of two doubles to double-double accuracy.
    #[inline]
    pub fn div_f64(a: f64, b: f64) -> Dd {
        let q1 = a / b;
        // residual a - q1*b is exact with FMA
        let r = q1.mul_add(-b, a);
        let q2 = r / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    /// Product of two doubles, kept to full precision.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    /// Fractional part of `a / b` computed without losing the low word:
    /// returns (floor, frac) where frac = a/b - floor as a Dd.
    #[inline]
    pub fn div_rem(a: f64, b: f64) -> (f64, Dd) {
        let q = Dd::div_f64(a, b);
        let fl = q.hi.floor();
        // hi - fl is exact (both representable, same scale)
        let frac = Dd::new(q.hi - fl, q.lo);
        if frac.hi < 0.0 {
            (fl - 1.0, frac.add_f64(1.0))
        } else {
            (fl, frac)
        }
    }

    #[inline]
    pub fn sqr(self) -> Dd {
        self.mul(self)
    }
}

/// Double-double accumulator for long sums of f64 or Dd terms.
#[derive(Clone, Copy, Debug, Default)]
pub struct DdSum(Dd);

impl DdSum {
    pub fn new() -> Self {
        DdSum(Dd::ZERO)
    }

    #[inline]
    pub fn add_f64(&mut self, x: f64) {
        self.0 = self.0.add_f64(x);
    }

    #[inline]
    pub fn add(&mut self, x: Dd) {
        self.0 = self.0.add(x);
    }

    #[inline]
    pub fn total(&self) -> Dd {
        self.0
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.0.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sum_exact() {
        let (s, e) = two_sum(1e16, 1.0);
        assert_eq!(s + e, 1e16 + 1.0);
        assert_eq!(e, 1.0 - ((1e16 + 1.0) - 1e16));
    }

    #[test]
    fn div_rem_recovers_quotient() {
        let (fl, frac) = Dd::div_rem(7.5, 2.0);
        assert_eq!(fl, 3.0);
        assert_eq!(frac.value(), 0.75);
        // non-representable case: frac reconstructs the input exactly
        let (fl2, frac2) = Dd::div_rem(7.3, 3.0);
        assert_eq!(fl2, 2.0);
        let back = frac2.add_f64(fl2).mul_f64(3.0);
        assert!((back.value() - 7.3).abs() < 1e-30);
    }

    #[test]
    fn long_cancellation() {
        // sum n and -n in interleaved order; dd keeps it exactly zero
        let mut acc = DdSum::new();
        for n in 1..=100_000 {
            acc.add_f64(n as f64 * 0.1);
            acc.add_f64(-(n as f64) * 0.1);
        }
        assert_eq!(acc.value(), 0.0);
    }

    #[test]
    fn dd_mul_precision() {
        // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60
        let x = Dd::new(1.0, 2f64.powi(-30) - 2f64.powi(-30) + 0.0).add_f64(2f64.powi(-30));
        let y = x.sqr();
        let expect_lo = 2f64.powi(-29) + 2f64.powi(-60);
        assert!((y.value() - (1.0 + expect_lo)).abs() < 1e-25);
    }
}
