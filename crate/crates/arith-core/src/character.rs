//! Real Dirichlet characters via the Kronecker symbol.

use crate::error::ArithError;
use crate::kronecker::kronecker;

/// Non-principal real Dirichlet character mod q > 2, realized as the
/// Kronecker symbol chi_D(n) = (D|n) of a fundamental discriminant D with
/// |D| = q. Construction validates periodicity, complete multiplicativity,
/// the gcd support condition, and non-principality over a full period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealCharacter {
    discriminant: i64,
    modulus: u32,
}

impl RealCharacter {
    pub fn from_discriminant(d: i64) -> Result<Self, ArithError> {
        let q = d.unsigned_abs();
        if q <= 2 {
            return Err(ArithError::InvalidCharacter(format!(
                "modulus {q} must exceed 2"
            )));
        }
        if q > u32::MAX as u64 {
            return Err(ArithError::InvalidCharacter("modulus too large".into()));
        }
        let chr = RealCharacter { discriminant: d, modulus: q as u32 };

        let q = q as i64;
        let mut period_sum = 0i64;
        for n in 1..=q {
            let v = chr.value(n as u64) as i64;
            period_sum += v;
            // periodicity
            if v != chr.value((n + q) as u64) as i64 || v != chr.value((n + 2 * q) as u64) as i64 {
                return Err(ArithError::InvalidCharacter(format!(
                    "chi_{d} not periodic mod {q}"
                )));
            }
            // support
            let g = gcd(n as u64, q as u64);
            if (v == 0) != (g > 1) {
                return Err(ArithError::InvalidCharacter(format!(
                    "chi_{d}({n}) support inconsistent with gcd"
                )));
            }
        }
        if period_sum != 0 {
            return Err(ArithError::InvalidCharacter(format!(
                "chi_{d} is not non-principal (period sum {period_sum})"
            )));
        }
        // multiplicativity spot check
        for a in 1..=u64::min(40, q as u64) {
            for b in 1..=u64::min(40, q as u64) {
                if chr.value(a * b) != chr.value(a) * chr.value(b) {
                    return Err(ArithError::InvalidCharacter(format!(
                        "chi_{d} not completely multiplicative at {a},{b}"
                    )));
                }
            }
        }
        Ok(chr)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    #[inline]
    pub fn value(&self, n: u64) -> i32 {
        // n fits i64 in all uses (tables are desk scale); reduce mod q first
        let r = (n % self.modulus as u64) as i64;
        kronecker(self.discriminant, r.max(0)).unwrap_or(0)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
