//! Kronecker symbol.

use crate::error::ArithError;

/// Kronecker symbol (a|n), completely multiplicative in both arguments.
///
/// `n == 0` is a domain error.
pub fn kronecker(a: i64, n: i64) -> Result<i32, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    let mut a = a;
    let mut n = n;
    let mut result = 1i32;

    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    // pull the even part out of n: (a|2) rule
    if n % 2 == 0 {
        if a % 2 == 0 {
            return Ok(0);
        }
        let mut e = 0u32;
        while n % 2 == 0 {
            n /= 2;
            e += 1;
        }
        if e % 2 == 1 {
            let r = a.rem_euclid(8);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
    }
    // Jacobi loop on odd positive n
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    Ok(if n == 1 { result } else { 0 })
}
