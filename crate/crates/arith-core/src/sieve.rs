//! Linear-time sieves for the Möbius function, Euler totient, and smallest
//! prime factors, plus a segmented prime enumerator for Euler products.

use crate::error::ArithError;

/// Default memory cap on sieve construction (about 1.3 GB of tables).
pub const DEFAULT_SIEVE_CAP: usize = 100_000_000;

/// Möbius, totient, and smallest-prime-factor tables for 1..=limit.
#[derive(Clone, Debug)]
pub struct SieveTables {
    limit: usize,
    mobius: Vec<i8>,
    totient: Vec<u64>,
    spf: Vec<u32>,
}

impl SieveTables {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// mu(n); panics if n == 0 or n > limit.
    #[inline]
    pub fn mobius(&self, n: usize) -> i8 {
        self.mobius[n]
    }

    /// phi(n); panics if n == 0 or n > limit.
    #[inline]
    pub fn totient(&self, n: usize) -> u64 {
        self.totient[n]
    }

    /// Smallest prime factor of n (n itself when prime); spf(1) = 1.
    #[inline]
    pub fn spf(&self, n: usize) -> u32 {
        self.spf[n]
    }

    #[inline]
    pub fn is_prime(&self, n: usize) -> bool {
        n >= 2 && self.spf[n] as usize == n
    }

    /// Distinct prime factors of n in ascending order.
    pub fn prime_factors(&self, n: usize) -> Vec<u32> {
        let mut out = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m];
            out.push(p);
            while m % p as usize == 0 {
                m /= p as usize;
            }
        }
        out
    }

    /// Iterate divisors of n (unordered beyond the recursive structure).
    pub fn divisors(&self, n: usize) -> Vec<u64> {
        let mut ds: Vec<u64> = vec![1];
        let mut m = n;
        while m > 1 {
            let p = self.spf[m] as u64;
            let mut e = 0;
            while m % p as usize == 0 {
                m /= p as usize;
                e += 1;
            }
            let prev = ds.clone();
            let mut pe = 1u64;
            for _ in 0..e {
                pe *= p;
                ds.extend(prev.iter().map(|d| d * pe));
            }
        }
        ds.sort_unstable();
        ds
    }
}

/// Build the tables up to `limit` under the default capacity cap.
pub fn sieve(limit: usize) -> Result<SieveTables, ArithError> {
    sieve_with_cap(limit, DEFAULT_SIEVE_CAP)
}

/// Build the tables up to `limit`, rejecting limits above `cap`.
pub fn sieve_with_cap(limit: usize, cap: usize) -> Result<SieveTables, ArithError> {
    if limit == 0 || limit > cap {
        return Err(ArithError::CapacityExceeded { requested: limit, cap });
    }
    let n = limit + 1;
    let mut mobius = vec![0i8; n];
    let mut totient = vec![0u64; n];
    let mut spf = vec![0u32; n];
    let mut primes: Vec<u32> = Vec::new();

    mobius[1] = 1;
    totient[1] = 1;
    spf[1] = 1;

    // linear sieve
    for i in 2..n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            mobius[i] = -1;
            totient[i] = (i - 1) as u64;
            primes.push(i as u32);
        }
        for &p in &primes {
            let p = p as usize;
            if p > spf[i] as usize || i * p >= n {
                break;
            }
            let ip = i * p;
            spf[ip] = p as u32;
            if i % p == 0 {
                mobius[ip] = 0;
                totient[ip] = totient[i] * p as u64;
                break;
            } else {
                mobius[ip] = -mobius[i];
                totient[ip] = totient[i] * (p - 1) as u64;
            }
        }
    }

    Ok(SieveTables { limit, mobius, totient, spf })
}

/// Call `f(p)` for every prime p <= limit in ascending order.
///
/// Segmented; memory stays O(sqrt(limit) + segment).
pub fn for_each_prime<F: FnMut(u64)>(limit: u64, mut f: F) {
    if limit < 2 {
        return;
    }
    let root = (limit as f64).sqrt() as u64 + 1;
    let small = simple_primes(root);
    const SEG: u64 = 1 << 20;
    let mut low = 2u64;
    let mut mark = vec![false; SEG as usize];
    while low <= limit {
        let high = u64::min(low + SEG - 1, limit);
        let len = (high - low + 1) as usize;
        mark[..len].fill(false);
        for &p in &small {
            if p * p > high {
                break;
            }
            let mut start = u64::max(p * p, low.div_ceil(p) * p);
            while start <= high {
                mark[(start - low) as usize] = true;
                start += p;
            }
        }
        for i in 0..len {
            if !mark[i] {
                let v = low + i as u64;
                if v >= 2 {
                    f(v);
                }
            }
        }
        low = high + 1;
    }
}

fn simple_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize + 1;
    let mut is_c = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if !is_c[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < n {
                is_c[j] = true;
                j += i;
            }
        }
    }
    out
}
