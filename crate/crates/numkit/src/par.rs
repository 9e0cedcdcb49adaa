//! Deterministic data-parallel helpers.
//!
//! Every helper here produces bit-identical output for any thread count:
//! independent items are mapped and collected in input order, and series
//! reductions run over fixed chunk boundaries with a sequential combine,
//! so the floating-point operation order never depends on scheduling.
//! With the `parallel` feature disabled the same chunking runs on one
//! thread and yields the same bits.

use crate::sum::{Neumaier, NeumaierC};
use num_complex::Complex64;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Chunk length for series reductions. Fixed: part of the numeric contract.
pub const CHUNK: usize = 4096;

/// Map `f` over `0..n`, collecting results in index order.
pub fn map_ordered<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Map `f` over a slice, collecting results in input order.
pub fn map_slice_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

fn chunk_ranges(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n / CHUNK + 1);
    let mut start = 0;
    while start < n {
        let end = usize::min(start + CHUNK, n);
        v.push((start, end));
        start = end;
    }
    v
}

/// Deterministic compensated sum of `f(i)` over `0..n`.
pub fn sum_terms<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    let ranges = chunk_ranges(n);
    let partials: Vec<f64> = {
        #[cfg(feature = "parallel")]
        {
            ranges
                .par_iter()
                .map(|&(a, b)| {
                    let mut acc = Neumaier::new();
                    for i in a..b {
                        acc.add(f(i));
                    }
                    acc.total()
                })
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            ranges
                .iter()
                .map(|&(a, b)| {
                    let mut acc = Neumaier::new();
                    for i in a..b {
                        acc.add(f(i));
                    }
                    acc.total()
                })
                .collect()
        }
    };
    let mut acc = Neumaier::new();
    for p in partials {
        acc.add(p);
    }
    acc.total()
}

/// Deterministic compensated sum of complex `f(i)` over `0..n`.
pub fn sum_terms_c<F>(n: usize, f: F) -> Complex64
where
    F: Fn(usize) -> Complex64 + Sync + Send,
{
    let ranges = chunk_ranges(n);
    let partials: Vec<Complex64> = {
        #[cfg(feature = "parallel")]
        {
            ranges
                .par_iter()
                .map(|&(a, b)| {
                    let mut acc = NeumaierC::new();
                    for i in a..b {
                        acc.add(f(i));
                    }
                    acc.total()
                })
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            ranges
                .iter()
                .map(|&(a, b)| {
                    let mut acc = NeumaierC::new();
                    for i in a..b {
                        acc.add(f(i));
                    }
                    acc.total()
                })
                .collect()
        }
    };
    let mut acc = NeumaierC::new();
    for p in partials {
        acc.add(p);
    }
    acc.total()
}

/// Sequential reference implementations with the same chunk structure.
/// Benches compare these against the parallel versions above.
pub mod seq {
    use super::*;

    pub fn sum_terms<F: Fn(usize) -> f64>(n: usize, f: F) -> f64 {
        let mut acc = Neumaier::new();
        let mut partials = Vec::new();
        for (a, b) in chunk_ranges(n) {
            let mut c = Neumaier::new();
            for i in a..b {
                c.add(f(i));
            }
            partials.push(c.total());
        }
        for p in partials {
            acc.add(p);
        }
        acc.total()
    }

    pub fn map_ordered<R, F: Fn(usize) -> R>(n: usize, f: F) -> Vec<R> {
        (0..n).map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential_bits() {
        let f = |i: usize| ((i as f64) * 0.78 + 0.31).sin() / ((i + 1) as f64);
        let a = sum_terms(100_000, f);
        let b = seq::sum_terms(100_000, f);
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
