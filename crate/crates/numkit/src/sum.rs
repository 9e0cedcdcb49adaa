//! Compensated and deterministic reductions.

use num_complex::Complex64;

/// Neumaier compensated accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    c: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.c += (self.sum - t) + v;
        } else {
            self.c += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.c
    }
}

/// Compensated complex accumulator (Neumaier on each component).
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierC {
    re: Neumaier,
    im: Neumaier,
}

impl NeumaierC {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: Complex64) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    #[inline]
    pub fn total(&self) -> Complex64 {
        Complex64::new(self.re.total(), self.im.total())
    }
}

/// Sum `f(i)` for `i in 0..n` in ascending order with compensation.
pub fn sum_indexed<F: Fn(usize) -> f64>(n: usize, f: F) -> f64 {
    let mut acc = Neumaier::new();
    for i in 0..n {
        acc.add(f(i));
    }
    acc.total()
}

/// Sum complex terms in ascending index order with compensation.
pub fn sum_indexed_c<F: Fn(usize) -> Complex64>(n: usize, f: F) -> Complex64 {
    let mut acc = NeumaierC::new();
    for i in 0..n {
        acc.add(f(i));
    }
    acc.total()
}
