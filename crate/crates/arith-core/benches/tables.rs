//! Parallel vs sequential table construction and Euler-product reduction.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use arith_core::{c_of_f, sieve, CoefficientTable, EulerProductSpec};

fn bench_sieve(c: &mut Criterion) {
    c.bench_function("sieve_1e6", |b| {
        b.iter(|| sieve(black_box(1_000_000)).unwrap())
    });
}

fn bench_coeff_table(c: &mut Criterion) {
    let t = sieve(200_000).unwrap();
    let spec = EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
    c.bench_function("coeff_table_zqi_2e5", |b| {
        b.iter(|| CoefficientTable::build(black_box(&spec), &t, 200_000).unwrap())
    });
}

fn bench_constant(c: &mut Criterion) {
    let spec = EulerProductSpec::zeta();
    let mut g = c.benchmark_group("c_of_f");
    g.sample_size(10);
    // parallel feature path (chunked segments)
    g.bench_function("zeta_1e6", |b| {
        b.iter(|| c_of_f(black_box(&spec), 1_000_000, None).unwrap())
    });
    g.finish();
}

criterion_group!(benches, bench_sieve, bench_coeff_table, bench_constant);
criterion_main!(benches);
