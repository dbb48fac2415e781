//! Parallel vs sequential throughput of the batch operations.
//!
//! Build with default features for the rayon path; `--no-default-features`
//! makes both entries run the sequential code, which is a useful baseline.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use taumax::cm::{check_cm, check_cm_serial};
use taumax::maximizer::{solve_t_star, SolverConfig};
use taumax::sequence::{compute_sequence, compute_sequence_serial, Sampling};

fn bench_sequence(c: &mut Criterion) {
    let cfg = SolverConfig::default();
    let mut group = c.benchmark_group("sequence_dense");
    for n_max in [64u64, 512] {
        group.bench_with_input(BenchmarkId::new("parallel", n_max), &n_max, |b, &n| {
            b.iter(|| compute_sequence(n, Sampling::Dense, &cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("serial", n_max), &n_max, |b, &n| {
            b.iter(|| compute_sequence_serial(n, Sampling::Dense, &cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_cm_grid(c: &mut Criterion) {
    let grid: Vec<f64> = (0..32).map(|i| -0.5 + 0.45 * i as f64).collect();
    let beta = 0.7701634920044918;
    let mut group = c.benchmark_group("cm_grid32_orders12");
    group.bench_function("parallel", |b| b.iter(|| check_cm(&grid, beta, 12)));
    group.bench_function("serial", |b| b.iter(|| check_cm_serial(&grid, beta, 12)));
    group.finish();
}

fn bench_single_solve(c: &mut Criterion) {
    let cfg = SolverConfig::default();
    c.bench_function("solve_t_star_x2", |b| {
        b.iter(|| solve_t_star(2.0, &cfg).unwrap())
    });
}

criterion_group!(benches, bench_sequence, bench_cm_grid, bench_single_solve);
criterion_main!(benches);
