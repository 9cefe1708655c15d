use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use vanishing_core::arithmetic::{find_small_arithmetic_set, min_arithmetic_set};
use vanishing_core::covers::phi_exact;
use vanishing_core::{AbelianGroup, Limits, PrimeModulus};

fn minimal_sets(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("min_arithmetic_set");
    for p in [13u64, 23, 31] {
        let q = PrimeModulus::new(p).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(p), &q, |b, &q| {
            b.iter(|| min_arithmetic_set(black_box(q), 1, &limits).unwrap())
        });
    }
    group.finish();
}

fn small_sets(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("find_small_arithmetic_set");
    for p in [101u64, 199, 1009] {
        let q = PrimeModulus::new(p).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(p), &q, |b, &q| {
            b.iter(|| find_small_arithmetic_set(black_box(q), 0, &limits).unwrap())
        });
    }
    group.finish();
}

fn phi(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("phi_exact");
    group.sample_size(10);
    for factors in [
        vec![2u32, 2, 2],
        vec![3, 3],
        vec![4, 2, 2],
        vec![2, 2, 2, 2],
    ] {
        let g = AbelianGroup::new(factors.clone(), &limits).unwrap();
        let name = factors
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join("x");
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| phi_exact(black_box(g), &limits).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, minimal_sets, small_sets, phi);
criterion_main!(benches);
