use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lmpoly_core::corpus::{random_connected_graph, rng};
use lmpoly_core::graph::families;
use lmpoly_core::poly::rational_from_f64;
use lmpoly_core::{laplacian_matching_polynomial, matching_polynomial, RootSet};

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("laplacian_matching_polynomial");
    for n in [8, 10, 12] {
        let g = families::complete(n);
        group.bench_with_input(BenchmarkId::new("complete", n), &g, |b, g| {
            b.iter(|| laplacian_matching_polynomial(g))
        });
    }
    let mut r = rng(1);
    let g = random_connected_graph(14, &mut r);
    group.bench_function("random_14", |b| b.iter(|| laplacian_matching_polynomial(&g)));
    group.finish();

    let mut group = c.benchmark_group("subdivision_matching_polynomial");
    group.sample_size(10);
    for n in [8, 10] {
        let s = families::complete(n).subdivide().result;
        group.bench_with_input(BenchmarkId::new("complete", n), &s, |b, s| b.iter(|| matching_polynomial(s)));
    }
    group.finish();
}

fn roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("root_isolation");
    let tol = rational_from_f64(1e-9);
    let mut r = rng(2);
    for n in [6, 10, 14] {
        let lm = laplacian_matching_polynomial(&random_connected_graph(n, &mut r));
        group.bench_with_input(BenchmarkId::new("random", n), &lm, |b, p| {
            b.iter(|| RootSet::isolate(p, &tol).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, matching, roots);
criterion_main!(benches);
