use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lmpoly_core::graph::families;
use lmpoly_core::pathtree::{bethe_tree, PathTree};
use lmpoly_core::{char_poly, perron_value, SymIntMatrix};

fn path_tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("path_tree");
    for n in [5, 6] {
        let g = families::complete(n);
        group.bench_with_input(BenchmarkId::new("build_complete", n), &g, |b, g| {
            b.iter(|| PathTree::of_graph(g, 0, 1_000_000).unwrap())
        });
        let m = PathTree::of_graph(&g, 0, 1_000_000).unwrap().weighted_matrix();
        group.bench_with_input(BenchmarkId::new("char_poly_complete", n), &m, |b, m| b.iter(|| char_poly(m)));
        group.bench_with_input(BenchmarkId::new("perron_complete", n), &m, |b, m| {
            b.iter(|| perron_value(m, 1e-9, 100_000).unwrap())
        });
    }
    group.finish();
}

fn bethe(c: &mut Criterion) {
    let a = SymIntMatrix::adjacency(&bethe_tree(3, 7).unwrap());
    c.bench_function("perron_bethe_3_7", |b| b.iter(|| perron_value(&a, 1e-10, 100_000).unwrap()));
}

criterion_group!(benches, path_tree, bethe);
criterion_main!(benches);
