use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use spreadlab_bench::fixture_graphs;
use spreadlab_core::linalg::{jacobi_eigenvalues, sym_eigenvalues};
use spreadlab_core::spectra::{adjacency_matrix, spectral_summary};
use spreadlab_core::transforms::total_graph;

fn eigensolvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolver");
    for (name, g) in fixture_graphs() {
        let m = adjacency_matrix(&total_graph(&g)).to_sym().unwrap();
        group.bench_with_input(BenchmarkId::new("ql", name), &m, |b, m| b.iter(|| sym_eigenvalues(black_box(m))));
        group
            .bench_with_input(BenchmarkId::new("jacobi", name), &m, |b, m| b.iter(|| jacobi_eigenvalues(black_box(m))));
    }
    group.finish();
}

fn summaries(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_summary");
    for (name, g) in fixture_graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| spectral_summary(black_box(g))));
    }
    group.finish();
}

criterion_group!(benches, eigensolvers, summaries);
criterion_main!(benches);
