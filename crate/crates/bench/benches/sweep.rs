use criterion::{criterion_group, criterion_main, Criterion};
use spreadlab_core::harness::run_sweep;
use spreadlab_core::{BoundId, SweepConfig};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let all = SweepConfig { n_max: 5, ..SweepConfig::default() };
    group.bench_function("all_bounds_n5", |b| b.iter(|| run_sweep(&all).unwrap()));
    let light = SweepConfig { n_min: 4, n_max: 6, bounds: vec![BoundId::SpreadVsLineSpread], ..SweepConfig::default() };
    group.bench_function("spread_vs_line_n6", |b| b.iter(|| run_sweep(&light).unwrap()));
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
