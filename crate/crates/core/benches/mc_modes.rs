//! Sequential vs. sharded-parallel Monte Carlo on the reference symplectic
//! triple integral.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use trisphere::oracle::{mc_triple, ExecMode, KernelSpec};
use trisphere::spectra::OperatorKind;

fn bench_mc_modes(c: &mut Criterion) {
    let spec = KernelSpec::triple(OperatorKind::Symplectic(1), [2.0, 2.0, 2.0]);
    let mut group = c.benchmark_group("mc_triple");
    for samples in [100_000u64, 1_000_000] {
        group.bench_with_input(
            BenchmarkId::new("sequential", samples),
            &samples,
            |b, &s| b.iter(|| mc_triple(&spec, s, 42, 64, ExecMode::Sequential).unwrap()),
        );
        group.bench_with_input(
            BenchmarkId::new("parallel", samples),
            &samples,
            |b, &s| b.iter(|| mc_triple(&spec, s, 42, 64, ExecMode::Parallel).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_mc_modes);
criterion_main!(benches);
