use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use catphase::quadrature::phase_profiles;
use catphase::{
    default_quadrature, direct_wehrl_entropy, make_equientropic, make_kerr_state, wehrl_entropy, Complex64, Execution,
    KerrSchedule,
};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn polar(c: &mut Criterion) {
    let state = make_equientropic(Complex64::new(12f64.sqrt(), 0.0), 4).unwrap();
    let quad = default_quadrature(&state, 1e-8).unwrap();
    let mut group = c.benchmark_group("polar");
    group.sample_size(10);
    for (name, exec) in MODES {
        let q = quad.clone().with_execution(exec);
        group.bench_with_input(BenchmarkId::new("phase_profiles", name), &q, |b, q| {
            b.iter(|| phase_profiles(black_box(&state), q))
        });
        group.bench_with_input(BenchmarkId::new("wehrl_entropy", name), &q, |b, q| {
            b.iter(|| wehrl_entropy(black_box(&state), q).unwrap())
        });
    }
    group.finish();
}

fn cartesian(c: &mut Criterion) {
    let state = make_kerr_state(KerrSchedule::new(1, 3, Complex64::new(3.0, 0.0)).unwrap()).unwrap();
    let mut group = c.benchmark_group("cartesian");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("direct_wehrl_entropy", name), |b| {
            b.iter(|| direct_wehrl_entropy(black_box(&state), 1e-8, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, polar, cartesian);
criterion_main!(benches);
