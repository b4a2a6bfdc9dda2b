use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use trigrid::enumerate::with_threads;
use trigrid::plabic::dual;
use trigrid::{enumerate_polyiamonds, fixtures, verify_suite, BilliardsSystem, Mode};

fn analyze(c: &mut Criterion) {
    let p = fixtures::thirty_three_pane_polygon();
    c.bench_function("analyze/33-pane", |b| {
        b.iter(|| BilliardsSystem::analyze(black_box(&p)).unwrap().report())
    });
    c.bench_function("trips/33-pane", |b| {
        b.iter(|| dual(black_box(&p)).trip_permutation().unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for mode in [Mode::Fixed, Mode::Free] {
        g.bench_with_input(BenchmarkId::new(format!("{mode:?}"), 9), &mode, |b, &m| {
            b.iter(|| enumerate_polyiamonds(9, m).len())
        });
    }
    g.finish();
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for threads in [1, 4] {
        g.bench_with_input(BenchmarkId::new("area9", threads), &threads, |b, &t| {
            b.iter(|| with_threads(Some(t), || verify_suite(9).exit_code()))
        });
    }
    g.finish();
}

criterion_group!(benches, analyze, enumeration, verification);
criterion_main!(benches);
