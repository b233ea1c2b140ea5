use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use intertwine::measure::{lp_distance, FiniteMeasure, MetricPoint, MetricSpace};
use intertwine::field::q;
use intertwine::strand::enumerate_resolvers;
use intertwine::{cohomology_ring, zero_divisor_cup_length, FieldSpec};
use intertwine_bench::{complex, diagram};

fn cohomology(c: &mut Criterion) {
    let mut g = c.benchmark_group("cohomology_ring");
    for name in ["torus", "genus2", "rp2"] {
        let k = complex(name);
        g.bench_with_input(BenchmarkId::from_parameter(name), &k, |b, k| {
            b.iter(|| cohomology_ring(black_box(k), FieldSpec::Rationals).unwrap())
        });
    }
    g.finish();
}

fn zcl(c: &mut Criterion) {
    let mut g = c.benchmark_group("zero_divisor_cup_length");
    for (name, m) in [("torus", 2), ("genus2", 2), ("torus", 3)] {
        let ring = cohomology_ring(&complex(name), FieldSpec::Rationals).unwrap();
        g.bench_with_input(BenchmarkId::new(name, m), &ring, |b, r| {
            b.iter(|| zero_divisor_cup_length(black_box(r), m).unwrap())
        });
    }
    g.finish();
}

fn resolvers(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_resolvers");
    for (name, n) in [("example1", 4), ("example3", 4), ("example4", 4)] {
        let d = diagram(name);
        g.bench_with_input(BenchmarkId::new(name, n), &d, |b, d| b.iter(|| enumerate_resolvers(black_box(d), n).unwrap()));
    }
    g.finish();
}

fn lp(c: &mut Criterion) {
    let line = MetricSpace::real_line();
    let mut g = c.benchmark_group("lp_distance");
    for k in [2i64, 4, 6, 8] {
        let mu = FiniteMeasure::new((0..k).map(|i| (MetricPoint::real(q(i, k)), q(1, k))).collect()).unwrap();
        let nu = FiniteMeasure::new((0..k).map(|i| (MetricPoint::real(q(2 * i + 1, 2 * k)), q(1, k))).collect()).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(2 * k), &(mu, nu), |b, (mu, nu)| {
            b.iter(|| lp_distance(&line, black_box(mu), black_box(nu)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, cohomology, zcl, resolvers, lp);
criterion_main!(benches);
