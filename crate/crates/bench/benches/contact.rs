use std::hint::black_box;

use cayley_bench::contact_pairs;
use cayley_core::contact::{
    contact_order, curve_contact_order, curve_jet_at_u, dual_contact_order, dual_jet_at_omega,
    planar_intersection_multiplicity,
};
use cayley_core::family::projected_conic;
use cayley_core::PlanarPoint;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn jets(c: &mut Criterion) {
    let (_, p, _) = &contact_pairs()[0];
    let mut group = c.benchmark_group("jet");
    for n in [7usize, 10, 14] {
        group.bench_with_input(BenchmarkId::new("primal", n), &n, |b, &n| {
            b.iter(|| curve_jet_at_u(black_box(p), n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dual", n), &n, |b, &n| {
            b.iter(|| dual_jet_at_omega(black_box(p), n).unwrap())
        });
    }
    group.finish();
}

fn orders(c: &mut Criterion) {
    let mut group = c.benchmark_group("contact");
    for (name, p, q) in contact_pairs() {
        group.bench_function(BenchmarkId::new("primal", name), |b| {
            b.iter(|| curve_contact_order(black_box(&p), black_box(&q), 5).unwrap())
        });
        group.bench_function(BenchmarkId::new("dual", name), |b| {
            b.iter(|| dual_contact_order(black_box(&p), black_box(&q), 5).unwrap())
        });
        let (j1, j2) = (
            curve_jet_at_u(&p, 7).unwrap(),
            curve_jet_at_u(&q, 7).unwrap(),
        );
        group.bench_function(BenchmarkId::new("match-only", name), |b| {
            b.iter(|| contact_order(black_box(&j1), black_box(&j2), 5).unwrap())
        });
    }
    group.finish();
}

fn planar(c: &mut Criterion) {
    let (_, p, q) = &contact_pairs()[1];
    let (c1, c2) = (projected_conic(p), projected_conic(q));
    let vertex = PlanarPoint::from_ints([0, 0, 1]).unwrap();
    c.bench_function("planar multiplicity", |b| {
        b.iter(|| {
            planar_intersection_multiplicity(black_box(&c1), black_box(&c2), &vertex).unwrap()
        })
    });
}

criterion_group!(benches, jets, orders, planar);
criterion_main!(benches);
