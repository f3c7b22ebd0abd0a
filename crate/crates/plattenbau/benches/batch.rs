use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use plattenbau::boxed_builder::generate::room_split_corpus;
use plattenbau::boxed_builder::{build_boxed, verify_necessity};
use plattenbau::corpus::connected_planar_3colorable;
use plattenbau::exec::Exec;
use plattenbau::planar_builder::build_planar;
use plattenbau::plattenbau_geom::{fixture_kmn, touching_graph_with};
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn planar_batch(c: &mut Criterion) {
    let graphs = connected_planar_3colorable(6);
    let mut group = c.benchmark_group("build_planar_n6");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| exec.map(&graphs, |g| build_planar(black_box(g), Exec::Sequential).is_ok()))
        });
    }
    group.finish();
}

fn contacts(c: &mut Criterion) {
    let p = fixture_kmn(40, 40);
    let mut group = c.benchmark_group("touching_graph_k40_40");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| touching_graph_with(black_box(&p), false, exec).unwrap())
        });
    }
    group.finish();
}

fn boxed_batch(c: &mut Criterion) {
    let corpus = room_split_corpus(1, 40, 14);
    let mut group = c.benchmark_group("boxed_round_trip");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| exec.map(&corpus, |p| verify_necessity(p).and_then(|i| build_boxed(&i)).is_ok()))
        });
    }
    group.finish();
}

criterion_group!(benches, planar_batch, contacts, boxed_batch);
criterion_main!(benches);
