use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spa_bench::corpus;
use spa_core::graph::{cutset_heuristic, moralize, triangulate};
use spa_core::ordering::compute_ordering;
use spa_core::tradeoff::tradeoff_series;
use spa_core::{Heuristic, TieBreak};

fn orderings(c: &mut Criterion) {
    let mut group = c.benchmark_group("ordering");
    for p in corpus() {
        for h in Heuristic::ALL {
            group.bench_with_input(BenchmarkId::new(h.abbrev(), &p.name), &p, |b, p| {
                b.iter(|| compute_ordering(h, black_box(&p.moral), Some(&p.dag), TieBreak::Index))
            });
        }
    }
    group.finish();
}

fn structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    for p in corpus() {
        group.bench_with_input(BenchmarkId::new("moralize", &p.name), &p, |b, p| {
            b.iter(|| moralize(black_box(&p.dag)))
        });
        let d = compute_ordering(Heuristic::MinDegree, &p.moral, None, TieBreak::Index).unwrap();
        group.bench_with_input(BenchmarkId::new("triangulate", &p.name), &p, |b, p| {
            b.iter(|| triangulate(black_box(&p.moral), &d.nodes))
        });
        group.bench_with_input(BenchmarkId::new("primary-tree", &p.name), &p, |b, p| {
            b.iter(|| p.run(Heuristic::MinDegree, TieBreak::Index))
        });
        group.bench_with_input(BenchmarkId::new("cutset", &p.name), &p, |b, p| {
            b.iter(|| cutset_heuristic(black_box(&p.moral)))
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("tradeoff");
    group.sample_size(10);
    for p in corpus() {
        let run = p.run(Heuristic::MinDegree, TieBreak::Index).unwrap();
        group.bench_with_input(BenchmarkId::new("series", &p.name), &p, |b, p| {
            b.iter(|| tradeoff_series(black_box(&run.tree), &p.moral, &p.name))
        });
    }
    group.finish();
}

criterion_group!(benches, orderings, structure, series);
criterion_main!(benches);
