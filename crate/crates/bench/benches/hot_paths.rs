use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use egcolor::constructions::{one_factorization_coloring, order_coloring, xor_coloring};
use egcolor::graph::{CopyEnumerator, CopyPlan};
use egcolor::matching::maximum_matching;
use egcolor::solver::{exact_f, SolveOptions};
use egcolor::verifier::{verify, verify_parallel};
use egcolor::witness::{trichotomy, TrichotomyConstants};
use egcolor::PatternGraph;

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for (name, n) in [("P5", 16), ("S4", 16), ("M3", 12), ("K4", 20)] {
        let plan = Arc::new(CopyPlan::new(&name.parse::<PatternGraph>().unwrap()));
        g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
            b.iter(|| {
                let mut it = CopyEnumerator::new(plan.clone(), n);
                let mut buf = Vec::new();
                let mut total = 0usize;
                while it.advance() {
                    it.edge_indices_into(&mut buf);
                    total += buf[0];
                }
                black_box(total)
            })
        });
    }
    g.finish();
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(20);
    let p5: PatternGraph = "P5".parse().unwrap();
    let xor = xor_coloring(20).unwrap();
    g.bench_function("xor20_P5_q3", |b| b.iter(|| verify(&xor, &p5, 3).unwrap()));
    g.bench_function("xor20_P5_q3_4threads", |b| {
        b.iter(|| verify_parallel(&xor, &p5, 3, 4).unwrap())
    });
    let order = order_coloring(20, false).unwrap();
    g.bench_function("order20_P5_q2", |b| b.iter(|| verify(&order, &p5, 2).unwrap()));
    g.finish();
}

fn solver(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve");
    g.sample_size(10);
    let opts = SolveOptions::default();
    for (name, n, q) in [("P4", 5, 3), ("P4", 6, 2), ("M2", 6, 2), ("K3", 5, 2)] {
        let h: PatternGraph = name.parse().unwrap();
        g.bench_function(format!("{name}_n{n}_q{q}"), |b| {
            b.iter(|| exact_f(n, &h, q, &opts).unwrap())
        });
    }
    g.finish();
}

fn witnesses(c: &mut Criterion) {
    let mut g = c.benchmark_group("witness");
    let f = one_factorization_coloring(128).unwrap();
    g.bench_function("trichotomy_factorization128_v4", |b| {
        b.iter(|| trichotomy(&f, 4, &TrichotomyConstants::relaxed()).unwrap())
    });
    let mono = order_coloring(200, false).unwrap();
    let star = mono.classes()[0].edges.clone();
    g.bench_function("maximum_matching_star199", |b| b.iter(|| maximum_matching(&star)));
    g.finish();
}

criterion_group!(benches, enumeration, verification, solver, witnesses);
criterion_main!(benches);
