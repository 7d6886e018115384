//! Default rayon pool against a single-thread pool on the hot paths.
//!
//! `cargo bench --no-default-features` benchmarks the sequential fallback instead; both
//! pool sizes then run the same code.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use novikov_core::checks::check_structure;
use novikov_core::constructions::{counterexample_13, novikov_free_3step};
use novikov_core::solver::{prove, SolverConfig};

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let default = ThreadPoolBuilder::new().build().unwrap();
    let label = format!("default-pool-{}", default.current_num_threads());
    vec![
        (
            "single-thread".to_string(),
            ThreadPoolBuilder::new().num_threads(1).build().unwrap(),
        ),
        (label, default),
    ]
}

fn prove_counterexample(c: &mut Criterion) {
    let lie = counterexample_13().lie().clone();
    let mut group = c.benchmark_group("prove-cex13");
    group.sample_size(10);
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            b.iter(|| {
                pool.install(|| prove(black_box(&lie), "cex13", &SolverConfig::default()).unwrap())
            })
        });
    }
    group.finish();
}

fn check_free_structure(c: &mut Criterion) {
    let a = novikov_free_3step(4).unwrap();
    let s = a.novikov().unwrap();
    let mut group = c.benchmark_group("check-structure-free3-4");
    group.sample_size(10);
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            b.iter(|| pool.install(|| check_structure(black_box(s))))
        });
    }
    group.finish();
}

criterion_group!(benches, prove_counterexample, check_free_structure);
criterion_main!(benches);
