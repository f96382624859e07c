use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use matching_energy::experiments::{run_convergence, run_godsil_verification, ExperimentConfig, RunOptions};
use matching_energy::graph::gen_gnp;
use matching_energy::par::Parallelism;
use matching_energy::treewalk::count_tree_like_with;
use matching_energy::SeedSpec;

const MODES: [(&str, Parallelism); 2] = [("rayon", Parallelism::Auto), ("sequential", Parallelism::Sequential)];

fn trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("convergence_trials");
    group.sample_size(10);
    let config = ExperimentConfig::new("bench", vec![16, 20], vec![0.5], 16, 7);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| run_convergence(black_box(&config), RunOptions { parallelism: mode }).unwrap())
        });
    }
    group.finish();
}

fn walks(c: &mut Criterion) {
    let mut group = c.benchmark_group("tree_like_walks");
    group.sample_size(10);
    let g = gen_gnp(9, 0.5, &SeedSpec::new(3)).unwrap();
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| count_tree_like_with(black_box(&g), 10, 1e12, mode).unwrap())
        });
    }
    group.finish();
}

fn godsil(c: &mut Criterion) {
    let mut group = c.benchmark_group("godsil_corpus");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| run_godsil_verification(6, 6, 50, 1, RunOptions { parallelism: mode }).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, trials, walks, godsil);
criterion_main!(benches);
