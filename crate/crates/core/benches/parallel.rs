use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use flagbound::bounds::variety_bound_with;
use flagbound::bounds::Comparison;
use flagbound::distvec::{enumerate_distance_vectors_with, TypeVector};
use flagbound::flagalg::{brute_force_distance_vector_sets, code_census_with, enumerate_flag_variety, FlagCode, OracleMode};
use flagbound::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let t = TypeVector::full(12).unwrap();
    let mut g = c.benchmark_group("enumerate_distance_vectors_full12_d60");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_distance_vectors_with(black_box(60), &t, exec).unwrap().len())
        });
    }
    g.finish();
}

fn census(c: &mut Criterion) {
    let t = TypeVector::full(4).unwrap();
    let code = FlagCode::new(enumerate_flag_variety(2, &t).unwrap().collect()).unwrap();
    let mut g = c.benchmark_group("code_census_full4_q2");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| code_census_with(black_box(&code), exec).min_distance)
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let t = TypeVector::full(5).unwrap();
    let mut g = c.benchmark_group("oracle_sampled_full5_q2");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let mode = OracleMode::Sampled { pairs: 50_000, seed: 1 };
                brute_force_distance_vector_sets(&t, 2, mode, exec).unwrap().len()
            })
        });
    }
    g.finish();
}

fn bounds(c: &mut Criterion) {
    let t = TypeVector::full(14).unwrap();
    let mut g = c.benchmark_group("variety_bound_full14_d40");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| variety_bound_with(black_box(40), &t, Comparison::Symbolic, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, census, oracle, bounds);
criterion_main!(benches);
