use criterion::{black_box, criterion_group, criterion_main, Criterion};
use layerwr::expansion::{coexpansion_constant, GraphComplex};
use layerwr::hastings::{hastings_pipeline, HastingsOptions};
use layerwr::{distance_exact, distance_upper, fixtures, sparsify, SearchOptions, Side, SparsifyOptions};

fn bench_sparsify(c: &mut Criterion) {
    let shor = fixtures::shor();
    let opts = layerwr_bench::shor_reference();
    c.bench_function("sparsify/shor_reference", |b| b.iter(|| sparsify(black_box(&shor), &opts).unwrap()));
    let bulk = fixtures::bulk_instance(2);
    c.bench_function("sparsify/bulk_2", |b| {
        b.iter(|| sparsify(black_box(&bulk), &SparsifyOptions::default()).unwrap())
    });
}

fn bench_distance(c: &mut Criterion) {
    let code = fixtures::bulk_instance(2);
    c.bench_function("distance/exact_bulk_2", |b| b.iter(|| distance_exact(black_box(&code), Side::X).unwrap()));
    let out = sparsify(&fixtures::shor(), &layerwr_bench::shor_reference()).unwrap().code;
    c.bench_function("distance/upper_shor_layer_100", |b| {
        b.iter(|| distance_upper(black_box(&out), Side::X, SearchOptions::new(100, 1)).unwrap())
    });
}

fn bench_hastings(c: &mut Criterion) {
    let steane = fixtures::steane();
    c.bench_function("hastings/steane", |b| {
        b.iter(|| hastings_pipeline(black_box(&steane), &HastingsOptions::default()).unwrap())
    });
}

fn bench_expansion(c: &mut Criterion) {
    let g = GraphComplex::tensor(&GraphComplex::repetition(4), &GraphComplex::repetition(4));
    c.bench_function("expansion/square_4x4", |b| b.iter(|| coexpansion_constant(black_box(&g)).unwrap()));
}

criterion_group!(benches, bench_sparsify, bench_distance, bench_hastings, bench_expansion);
criterion_main!(benches);
