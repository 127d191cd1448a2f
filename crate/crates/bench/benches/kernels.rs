use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use inertia_core::bounds::SearchOptions;
use inertia_core::graph::{extract_girth5, gnp, independence_number, paley, polarity};
use inertia_core::scaling::sinkhorn;
use inertia_core::spectral::random_weighting;
use inertia_core::{certify_inertia, weight_search, SupportMatrix, WeightLaw};

fn spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    for q in [5, 7, 11] {
        let w = random_weighting(&polarity(q).unwrap(), 1, WeightLaw::GaussianComplex);
        group.bench_with_input(BenchmarkId::from_parameter(w.n()), &w, |b, w| b.iter(|| black_box(w.spectrum().unwrap())));
    }
    group.finish();
}

fn scaling(c: &mut Criterion) {
    let w = random_weighting(&polarity(7).unwrap(), 2, WeightLaw::GaussianReal);
    let m = SupportMatrix::from_weighting(&w);
    c.bench_function("sinkhorn/polarity7", |b| b.iter(|| black_box(sinkhorn(&m, 1e-12, 100_000).unwrap())));
}

fn certificate(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify");
    for q in [7, 11] {
        let h = extract_girth5(&polarity(q).unwrap()).unwrap().graph;
        let w = random_weighting(&h, 3, WeightLaw::GaussianComplex);
        group.bench_with_input(BenchmarkId::from_parameter(w.n()), &w, |b, w| b.iter(|| black_box(certify_inertia(w).unwrap())));
    }
    group.finish();
}

fn independence(c: &mut Criterion) {
    let g = gnp(50, 0.3, 4).unwrap();
    c.bench_function("alpha/gnp50", |b| b.iter(|| black_box(independence_number(&g).unwrap())));
}

fn search(c: &mut Criterion) {
    let g = paley(17).unwrap();
    let opts = SearchOptions { seed: 1, restarts: 4, steps: 100 };
    c.bench_function("weight_search/paley17", |b| b.iter(|| black_box(weight_search(&g, &opts))));
}

criterion_group!(benches, spectrum, scaling, certificate, independence, search);
criterion_main!(benches);
