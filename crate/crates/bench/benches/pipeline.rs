//! Benchmarks for the hot paths: the eigensolver, single-angle detection,
//! grid sweeps, and the two seesaw searches.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use entwit_core::linalg::hermitian_eigenvalues;
use entwit_core::maps::{choi_c1, positivity_seesaw, SeesawOptions};
use entwit_core::random::{random_hermitian, rng_from_seed};
use entwit_core::upb::{tiles, unextendability_seesaw, upb_complement_state};
use entwit_core::witness::{lambda_min_at, sweep, SweepConfig};

fn bench_eigensolver(c: &mut Criterion) {
    let mut rng = rng_from_seed(7);
    for n in [9, 27] {
        let h = random_hermitian(&mut rng, n);
        c.bench_function(&format!("eigenvalues_{n}x{n}"), |b| {
            b.iter(|| hermitian_eigenvalues(black_box(&h), 1e-10).unwrap())
        });
    }
}

fn bench_detection(c: &mut Criterion) {
    let map = choi_c1();
    let rho = upb_complement_state(&tiles()).unwrap();

    c.bench_function("lambda_min_single_angle", |b| {
        b.iter(|| lambda_min_at(black_box(&map), black_box(&rho), black_box(2.356)).unwrap())
    });

    let config = SweepConfig::new(0.0, std::f64::consts::TAU, 73, 1e-9).unwrap();
    c.bench_function("sweep_73_samples", |b| {
        b.iter(|| sweep(black_box(&map), black_box(&rho), black_box(&config)).unwrap())
    });
}

fn bench_seesaws(c: &mut Criterion) {
    let opts = SeesawOptions {
        restarts: 5,
        ..SeesawOptions::default()
    };

    let map = choi_c1();
    c.bench_function("positivity_seesaw_5_restarts", |b| {
        b.iter(|| positivity_seesaw(black_box(&map), black_box(&opts)).unwrap())
    });

    let basis = tiles();
    c.bench_function("unextendability_seesaw_5_restarts", |b| {
        b.iter(|| unextendability_seesaw(black_box(&basis), black_box(&opts)).unwrap())
    });
}

criterion_group!(benches, bench_eigensolver, bench_detection, bench_seesaws);
criterion_main!(benches);
