use criterion::{black_box, criterion_group, criterion_main, Criterion};

use rootlab::verifier::{verify_nonzonotope_case, witness_row};
use rootlab::weyl::{apply_word, full_orbit};
use rootlab::zonotopes::zt_equals_polar;
use rootlab::{Family, Rational};
use rootlab_bench::system;

fn orbits(c: &mut Criterion) {
    let f4 = system(Family::F, 4);
    c.bench_function("orbit F4 coweight 2", |b| b.iter(|| full_orbit(&f4, black_box(f4.coweight(2).unwrap()))));
    let e7 = system(Family::E, 7);
    c.bench_function("orbit E7 coweight 7", |b| b.iter(|| full_orbit(&e7, black_box(e7.coweight(7).unwrap()))));
}

fn witnesses(c: &mut Criterion) {
    let e8 = system(Family::E, 8);
    let row = witness_row(&e8).unwrap();
    let omega = e8.weight(1).unwrap().clone();
    c.bench_function("E8 witness word", |b| b.iter(|| apply_word(&e8, &row.word, black_box(&omega)).unwrap()));
    c.bench_function("E8 witness row", |b| b.iter(|| verify_nonzonotope_case(Family::E, 8).unwrap()));
}

fn equality(c: &mut Criterion) {
    let a6 = system(Family::A, 6);
    let one = Rational::from_integer(1.into());
    c.bench_function("zt_equals_polar A6", |b| b.iter(|| zt_equals_polar(&a6, 1, &one).unwrap()));
    let c5 = system(Family::C, 5);
    let half = Rational::new(1.into(), 2.into());
    c.bench_function("zt_equals_polar C5", |b| b.iter(|| zt_equals_polar(&c5, 1, &half).unwrap()));
}

criterion_group!(benches, orbits, witnesses, equality);
criterion_main!(benches);
