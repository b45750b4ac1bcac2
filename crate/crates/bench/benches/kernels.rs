use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use unitcrit_core::chevalley::chevalley_scan;
use unitcrit_core::poly::{factor_mod_p, resultant, Polynomial};
use unitcrit_core::record::bundled_record;
use unitcrit_core::units::solve_unit_equation;

fn kernels(c: &mut Criterion) {
    let f = Polynomial::x_pow_minus_one(12);
    let g = &Polynomial::from_ints(&[-1, 1]).pow(12) - &Polynomial::one();
    c.bench_function("resultant degree 12", |b| b.iter(|| resultant(black_box(&f), black_box(&g)).unwrap()));

    let deg7 = bundled_record("deg7-example").unwrap().polynomial();
    c.bench_function("factor degree 7 mod 10007", |b| b.iter(|| factor_mod_p(black_box(&deg7), 10007).unwrap()));

    let rec = bundled_record("real-cyclotomic-11").unwrap();
    let k = rec.field().unwrap();
    let group = rec.unit_group(&k).unwrap().unwrap();
    let mut slow = c.benchmark_group("search");
    slow.sample_size(10);
    slow.bench_function("Q(zeta_11)+ unit search B = 4", |b| b.iter(|| solve_unit_equation(&group, 4).unwrap()));
    slow.bench_function("ambiguous class scan |d| <= 300", |b| b.iter(|| chevalley_scan(-300, 300).unwrap()));
    slow.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
