use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ischur_core::qarith::{bbracket, gauss_binom};
use ischur_core::{HeckeElement, LaurentPoly, WeylGroup};

fn laurent(c: &mut Criterion) {
    let a: LaurentPoly = (1..=12).map(bbracket).product();
    let b = a.bar();
    c.bench_function("laurent mul (degree 132)", |bench| {
        bench.iter(|| black_box(&a) * black_box(&b))
    });
    let p = &a * &b;
    c.bench_function("laurent exact division", |bench| {
        bench.iter(|| black_box(&p).div_exact(black_box(&b)))
    });
    c.bench_function("gauss_binom(12, 6)", |bench| {
        bench.iter(|| gauss_binom(black_box(12), 6))
    });
}

fn hecke(c: &mut Criterion) {
    let g = WeylGroup::get(3).unwrap();
    let longest = g.longest(&(0..g.len() as u32).collect::<Vec<_>>());
    let x = HeckeElement::basis(3, longest);
    c.bench_function("hecke T_w0 * T_w0 (r = 3)", |bench| {
        bench.iter(|| black_box(&x).mul(black_box(&x)).unwrap())
    });
    let all = HeckeElement::sum_of(3, &(0..g.len() as u32).collect::<Vec<_>>());
    c.bench_function("hecke full sum squared (r = 3)", |bench| {
        bench.iter(|| black_box(&all).mul(black_box(&all)).unwrap())
    });
}

criterion_group!(benches, laurent, hecke);
criterion_main!(benches);
