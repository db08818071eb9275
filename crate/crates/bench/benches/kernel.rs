use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fourfold::groebner::buchberger_classic;
use fourfold::idealops::{graded_piece_points, saturate};
use fourfold::lattice::{base_locus_certificate, enumerate_classes};
use fourfold::mpoly::parse_polynomial;
use fourfold::scenes::session::Session;
use fourfold::{buchberger, ClassKind, MonomialOrder, PolyRing, PrimeField, Ring};

fn cyclic(n: usize) -> (Ring, Vec<fourfold::Polynomial>) {
    let ring = PolyRing::new(PrimeField::new(32003).unwrap(), n, MonomialOrder::Grevlex).unwrap();
    let x = |i: usize| format!("x{}", i % n);
    let mut gens = Vec::new();
    for len in 1..n {
        let terms: Vec<String> = (0..n).map(|s| (0..len).map(|k| x(s + k)).collect::<Vec<_>>().join("*")).collect();
        gens.push(parse_polynomial(&ring, &terms.join(" + ")).unwrap());
    }
    let all: Vec<String> = (0..n).map(x).collect();
    gens.push(parse_polynomial(&ring, &format!("{} - 1", all.join("*"))).unwrap());
    (ring, gens)
}

fn groebner(c: &mut Criterion) {
    let (ring, gens) = cyclic(5);
    c.bench_function("gb/cyclic5/matrix", |b| b.iter(|| buchberger(&ring, black_box(&gens)).unwrap()));
    c.bench_function("gb/cyclic5/classic", |b| b.iter(|| buchberger_classic(&ring, black_box(&gens)).unwrap()));
}

fn fat_points(c: &mut Criterion) {
    let s = Session::new(67, 1).unwrap();
    let triple = s.config(3).unwrap();
    c.bench_function("points/triple-quintics/interpolation", |b| {
        b.iter(|| graded_piece_points(s.ring(), black_box(&triple), 5, &[]).unwrap().dimension())
    });
    let ideal = s.config(2).unwrap().ideal(s.ring()).unwrap();
    let mut g = c.benchmark_group("points");
    g.sample_size(10);
    g.bench_function("double-points/saturation", |b| b.iter(|| saturate(black_box(&ideal)).unwrap()));
    g.finish();
}

fn lattice(c: &mut Criterion) {
    c.bench_function("lattice/cubics", |b| b.iter(|| enumerate_classes(black_box(ClassKind::Cubic)).len()));
    c.bench_function("lattice/certificate", |b| b.iter(|| base_locus_certificate().unwrap()));
}

criterion_group!(benches, groebner, fat_points, lattice);
criterion_main!(benches);
