use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hilbsmooth::{hom0_dimension, partition_of_polynomial, FieldSpec};
use hilbsmooth_bench::{large_witness, mid_lex_ideal, staircase_partition};

fn bench_hilbert_function(c: &mut Criterion) {
    let ideal = mid_lex_ideal();
    c.bench_function("hilbert_function L((3,3,2,2,2,2)) deg 8", |b| {
        b.iter(|| black_box(&ideal).hilbert_function(black_box(8)))
    });
}

fn bench_intersection(c: &mut Criterion) {
    let a = mid_lex_ideal();
    let b2 = large_witness();
    // pad the smaller ideal up to seven variables so the pair is compatible
    let a = hilbsmooth::MonomialIdeal::new(
        7,
        a.gens()
            .iter()
            .map(|g| {
                let mut exps = g.exponents().to_vec();
                exps.resize(7, 0);
                hilbsmooth::Monomial::new(exps)
            })
            .collect(),
    )
    .unwrap();
    c.bench_function("intersect mid lex with large witness", |b| {
        b.iter(|| black_box(&a).intersect(black_box(&b2)).unwrap())
    });
}

fn bench_hom0(c: &mut Criterion) {
    let witness = large_witness();
    c.bench_function("hom0 lsing_witness(6,4,5,0) rational", |b| {
        b.iter(|| hom0_dimension(black_box(&witness), FieldSpec::Rational).unwrap())
    });
    c.bench_function("hom0 lsing_witness(6,4,5,0) prime", |b| {
        b.iter(|| hom0_dimension(black_box(&witness), FieldSpec::Prime(1_000_003)).unwrap())
    });
}

fn bench_partition_decode(c: &mut Criterion) {
    let p = staircase_partition().hilbert_polynomial();
    c.bench_function("decode staircase Hilbert polynomial", |b| {
        b.iter(|| partition_of_polynomial(black_box(&p)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_hilbert_function,
    bench_intersection,
    bench_hom0,
    bench_partition_decode
);
criterion_main!(benches);
