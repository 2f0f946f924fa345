use criterion::{black_box, criterion_group, criterion_main, Criterion};
use deristab_core::automorphism::compose;
use deristab_core::corpus::CORPUS;
use deristab_core::derivation::Derivation;
use deristab_core::isotropy::{commutes, invariant_translations, IsotropyElementB};
use deristab_core::poly::{int, parse, parse_named};
use deristab_core::simplicity::{bounded_isotropy_enumeration, necessary_condition_witness, shamsuddin_simple_n2};

fn arithmetic(c: &mut Criterion) {
    let a = parse("x1^3 - 2*x1*x2 + x2^2*x3 + 1", 3).unwrap();
    let b = parse("x1 + x2 - x3^2 + 3", 3).unwrap();
    c.bench_function("mul_3var", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    let prod = &a * &b;
    c.bench_function("exact_divide_3var", |bench| {
        bench.iter(|| black_box(&prod).exact_divide(black_box(&b)).unwrap())
    });
    let images = vec![
        parse("x1 + x2^2", 3).unwrap(),
        parse("x2 - 1", 3).unwrap(),
        parse("x3 + x1", 3).unwrap(),
    ];
    c.bench_function("substitute_3var", |bench| {
        bench.iter(|| a.substitute(black_box(&images)).unwrap())
    });
}

fn isotropy(c: &mut Criterion) {
    let d = Derivation::parse(&["1 - x1*x2", "x1^3", "x2"]).unwrap();
    let shift = deristab_core::PolyMap::translation(&[int(0), int(0), int(5)]);
    c.bench_function("commutes_intro", |bench| {
        bench.iter(|| commutes(black_box(&shift), &d).unwrap())
    });
    c.bench_function("invariant_translations_corpus", |bench| {
        bench.iter(|| {
            for e in CORPUS {
                black_box(invariant_translations(&e.derivation()));
            }
        })
    });
    let e = IsotropyElementB::new(
        parse("x1", 1).unwrap(),
        parse_named("w^2", 'w').unwrap(),
        int(2),
        int(3),
    )
    .unwrap();
    let (f, g) = (e.to_map(), e.inverse_map());
    c.bench_function("compose_triangular_pair", |bench| {
        bench.iter(|| compose(black_box(&f), black_box(&g)).unwrap())
    });
}

fn simplicity(c: &mut Criterion) {
    c.bench_function("necessary_conditions_corpus", |bench| {
        bench.iter(|| {
            for e in CORPUS {
                black_box(necessary_condition_witness(&e.derivation()).unwrap());
            }
        })
    });
    let a = parse("x1^2 - x1 + 1", 1).unwrap();
    let b = parse("x1^5 - 3*x1 + 2", 1).unwrap();
    c.bench_function("shamsuddin_decision", |bench| {
        bench.iter(|| shamsuddin_simple_n2(&a, &b).unwrap())
    });
    let d = Derivation::parse(&["1", "x1*x2 + 1"]).unwrap();
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("plane_deg2_coeff2", |bench| {
        bench.iter(|| bounded_isotropy_enumeration(black_box(&d), 2, 2).unwrap())
    });
    group.finish();
}

criterion_group!(benches, arithmetic, isotropy, simplicity);
criterion_main!(benches);
