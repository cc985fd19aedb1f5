use criterion::{black_box, criterion_group, criterion_main, Criterion};

use yrep::fusion::{build_b, normalize_i, normalize_j, restrict_i, FusionInput, FusionPoint, MuLine};
use yrep::rmat::{check_ybe_symbolic, YbeVariant};
use yrep::tensor::LinearOp;
use yrep::{Algebra, FormChoice, FormKind, Rational, WeightPair};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn pair(algebra: Algebra, n: usize, lambda: &[&str], mu: &[&str]) -> WeightPair {
    WeightPair::new(algebra, n, lambda.iter().map(|s| r(s)).collect(), mu.iter().map(|s| r(s)).collect()).unwrap()
}

fn ybe(c: &mut Criterion) {
    let sp4 = FormChoice::new(4, FormKind::Sp).unwrap();
    c.bench_function("ybe symbolic n=3", |b| b.iter(|| check_ybe_symbolic(YbeVariant::Ybe, black_box(3), None).unwrap()));
    c.bench_function("hybe symbolic sp n=4", |b| b.iter(|| check_ybe_symbolic(YbeVariant::Hybe, 4, Some(black_box(sp4))).unwrap()));
}

fn fusion(c: &mut Criterion) {
    // ν = (2, 1, 2), generic
    let generic = pair(Algebra::Gl, 3, &["1/3", "-2/7", "5/11"], &["-5/3", "-9/7", "-17/11"]);
    let pt = FusionPoint::from_pair(&generic).unwrap();
    c.bench_function("build B gl n=3 N=5", |b| b.iter(|| build_b(black_box(&pt)).unwrap().materialize()));
    c.bench_function("restrict I gl n=3 N=5", |b| b.iter(|| restrict_i(black_box(&pt)).unwrap()));

    // λ+ρ = (4/3, 1/3): the limit along a line
    let adjacent = pair(Algebra::Gl, 2, &["5/6", "5/6"], &["-1/6", "-1/6"]);
    let line = FusionInput::Line(MuLine::new(adjacent).unwrap());
    c.bench_function("normalize I on a line gl n=2", |b| b.iter(|| normalize_i(black_box(&line)).unwrap()));

    let twisted = FusionInput::Point(pair(Algebra::So, 3, &["1/3", "-1/5"], &["5/6", "-7/10"]));
    c.bench_function("normalize J so n=3", |b| b.iter(|| normalize_j(black_box(&twisted)).unwrap()));
}

fn module(c: &mut Criterion) {
    let split = pair(Algebra::So, 4, &["0"], &["0"]);
    c.bench_function("module so n=4 split", |b| b.iter(|| yrep::report::module(black_box(&split), false, 3).unwrap()));
    let adjacent = pair(Algebra::Gl, 3, &["1/3", "-2/7"], &["-2/3", "-9/7"]);
    c.bench_function("module gl n=3 generic", |b| b.iter(|| yrep::report::module(black_box(&adjacent), false, 3).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = ybe, fusion, module
}
criterion_main!(benches);
