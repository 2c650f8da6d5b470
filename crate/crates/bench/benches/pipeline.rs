use criterion::{black_box, criterion_group, criterion_main, Criterion};
use goedel_bs::decide::{decide_1sat, decide_validity, oracle_validity};
use goedel_bs::{fin_axiom, parse, Caps, LogicId, Query};

fn parse_nested(c: &mut Criterion) {
    let text =
        "forall x. exists y. ((P(x) -> Q(x, y)) & (Q(y, x) -> P(y)) | ~(P(x) & Q(x, x) -> bot))";
    c.bench_function("parse_nested", |b| b.iter(|| parse(black_box(text)).unwrap()));
}

/// Full grid sweep (valid, no early exit) and boundary countermodel search.
fn prove_fin5(c: &mut Criterion) {
    let caps = Caps::default();
    let fin = fin_axiom(5);
    c.bench_function("prove_fin5_gm5", |b| {
        b.iter(|| {
            decide_validity(
                &Query::validity(black_box(fin.clone()), LogicId::Finite(5)),
                &caps,
            )
            .unwrap()
        })
    });
    c.bench_function("prove_fin5_gm6", |b| {
        b.iter(|| {
            decide_validity(
                &Query::validity(black_box(fin.clone()), LogicId::Finite(6)),
                &caps,
            )
            .unwrap()
        })
    });
}

fn sat_pipeline(c: &mut Criterion) {
    let caps = Caps::default();
    let f = parse(
        "exists x0. exists x1. forall y0. forall y1. \
         ((Q(x0, y0) -> Q(y1, x1)) & (Q(x1, y1) | ~Q(y0, x0)))",
    )
    .unwrap()
    .formula;
    c.bench_function("sat_two_block", |b| {
        b.iter(|| decide_1sat(&Query::sat(black_box(f.clone()), LogicId::Infinite), &caps).unwrap())
    });
}

/// Brute-force enumeration: 3^9 interpretations at domain size 3.
fn oracle_enumeration(c: &mut Criterion) {
    let caps = Caps::default();
    let f = parse("forall x. exists y. (Q(x, y) -> Q(x, x))").unwrap().formula;
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("oracle_q2_gm3_domain3", |b| {
        b.iter(|| oracle_validity(black_box(&f), LogicId::Finite(3), 3, &caps).unwrap())
    });
    group.finish();
}

criterion_group!(benches, parse_nested, prove_fin5, sat_pipeline, oracle_enumeration);
criterion_main!(benches);
