use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use fde_core::interop::{check_synonymy, SynonymPair};
use fde_core::pool::{Bound, Grammar, SemanticPool};
use fde_core::proof::{check_proof, parse_proof, soundness_audit};
use fde_core::{entails, evaluate, parse, synthesize, Logic, Sequent, TruthFunction, TruthValue, Valuation};

fn logic(name: &str) -> &'static Logic {
    Logic::named(name).unwrap()
}

fn evaluation(c: &mut Criterion) {
    let f = parse("((p -> q) & (q => r)) | ~(r <-> p) & exists s. (s -> p)").unwrap();
    let v = Valuation::new()
        .with("p", TruthValue::B)
        .with("q", TruthValue::N)
        .with("r", TruthValue::T);
    c.bench_function("evaluate/mixed", |b| {
        b.iter(|| evaluate(logic("FDE+cmi"), black_box(&f), &v))
    });
}

fn consequence(c: &mut Criterion) {
    let s = Sequent::new(
        vec![
            parse("p -> q").unwrap(),
            parse("q -> r").unwrap(),
            parse("r -> s").unwrap(),
        ],
        parse("p -> s").unwrap(),
    );
    c.bench_function("entails/chain-4-atoms", |b| {
        b.iter(|| entails(logic("FDE+cmi"), black_box(&s)))
    });
}

fn pools(c: &mut Criterion) {
    let g = Grammar::lattice(&["p", "q"]);
    let logics = [logic("FDE"), logic("K3"), logic("LP")];
    c.bench_function("pool/lattice-depth-3", |b| {
        b.iter(|| SemanticPool::build(&logics, black_box(&g), Bound::Depth(3)))
    });
}

fn synthesis(c: &mut Criterion) {
    let tf = TruthFunction::from_fn(2, |a| a[0].meet(a[1].negate()));
    c.bench_function("synthesize/binary", |b| b.iter(|| synthesize(black_box(&tf))));
}

fn synonymy(c: &mut Criterion) {
    let pair = SynonymPair::named("k3-l3").unwrap();
    let mut group = c.benchmark_group("synonymy");
    group.sample_size(10);
    group.bench_function("k3-l3/bound-5", |b| b.iter(|| check_synonymy(black_box(&pair), 5)));
    group.finish();
}

fn proofs(c: &mut Criterion) {
    let text = include_str!("../../../proofs/distribution.prf");
    let p = parse_proof(text).unwrap();
    c.bench_function("proof/check", |b| b.iter(|| check_proof(black_box(&p))));
    c.bench_function("proof/audit", |b| b.iter(|| soundness_audit(black_box(&p))));
}

criterion_group!(benches, evaluation, consequence, pools, synthesis, synonymy, proofs);
criterion_main!(benches);
