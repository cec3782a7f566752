//! Benchmarks comparing the parallel and sequential verification sweeps on
//! real axiom workloads.
//!
//! Two kinds of measurement:
//!
//! * `sweep/...` groups run the same identity check through both
//!   [`hopfkit::sweep::first_failure_seq`] and (with the default `parallel`
//!   feature) [`hopfkit::sweep::first_failure_par`], so one run reports the
//!   two paths side by side on identical inputs.
//! * `verify/...` and `structure-theorem/...` benches time whole public ops
//!   as shipped, where the internal dispatcher picks the parallel path for
//!   sweep spaces of 64 tuples or more. Re-running with
//!   `cargo bench --no-default-features` profiles the sequential fallback
//!   end to end.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

#[cfg(feature = "parallel")]
use hopfkit::sweep::first_failure_par;
use hopfkit::examples::{
    group_algebra, groupoid_pair, sweedler, weak_self_bicomodule, yd_line_over_group_z2,
};
use hopfkit::quasi::{structure_theorem_quasi, verify_quasi_hopf, yd_smash_bicomodule};
use hopfkit::sweep::first_failure_seq;
use hopfkit::weak::{structure_theorem_weak, verify_weak_hopf};
use hopfkit::{AlgebraData, Elem, Field};

/// The associativity sweep every verification op reduces to: one tuple per
/// basis triple, each rebuilding the two bracketings through `Elem`.
fn assoc_check(alg: &AlgebraData) -> impl Fn(&[usize]) -> bool + Sync + '_ {
    let d = alg.dim;
    move |idx: &[usize]| {
        let e = Elem::basis_tuple(&[d, d, d], idx, alg.field);
        e.mul(&alg.mul, 0).mul(&alg.mul, 0) == e.mul(&alg.mul, 1).mul(&alg.mul, 0)
    }
}

fn bench_sweeps(c: &mut Criterion) {
    let f = Field::Rational;
    let pair3 = groupoid_pair(3, 1, f).unwrap();
    let z12 = group_algebra(12, f).unwrap();
    for (name, alg) in [
        ("assoc-groupoid-pair-3-dim-9", &pair3.alg),
        ("assoc-group-z12-dim-12", &z12.alg),
    ] {
        let d = alg.dim;
        let dims = [d, d, d];
        let check = assoc_check(alg);
        let mut g = c.benchmark_group(format!("sweep/{name}"));
        g.bench_function("sequential", |b| {
            b.iter(|| black_box(first_failure_seq(&dims, &check)))
        });
        #[cfg(feature = "parallel")]
        g.bench_function("parallel", |b| {
            b.iter(|| black_box(first_failure_par(&dims, &check)))
        });
        g.finish();
    }
}

fn bench_verify_ops(c: &mut Criterion) {
    let f = Field::Rational;
    let sw = sweedler(f).unwrap();
    c.bench_function("verify/quasi-hopf-sweedler", |b| {
        b.iter(|| black_box(verify_quasi_hopf(&sw)))
    });
    let pair3 = groupoid_pair(3, 1, f).unwrap();
    c.bench_function("verify/weak-hopf-groupoid-pair-3", |b| {
        b.iter(|| black_box(verify_weak_hopf(&pair3)))
    });
}

fn bench_structure_theorems(c: &mut Criterion) {
    let f = Field::Rational;
    let mut g = c.benchmark_group("structure-theorem");
    g.sample_size(10);
    let (h, a) = yd_line_over_group_z2(f).unwrap();
    let (input, _) = yd_smash_bicomodule(&h, &a).unwrap();
    g.bench_function("quasi-line-over-kz2", |b| {
        b.iter(|| black_box(structure_theorem_quasi(&h, &input).unwrap()))
    });
    let pair2 = groupoid_pair(2, 1, f).unwrap();
    let self_input = weak_self_bicomodule(&pair2);
    g.bench_function("weak-self-groupoid-pair-2", |b| {
        b.iter(|| black_box(structure_theorem_weak(&pair2, &self_input).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, bench_sweeps, bench_verify_ops, bench_structure_theorems);
criterion_main!(benches);
