//! Acceptance suite: one test per release criterion, each printing a single
//! `ACCEPTANCE criterion N: PASS|FAIL` line. All comparisons are exact — no
//! tolerances appear anywhere in this file.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use hopfkit::braided::{braided_smash, structure_theorem_braided, BraidedBicomoduleWithV};
use hopfkit::examples::{
    anyonic_line, anyonic_line_yd_algebra, braided_from_hopf, braided_self_bicomodule,
    braided_yd_from_plain, build_example, catalog, dual_group_algebra, group_algebra,
    groupoid_pair, quasi_kz2_twisted, super_exterior, super_line_yd_algebra, sweedler,
    trivial_yd_algebra, weak_self_bicomodule, yd_diag_over_twisted, yd_line_over_group_z2,
    yd_line_over_sweedler,
};
use hopfkit::format::AlgebraFile;
use hopfkit::mutate::mutation_battery;
use hopfkit::quasi::{
    structure_theorem_quasi, yd_smash_bicomodule, QuasiHopfData, YdAlgebraData,
};
use hopfkit::weak::{
    structure_theorem_weak, verify_weak_comodule_algebra, verify_weak_yd, ComoduleSide,
    WeakComoduleAlgebraData, WeakHopfData, WeakYdModuleData,
};
use hopfkit::{compose, AlgebraData, Field, LinearMap};

/// Run `body`, print the verdict line for criterion `n`, and re-raise any
/// failure so the test still registers as failed.
fn criterion(n: usize, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("ACCEPTANCE criterion {n}: PASS"),
        Err(cause) => {
            println!("ACCEPTANCE criterion {n}: FAIL");
            resume_unwind(cause);
        }
    }
}

/// A mutation is caught when verification reports at least one failing
/// identity or refuses the data outright (precondition/certification error).
fn mutation_caught(mutant: &AlgebraFile) -> bool {
    match mutant.verify() {
        Ok(report) => !report.overall,
        Err(_) => true,
    }
}

#[test]
fn criterion_1_axiom_suites_pass_and_mutations_are_caught() {
    criterion(1, || {
        let f = Field::Rational;
        for entry in catalog() {
            let file = build_example(entry.name, f).unwrap();
            let start = Instant::now();
            let report = file.verify().unwrap();
            let elapsed = start.elapsed();
            assert!(
                report.overall,
                "{}: failing identities {:?}",
                entry.name,
                report.failed_ids()
            );
            assert!(report.failed_ids().is_empty(), "{}", entry.name);
            if entry.dim <= 8 {
                assert!(
                    elapsed < Duration::from_secs(10),
                    "{} verified in {elapsed:?}",
                    entry.name
                );
            }
            let mutants = mutation_battery(&file, 100).unwrap();
            assert_eq!(mutants.len(), 100, "{}", entry.name);
            let caught = mutants.iter().filter(|m| mutation_caught(m)).count();
            assert!(
                caught >= 95,
                "{}: only {caught}/100 single-entry mutations caught",
                entry.name
            );
        }
    });
}

/// The six round-trip cases: the ground field and a graded two-dimensional
/// Yetter–Drinfeld algebra over each of the three reference quasi-Hopf
/// algebras (group algebra of Z/2, its twisted dual, and the four-dimensional
/// small quantum group).
fn quasi_round_trip_cases() -> Vec<(QuasiHopfData, YdAlgebraData)> {
    let f = Field::Rational;
    let mut cases = Vec::new();
    for h in [
        group_algebra(2, f).unwrap(),
        quasi_kz2_twisted(f).unwrap(),
        sweedler(f).unwrap(),
    ] {
        let trivial = trivial_yd_algebra(&h).unwrap();
        cases.push((h, trivial));
    }
    cases.push(yd_line_over_group_z2(f).unwrap());
    cases.push(yd_diag_over_twisted(f).unwrap());
    cases.push(yd_line_over_sweedler(f).unwrap());
    cases
}

#[test]
fn criterion_2_quasi_structure_theorem_round_trip() {
    criterion(2, || {
        let f = Field::Rational;
        let cases = quasi_round_trip_cases();
        assert_eq!(cases.len(), 6);
        for (h, a0) in &cases {
            let start = Instant::now();
            let (input, _) = yd_smash_bicomodule(h, a0).unwrap();
            let st = structure_theorem_quasi(h, &input).unwrap();
            let db = input.b.alg.dim;
            assert_eq!(st.a.alg.dim, a0.alg.dim, "recovered coinvariant dimension");
            assert_eq!(
                compose(&st.psi, &st.psi_inv).unwrap(),
                LinearMap::identity(db, f),
                "psi is not a right inverse"
            );
            assert_eq!(
                compose(&st.psi_inv, &st.psi).unwrap(),
                LinearMap::identity(db, f),
                "psi is not a left inverse"
            );
            for id in [
                "alg-map",
                "rho-intertwine",
                "lambda-intertwine",
                "phi-r-push",
                "phi-l-push",
                "phi-lr-push",
                "psi-v-compat",
            ] {
                assert!(st.report.passed(id), "morphism identity {id} failed");
            }
            assert!(st.report.overall, "{:?}", st.report.failed_ids());
            assert!(
                start.elapsed() < Duration::from_secs(30),
                "case over dim-{} base took {:?}",
                h.dim(),
                start.elapsed()
            );
        }
    });
}

#[test]
fn criterion_3_weak_base_case_recovers_the_target_subalgebra() {
    criterion(3, || {
        let f = Field::Rational;
        for n in 1..=3usize {
            let h = groupoid_pair(n, 1, f).unwrap();
            let input = weak_self_bicomodule(&h);
            let st = structure_theorem_weak(&h, &input).unwrap();
            assert!(st.report.overall, "n={n}: {:?}", st.report.failed_ids());
            assert_eq!(st.splitting.rank, n, "coinvariant rank for n={n}");
            assert_eq!(st.a.alg.dim, n, "recovered algebra dimension for n={n}");
            let dh = h.dim();
            let ds = st.smash.alg.dim;
            assert_eq!(
                compose(&st.phi, &st.phi_inv).unwrap(),
                LinearMap::identity(dh, f)
            );
            assert_eq!(
                compose(&st.phi_inv, &st.phi).unwrap(),
                LinearMap::identity(ds, f)
            );
            if n == 1 {
                // One object and a trivial group: the classical statement,
                // where the coinvariants are the ground field itself.
                assert_eq!(dh, 1);
                assert_eq!(st.a.alg.dim, 1);
            }
        }
    });
}

/// Shared plain-context cases: ordinary Hopf data (trivial associator) with a
/// Yetter–Drinfeld algebra, runnable through both the quasi and the braided
/// pipelines.
fn shared_plain_cases() -> Vec<(QuasiHopfData, YdAlgebraData)> {
    let f = Field::Rational;
    let mut cases = vec![
        yd_line_over_group_z2(f).unwrap(),
        yd_line_over_sweedler(f).unwrap(),
    ];
    for h in [
        group_algebra(2, f).unwrap(),
        group_algebra(4, f).unwrap(),
        dual_group_algebra(3, f).unwrap(),
        sweedler(f).unwrap(),
    ] {
        let trivial = trivial_yd_algebra(&h).unwrap();
        cases.push((h, trivial));
    }
    cases
}

#[test]
fn criterion_4_braided_outputs_match_the_quasi_pipeline_entrywise() {
    criterion(4, || {
        for (h, a) in shared_plain_cases() {
            // Quasi pipeline.
            let (input, _) = yd_smash_bicomodule(&h, &a).unwrap();
            let qst = structure_theorem_quasi(&h, &input).unwrap();
            // Braided pipeline in the plain context on the same data.
            let (ctx, hb) = braided_from_hopf(&h).unwrap();
            let ab = braided_yd_from_plain(&a);
            let smash = braided_smash(&ctx, &hb, &ab).unwrap();
            assert_eq!(smash.alg.mul, input.b.alg.mul, "smash multiplication tensors");
            assert_eq!(smash.rho, input.b.rho, "right coactions");
            assert_eq!(smash.lambda, input.b.lambda, "left coactions");
            assert_eq!(smash.j, input.v, "comparison maps");
            let binput = BraidedBicomoduleWithV {
                obj: smash.obj.clone(),
                alg: smash.alg.clone(),
                rho: smash.rho.clone(),
                lambda: smash.lambda.clone(),
                v: smash.j.clone(),
            };
            let bst = structure_theorem_braided(&ctx, &hb, &binput).unwrap();
            assert_eq!(bst.e, qst.e, "coinvariants projectors");
            assert_eq!(bst.splitting.rank, qst.splitting.rank, "splitting ranks");
            assert_eq!(bst.splitting.i, qst.splitting.i, "splitting sections");
            assert_eq!(bst.splitting.p, qst.splitting.p, "splitting retractions");
            assert_eq!(bst.omega, qst.psi, "structure isomorphisms");
            assert_eq!(bst.omega_inv, qst.psi_inv, "inverse isomorphisms");
        }
    });
}

#[test]
fn criterion_5_projector_laws_hold_on_every_constructed_bimodule() {
    criterion(5, || {
        let f = Field::Rational;
        // The seven E-properties certified on every quasi structure run.
        let quasi_ids = [
            "e1-idempotent",
            "e2-right-counit",
            "e3-left-action",
            "e4-action-assoc",
            "e5-bimodule-mix",
            "e6-coaction-recovery",
            "e7-image-coinvariance",
        ];
        for (h, a0) in quasi_round_trip_cases() {
            let (input, _) = yd_smash_bicomodule(&h, &a0).unwrap();
            let st = structure_theorem_quasi(&h, &input).unwrap();
            for id in quasi_ids {
                assert!(st.report.passed(id), "{id} failed over dim-{}", h.dim());
            }
        }
        // Braided analogues on every constructed braided bicomodule.
        let braided_ids = ["eqead", "iequalizer", "pcoequalizer"];
        let mut braided_reports = Vec::new();
        for (ctx, h, a) in [
            super_line_yd_algebra(f).unwrap(),
            anyonic_line_yd_algebra(f).unwrap(),
        ] {
            let smash = braided_smash(&ctx, &h, &a).unwrap();
            let input = BraidedBicomoduleWithV {
                obj: smash.obj.clone(),
                alg: smash.alg.clone(),
                rho: smash.rho.clone(),
                lambda: smash.lambda.clone(),
                v: smash.j.clone(),
            };
            braided_reports.push(structure_theorem_braided(&ctx, &h, &input).unwrap().report);
        }
        for (ctx, h) in [super_exterior(1, f).unwrap(), anyonic_line(f).unwrap()] {
            let input = braided_self_bicomodule(&h);
            braided_reports.push(structure_theorem_braided(&ctx, &h, &input).unwrap().report);
        }
        for (h, a) in shared_plain_cases() {
            let (ctx, hb) = braided_from_hopf(&h).unwrap();
            let smash = braided_smash(&ctx, &hb, &braided_yd_from_plain(&a)).unwrap();
            let input = BraidedBicomoduleWithV {
                obj: smash.obj.clone(),
                alg: smash.alg.clone(),
                rho: smash.rho.clone(),
                lambda: smash.lambda.clone(),
                v: smash.j.clone(),
            };
            braided_reports.push(structure_theorem_braided(&ctx, &hb, &input).unwrap().report);
        }
        for report in &braided_reports {
            for id in braided_ids {
                assert!(report.passed(id), "{id} failed in {}", report.op);
            }
        }
        // The transported idempotent laws on the weak side.
        for n in 1..=3usize {
            let h = groupoid_pair(n, 1, f).unwrap();
            let st = structure_theorem_weak(&h, &weak_self_bicomodule(&h)).unwrap();
            for id in ["e-idempotent", "coinvariants-subspace", "tria-assoc"] {
                assert!(st.report.passed(id), "{id} failed for n={n}");
            }
        }
    });
}

/// Rebuild the Hopf-shaped tuple (mul, unit, comul, counit, S, S⁻¹) carried by
/// a file — its own tensors for Hopf kinds, the embedded base otherwise. The
/// constructors validate shapes only, so unlawful mutated data still builds.
fn hopf_shadow(file: &AlgebraFile) -> WeakHopfData {
    let hf: &AlgebraFile = file.base.as_deref().unwrap_or(file);
    let f = hf.field.to_field().unwrap();
    let d = hf.dim;
    let t = &hf.tensors;
    let alg = AlgebraData::new(
        hf.labels.clone(),
        t.mul.as_ref().unwrap().to_tensor_shaped(f, &[d, d, d], "mul").unwrap(),
        t.unit.as_ref().unwrap().to_tensor_shaped(f, &[d], "unit").unwrap(),
    )
    .unwrap();
    WeakHopfData::new(
        alg,
        t.comul.as_ref().unwrap().to_tensor_shaped(f, &[d, d, d], "comul").unwrap(),
        t.counit.as_ref().unwrap().to_tensor_shaped(f, &[d], "counit").unwrap(),
        t.s.as_ref().unwrap().to_map(f, &[d], &[d], "s").unwrap(),
        t.s_inv.as_ref().unwrap().to_map(f, &[d], &[d], "s_inv").unwrap(),
    )
    .unwrap()
}

/// Assert that the grouped alternative-form identities share one verdict on
/// the Hopf-shaped tuple carried by `file`: the three weak-comodule forms on
/// the regular left coaction, and the two weak Yetter–Drinfeld forms on the
/// regular action/coaction pair.
fn grouped_verdicts_agree(file: &AlgebraFile, what: &str) {
    let h = hopf_shadow(file);
    let a = WeakComoduleAlgebraData {
        alg: h.alg.clone(),
        rho: None,
        lambda: Some(h.comul_map()),
    };
    let comod = verify_weak_comodule_algebra(&h, &a, ComoduleSide::Left);
    assert!(
        comod.passed("equiv-21b-nsw-nv"),
        "{what}: comodule forms disagree"
    );
    let m = WeakYdModuleData {
        dim: h.dim(),
        action: h.alg.mul.clone(),
        coaction: h.comul_map(),
    };
    let yd = verify_weak_yd(&h, &m);
    assert!(yd.passed("equiv-wyd2-wyd3"), "{what}: yd forms disagree");
}

#[test]
fn criterion_6_alternative_forms_share_one_verdict_under_mutation() {
    criterion(6, || {
        let f = Field::Rational;
        for entry in catalog() {
            let file = build_example(entry.name, f).unwrap();
            grouped_verdicts_agree(&file, entry.name);
            for (i, mutant) in mutation_battery(&file, 100).unwrap().iter().enumerate() {
                grouped_verdicts_agree(mutant, &format!("{} mutant {i}", entry.name));
            }
        }
    });
}

fn hopfkit_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn emit_example(name: &str, path: &Path) {
    let out = hopfkit_bin(&["examples", "emit", name, "--out", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "emit {name}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn criterion_7_structure_theorem_runs_are_byte_identical() {
    criterion(7, || {
        let dir = tempfile::tempdir().unwrap();
        for (variant, h_name, b_name) in [
            ("quasi", "quasi-kz2-twisted", "smash-diag-twisted"),
            ("weak", "groupoid-pair-2", "self-groupoid-pair-2"),
            ("braided", "super-line", "smash-super-line"),
        ] {
            let h = dir.path().join(format!("{variant}-H.json"));
            let b = dir.path().join(format!("{variant}-B.json"));
            emit_example(h_name, &h);
            emit_example(b_name, &b);
            let mut runs = Vec::new();
            for tag in ["first", "second"] {
                let out_dir = dir.path().join(format!("{variant}-{tag}"));
                let out = hopfkit_bin(&[
                    "structure-theorem",
                    h.to_str().unwrap(),
                    b.to_str().unwrap(),
                    "--variant",
                    variant,
                    "--out",
                    out_dir.to_str().unwrap(),
                ]);
                assert_eq!(
                    out.status.code(),
                    Some(0),
                    "{variant}: {}",
                    String::from_utf8_lossy(&out.stderr)
                );
                let bundle: Vec<Vec<u8>> = ["A.json", "iso.json", "report.json"]
                    .iter()
                    .map(|name| std::fs::read(out_dir.join(name)).unwrap())
                    .collect();
                runs.push((bundle, out.stdout));
            }
            assert_eq!(runs[0], runs[1], "{variant}: runs differ byte-for-byte");
        }
    });
}
