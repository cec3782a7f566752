//! Structure-level certification for the quasi-Hopf flavor: smash products
//! as bicomodule algebras, coinvariants projectors, the Hopf-module
//! decomposition, and the full structure theorem round trips.

use hopfkit::examples::{
    group_algebra, quasi_kz2_twisted, sweedler, trivial_yd_algebra, yd_diag_over_twisted,
    yd_line_over_group_z2, yd_line_over_sweedler,
};
use hopfkit::quasi::{
    bicomodule_of_h, coinvariants_projector, hopf_module_from_yd, schauenburg_decompose,
    structure_theorem_quasi, verify_bicomodule_algebra, verify_bicomodule_morphism,
    verify_twosided_bimodule, BicomoduleWithV, QuasiHopfData, TwoSidedBimoduleData, YdAlgebraData,
};
use hopfkit::{compose, invert_map, kron, Field, HopfError, LinearMap};

fn round_trip_cases() -> Vec<(&'static str, QuasiHopfData, YdAlgebraData)> {
    let f = Field::Rational;
    let mut cases = Vec::new();
    for (name, h) in [
        ("k[Z/2]", group_algebra(2, f).unwrap()),
        ("Sweedler", sweedler(f).unwrap()),
        ("twisted k^(Z/2)", quasi_kz2_twisted(f).unwrap()),
    ] {
        let a = trivial_yd_algebra(&h).unwrap();
        cases.push((name, h, a));
    }
    let (h, a) = yd_line_over_group_z2(f).unwrap();
    cases.push(("line over k[Z/2]", h, a));
    let (h, a) = yd_line_over_sweedler(f).unwrap();
    cases.push(("line over Sweedler", h, a));
    let (h, a) = yd_diag_over_twisted(f).unwrap();
    cases.push(("diagonal over twisted k^(Z/2)", h, a));
    cases
}

#[test]
fn smash_products_are_certified_bicomodule_algebras() {
    for (name, h, a) in round_trip_cases() {
        let (bw, report) = hopfkit::quasi::yd_smash_bicomodule(&h, &a)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(report.overall, "{name}: {:?}", report.failed_ids());
        for id in ["rca1", "rca2", "rca3", "rca4", "lca1", "lca2", "lca3", "lca4", "bca1", "bca2", "bca3", "bca4"] {
            assert!(report.passed(id), "{name}: {id} missing or failed");
        }
        assert!(report.passed("v-alg-map"), "{name}");
        assert!(report.passed("v-rho"), "{name}");
        assert!(report.passed("v-lambda"), "{name}");
        // An independent re-verification agrees.
        assert!(verify_bicomodule_algebra(&h, &bw.b).overall, "{name}");
        assert_eq!(bw.b.alg.dim, a.alg.dim * h.dim(), "{name}");
    }
}

#[test]
fn the_host_algebra_is_a_bicomodule_algebra_over_itself() {
    for h in [
        group_algebra(2, Field::Rational).unwrap(),
        group_algebra(3, Field::Rational).unwrap(),
        sweedler(Field::Rational).unwrap(),
        quasi_kz2_twisted(Field::Rational).unwrap(),
    ] {
        let b = bicomodule_of_h(&h);
        let report = verify_bicomodule_algebra(&h, &b);
        assert!(report.overall, "dim {}: {:?}", h.dim(), report.failed_ids());
        // The identity is a bicomodule morphism B → B.
        let id = LinearMap::identity(h.dim(), h.field());
        assert!(verify_bicomodule_morphism(&h, &id, &b, &b).overall);
    }
}

#[test]
fn structure_theorem_on_the_host_itself_finds_trivial_coinvariants() {
    for (name, h) in [
        ("k[Z/2]", group_algebra(2, Field::Rational).unwrap()),
        ("Sweedler", sweedler(Field::Rational).unwrap()),
        ("twisted k^(Z/2)", quasi_kz2_twisted(Field::Rational).unwrap()),
    ] {
        let b = bicomodule_of_h(&h);
        let v = LinearMap::identity(h.dim(), h.field());
        let thm = structure_theorem_quasi(&h, &BicomoduleWithV { b, v })
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(thm.a.alg.dim, 1, "{name}: H^co(H) must be the ground field");
        assert!(thm.report.overall, "{name}");
        assert!(thm.report.passed("unit-coinvariant"), "{name}");
        assert!(thm.report.passed("psi-invertible"), "{name}");
    }
}

#[test]
fn structure_theorem_round_trips_recover_the_coinvariants_dimension() {
    for (name, h, a) in round_trip_cases() {
        let (bw, _) = hopfkit::quasi::yd_smash_bicomodule(&h, &a).unwrap();
        let thm = structure_theorem_quasi(&h, &bw).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(thm.a.alg.dim, a.alg.dim, "{name}: coinvariants dimension");
        assert!(thm.report.overall, "{name}: {:?}", thm.report.failed_ids());
        // The isomorphism is exact in both directions.
        let db = bw.b.alg.dim;
        let f = h.field();
        assert_eq!(compose(&thm.psi, &thm.psi_inv).unwrap(), LinearMap::identity(db, f), "{name}");
        assert_eq!(compose(&thm.psi_inv, &thm.psi).unwrap(), LinearMap::identity(db, f), "{name}");
        // All six bicomodule-morphism identities and the comparison-map
        // compatibility are certified.
        for id in [
            "alg-map",
            "rho-intertwine",
            "lambda-intertwine",
            "phi-r-push",
            "phi-l-push",
            "phi-lr-push",
            "psi-v-compat",
        ] {
            assert!(thm.report.passed(id), "{name}: {id}");
        }
        // The projector's seven properties are part of the audit trail.
        for id in [
            "e1-idempotent",
            "e2-right-counit",
            "e3-left-action",
            "e4-action-assoc",
            "e5-bimodule-mix",
            "e6-coaction-recovery",
            "e7-image-coinvariance",
        ] {
            assert!(thm.report.passed(id), "{name}: {id}");
        }
    }
}

#[test]
fn hopf_modules_built_from_yd_modules_verify_and_decompose() {
    let f = Field::Rational;
    let mut cases: Vec<(&str, QuasiHopfData, hopfkit::quasi::YdModuleData)> = Vec::new();
    let (h, a) = yd_line_over_group_z2(f).unwrap();
    cases.push(("line over k[Z/2]", h, a.yd_module()));
    let (h, a) = yd_line_over_sweedler(f).unwrap();
    cases.push(("line over Sweedler", h, a.yd_module()));
    let (h, a) = yd_diag_over_twisted(f).unwrap();
    cases.push(("diagonal over twisted k^(Z/2)", h, a.yd_module()));

    for (name, h, v) in cases {
        let m = hopf_module_from_yd(&h, &v);
        let report = verify_twosided_bimodule(&h, &m);
        assert!(report.overall, "{name}: {:?}", report.failed_ids());

        let dec = schauenburg_decompose(&h, &m).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(dec.v.dim, v.dim, "{name}: coinvariants recover the fiber dimension");
        assert!(dec.report.overall, "{name}");

        // The comparison v₀ ↦ p(v₀⊗1) conjugates the original YD structure
        // onto the recovered one exactly.
        let dh = h.dim();
        let dv = v.dim;
        let mut embed = LinearMap::zeros(v.dim * dh, dv, f);
        for (hidx, c) in h.alg.unit.iter_nonzero() {
            for vi in 0..dv {
                embed.set(vi * dh + hidx[0], vi, c.clone());
            }
        }
        let kappa = compose(&dec.projector.splitting.p, &embed).unwrap();
        let kappa_inv = invert_map(&kappa).unwrap();
        for hbasis in 0..dh {
            let act_slice = |t: &hopfkit::Tensor, hb: usize| {
                LinearMap::from_fn(dv, dv, f, |r, c| t.get(&[hb, c, r]).clone())
            };
            let orig = act_slice(&v.action, hbasis);
            let rec = act_slice(&dec.v.action, hbasis);
            assert_eq!(
                compose(&rec, &kappa).unwrap(),
                compose(&kappa, &orig).unwrap(),
                "{name}: action slice {hbasis} fails to conjugate"
            );
        }
        let id_h = LinearMap::identity(dh, f);
        let lhs = compose(&dec.v.coaction, &kappa).unwrap();
        let rhs = compose(&kron(&id_h, &kappa).unwrap(), &v.coaction).unwrap();
        assert_eq!(lhs, rhs, "{name}: coaction fails to conjugate");
        let _ = kappa_inv;
    }
}

#[test]
fn projector_properties_hold_on_the_host_bimodule() {
    // H itself as a two-sided two-cosided Hopf module via multiplication
    // and comultiplication.
    for (name, h) in [
        ("k[Z/4]", group_algebra(4, Field::Rational).unwrap()),
        ("Sweedler", sweedler(Field::Rational).unwrap()),
        ("twisted k^(Z/2)", quasi_kz2_twisted(Field::Rational).unwrap()),
    ] {
        let d = h.dim();
        let lact = h.alg.mul.clone();
        let ract = h.alg.mul.clone();
        let m = TwoSidedBimoduleData {
            dim: d,
            lact,
            ract,
            rho: h.comul_map(),
            lambda: h.comul_map(),
        };
        let proj = coinvariants_projector(&h, &m).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(proj.report.overall, "{name}: {:?}", proj.report.failed_ids());
        assert_eq!(proj.splitting.rank, 1, "{name}: H^co(H) is one-dimensional");
    }
}

#[test]
fn perturbing_the_left_coaction_is_rejected_before_decomposition() {
    let f = Field::Rational;
    let (h, a) = yd_line_over_group_z2(f).unwrap();
    let m = hopf_module_from_yd(&h, &a.yd_module());
    let mut broken = m.clone();
    // Add a stray term to λ(e₀): the right-sided structure is untouched,
    // so the projector still splits, but the λ-side axioms fail.
    broken.lambda.set(3, 0, f.one());
    assert!(coinvariants_projector(&h, &broken).is_ok(), "right side must stay intact");
    let err = schauenburg_decompose(&h, &broken).unwrap_err();
    match err {
        HopfError::Precondition { op, report, .. } => {
            assert_eq!(op, "schauenburg_decompose");
            let failed = report.failed_ids();
            assert!(!failed.is_empty());
            assert!(
                failed.iter().all(|id| matches!(*id, "qb3" | "qb4" | "qb5" | "lambda-bimodule-map")),
                "only λ-side identities may fail, got {failed:?}"
            );
        }
        other => panic!("expected precondition rejection, got {other:?}"),
    }
}

#[test]
fn structure_theorem_rejects_a_broken_comparison_map() {
    let f = Field::Rational;
    let h = group_algebra(2, f).unwrap();
    let b = bicomodule_of_h(&h);
    // v = S is an algebra anti-map; on the commutative k[Z/2] it is an
    // algebra map but fails to intertwine Δ with itself… S(g) = g, so it
    // actually *is* colinear here. Use the counit-collapse map instead:
    // v(h) = ε(h)1, an algebra map that is not right-colinear.
    let mut v = LinearMap::zeros(2, 2, f);
    v.set(0, 0, f.one());
    v.set(0, 1, f.one());
    let err = structure_theorem_quasi(&h, &BicomoduleWithV { b, v }).unwrap_err();
    match err {
        HopfError::Precondition { op, report, .. } => {
            assert_eq!(op, "structure_theorem_quasi");
            assert!(!report.passed("v-rho"));
        }
        other => panic!("expected precondition rejection, got {other:?}"),
    }
}
