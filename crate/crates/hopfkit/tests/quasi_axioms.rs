//! Axiom-level verification of the quasi-Hopf examples, including negative
//! controls whose failing identities are pinned down exactly.

use hopfkit::examples::{
    dual_group_algebra, group_algebra, left_regular_module_algebra, quasi_kz2_twisted, sweedler,
    trivial_yd_algebra, yd_diag_over_twisted, yd_line_over_group_z2, yd_line_over_sweedler,
};
use hopfkit::quasi::{
    build_smash, verify_module_algebra, verify_quasi_hopf, verify_yd, verify_yd_algebra,
    ModuleAlgebraData, QuasiHopfData, YdModuleData,
};
use hopfkit::{Field, LinearMap, Tensor};

#[test]
fn group_algebras_satisfy_all_quasi_hopf_axioms() {
    for n in [2usize, 3, 4] {
        let h = group_algebra(n, Field::Rational).unwrap();
        let report = verify_quasi_hopf(&h);
        assert!(report.overall, "k[Z/{n}] failed: {:?}", report.failed_ids());
        assert_eq!(report.checks.len(), 11);
    }
}

#[test]
fn dual_group_algebras_satisfy_all_quasi_hopf_axioms() {
    for n in [2usize, 3] {
        let h = dual_group_algebra(n, Field::Rational).unwrap();
        let report = verify_quasi_hopf(&h);
        assert!(report.overall, "k^(Z/{n}) failed: {:?}", report.failed_ids());
    }
}

#[test]
fn sweedler_algebra_satisfies_all_quasi_hopf_axioms_over_q_and_gf5() {
    for field in [Field::Rational, Field::prime(5).unwrap()] {
        let h = sweedler(field).unwrap();
        let report = verify_quasi_hopf(&h);
        assert!(report.overall, "Sweedler failed: {:?}", report.failed_ids());
    }
}

#[test]
fn twisted_kz2_satisfies_all_quasi_hopf_axioms() {
    let h = quasi_kz2_twisted(Field::Rational).unwrap();
    let report = verify_quasi_hopf(&h);
    assert!(report.overall, "twisted k^(Z/2) failed: {:?}", report.failed_ids());
    // The associator is genuinely nontrivial.
    assert!(!h.phi.is_zero());
    assert_ne!(h.phi.get(&[1, 1, 1]), &Field::Rational.one());
}

#[test]
fn sweedler_over_gf2_is_rejected() {
    assert!(sweedler(Field::prime(2).unwrap()).is_err());
}

#[test]
fn rescaling_alpha_is_normalized_away() {
    // Feed the twisted example with (2α, β/2); the constructor must
    // normalize back to ε(α) = 1, leaving a verifying structure.
    let h = quasi_kz2_twisted(Field::Rational).unwrap();
    let two = Field::Rational.from_i64(2);
    let half = two.inv().unwrap();
    let scaled = QuasiHopfData::new(
        h.alg.clone(),
        h.comul.clone(),
        h.counit.clone(),
        h.phi.clone(),
        h.phi_inv.clone(),
        h.s.clone(),
        h.s_inv.clone(),
        h.alpha.scale(&two),
        h.beta.scale(&half),
    )
    .unwrap();
    assert_eq!(scaled.alpha, h.alpha);
    assert_eq!(scaled.beta, h.beta);
    assert!(verify_quasi_hopf(&scaled).overall);
}

#[test]
fn pentagon_failure_is_isolated_when_only_the_top_phi_entry_is_wrong() {
    // Start from the lawful twist and set Φ[1][1][1] = 2 instead of −1.
    // The counit constraints on Φ only see entries with some index 0, so
    // q4 still passes, while the pentagon detects the broken cocycle.
    let h = quasi_kz2_twisted(Field::Rational).unwrap();
    let two = Field::Rational.from_i64(2);
    let mut phi = h.phi.clone();
    phi.set(&[1, 1, 1], two.clone());
    let mut phi_inv = h.phi_inv.clone();
    phi_inv.set(&[1, 1, 1], two.inv().unwrap());
    let broken = QuasiHopfData::new(
        h.alg.clone(),
        h.comul.clone(),
        h.counit.clone(),
        phi,
        phi_inv,
        h.s.clone(),
        h.s_inv.clone(),
        h.alpha.clone(),
        h.beta.clone(),
    )
    .unwrap();
    let report = verify_quasi_hopf(&broken);
    assert!(!report.overall);
    assert!(report.passed("q1"));
    assert!(report.passed("q2"));
    assert!(!report.passed("q3"), "pentagon must fail");
    assert!(report.passed("q4"), "counit constraints never see the (1,1,1) entry");
    assert!(report.passed("phi-invertible"));
    let witness = report.check("q3").unwrap().witness.as_ref().unwrap();
    assert!(!witness.lhs.is_empty());
}

#[test]
fn group_like_associator_breaks_the_counit_constraint_not_the_pentagon() {
    // Φ = 1⊗1⊗g on k[Z/2] is multiplicative enough to satisfy the pentagon
    // (g² = 1) but violates the counit constraint and the Zorro equations.
    let h = group_algebra(2, Field::Rational).unwrap();
    let f = Field::Rational;
    let mut phi = Tensor::zeros(&[2, 2, 2], f);
    phi.set(&[0, 0, 1], f.one());
    let broken = QuasiHopfData::new(
        h.alg.clone(),
        h.comul.clone(),
        h.counit.clone(),
        phi.clone(),
        phi,
        h.s.clone(),
        h.s_inv.clone(),
        h.alpha.clone(),
        h.beta.clone(),
    )
    .unwrap();
    let report = verify_quasi_hopf(&broken);
    assert!(!report.overall);
    assert!(report.passed("q1"));
    assert!(report.passed("q3"), "pentagon holds because g is group-like of order 2");
    assert!(!report.passed("q4"));
    assert!(!report.passed("q6"));
}

#[test]
fn trivial_and_line_module_algebras_verify_over_their_hosts() {
    let hosts = [
        group_algebra(2, Field::Rational).unwrap(),
        sweedler(Field::Rational).unwrap(),
        quasi_kz2_twisted(Field::Rational).unwrap(),
    ];
    for h in &hosts {
        let a = trivial_yd_algebra(h).unwrap();
        let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
        let report = verify_module_algebra(h, &ma);
        assert!(report.overall, "trivial A over dim-{} host: {:?}", h.dim(), report.failed_ids());
    }
    let (h, a) = yd_line_over_group_z2(Field::Rational).unwrap();
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    assert!(verify_module_algebra(&h, &ma).overall);
    let (h, a) = yd_line_over_sweedler(Field::Rational).unwrap();
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    assert!(verify_module_algebra(&h, &ma).overall);
}

#[test]
fn yd_module_algebra_examples_pass_the_full_eleven_check_suite() {
    let (h, a) = yd_line_over_group_z2(Field::Rational).unwrap();
    let report = verify_yd_algebra(&h, &a);
    assert!(report.overall, "line over k[Z/2]: {:?}", report.failed_ids());
    assert_eq!(report.checks.len(), 11, "6 module-algebra + 3 YD + unitate + multi");

    let (h, a) = yd_line_over_sweedler(Field::Rational).unwrap();
    let report = verify_yd_algebra(&h, &a);
    assert!(report.overall, "line over Sweedler: {:?}", report.failed_ids());

    let (h, a) = yd_diag_over_twisted(Field::Rational).unwrap();
    let report = verify_yd_algebra(&h, &a);
    assert!(report.overall, "diagonal over twisted k^(Z/2): {:?}", report.failed_ids());

    for host in [
        group_algebra(2, Field::Rational).unwrap(),
        sweedler(Field::Rational).unwrap(),
        quasi_kz2_twisted(Field::Rational).unwrap(),
    ] {
        let a = trivial_yd_algebra(&host).unwrap();
        let report = verify_yd_algebra(&host, &a);
        assert!(report.overall, "trivial YD algebra over dim-{} host: {:?}", host.dim(), report.failed_ids());
    }
}

#[test]
fn left_regular_action_is_not_a_module_algebra_on_sweedler() {
    let h = sweedler(Field::Rational).unwrap();
    let cand = left_regular_module_algebra(&h);
    let report = verify_module_algebra(&h, &cand);
    assert!(!report.overall);
    // h·(ab) ≠ (h₁·a)(h₂·b) and h·1 ≠ ε(h)1 under left multiplication.
    assert!(!report.passed("act-mult"));
    assert!(!report.passed("act-unit"));
    assert!(report.passed("module-assoc"), "left multiplication is still a module action");
}

#[test]
fn regular_coaction_with_left_multiplication_fails_yd_compatibility() {
    // M = H with action = left multiplication and coaction = Δ: the
    // crossing relation fails on noncommutative Sweedler input.
    let h = sweedler(Field::Rational).unwrap();
    let d = h.dim();
    let action = Tensor::from_fn(&[d, d, d], h.field(), |idx| h.alg.mul.get(idx).clone());
    let m = YdModuleData { dim: d, action, coaction: h.comul_map() };
    let report = verify_yd(&h, &m);
    assert!(!report.overall);
    assert!(!report.passed("yd3"));
    assert!(report.passed("module-assoc"));
    assert!(report.passed("yd2"));
}

#[test]
fn smash_products_are_associative_and_unital() {
    // k[y]/(y²) ⋊ k[Z/2]: dimension 4.
    let (h, a) = yd_line_over_group_z2(Field::Rational).unwrap();
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    let smash = build_smash(&h, &ma).unwrap();
    assert_eq!(smash.dim, 4);
    assert_eq!(smash.labels[0], "1#1");

    // k[y]/(y²) ⋊ Sweedler: dimension 8.
    let (h, a) = yd_line_over_sweedler(Field::Rational).unwrap();
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    let smash = build_smash(&h, &ma).unwrap();
    assert_eq!(smash.dim, 8);

    // Diagonal over the twisted k^(Z/2): the nontrivial associator enters
    // the product through Φ⁻¹ and the result is still associative.
    let (h, a) = yd_diag_over_twisted(Field::Rational).unwrap();
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    let smash = build_smash(&h, &ma).unwrap();
    assert_eq!(smash.dim, 4);
}

#[test]
fn smash_over_trivial_associator_reduces_to_the_usual_formula() {
    // Over k[Z/2] with trivial Φ: (a#h)(a'#h') = a(h₁·a') # h₂h'.
    let (h, a) = yd_line_over_group_z2(Field::Rational).unwrap();
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    let smash = build_smash(&h, &ma).unwrap();
    let f = Field::Rational;
    // Basis order: 1#1, 1#g, y#1, y#g.
    // (1#g)(y#1) = (g·y)#g = −y#g.
    let idx_1g = 1usize;
    let idx_y1 = 2usize;
    let idx_yg = 3usize;
    assert_eq!(smash.mul.get(&[idx_1g, idx_y1, idx_yg]), &f.from_i64(-1));
    // (y#1)(y#1) = y²#1 = 0.
    for k in 0..4 {
        assert!(smash.mul.get(&[idx_y1, idx_y1, k]).is_zero());
    }
}

#[test]
fn building_a_smash_from_a_non_module_algebra_is_rejected() {
    let h = sweedler(Field::Rational).unwrap();
    let cand = left_regular_module_algebra(&h);
    let err = build_smash(&h, &cand).unwrap_err();
    match err {
        hopfkit::HopfError::Precondition { op, id, report } => {
            assert_eq!(op, "build_smash");
            assert!(!report.overall);
            assert!(!id.is_empty());
        }
        other => panic!("expected precondition rejection, got {other:?}"),
    }
}

#[test]
fn antipode_defect_is_reported_with_an_exact_witness() {
    // Corrupt S on the Sweedler algebra: S(x) = +gx instead of −gx.
    let h = sweedler(Field::Rational).unwrap();
    let f = Field::Rational;
    let mut s = h.s.clone();
    s.set(3, 1, f.one());
    let s_inv = hopfkit::invert_map(&s).unwrap();
    let broken = QuasiHopfData::new(
        h.alg.clone(),
        h.comul.clone(),
        h.counit.clone(),
        h.phi.clone(),
        h.phi_inv.clone(),
        s,
        s_inv,
        h.alpha.clone(),
        h.beta.clone(),
    )
    .unwrap();
    let report = verify_quasi_hopf(&broken);
    assert!(!report.overall);
    let failed = report.failed_ids();
    assert!(failed.contains(&"q5") || failed.contains(&"antipode"), "failed: {failed:?}");
}

#[test]
fn identity_antipode_on_kz4_fails_only_where_expected() {
    // On k[Z/4], S = id is an algebra map but not the antipode: q5 needs
    // S(g)g = ε(g)1, i.e. g² = 1, which fails for order 4.
    let h = group_algebra(4, Field::Rational).unwrap();
    let f = Field::Rational;
    let id = LinearMap::identity(4, f);
    let broken = QuasiHopfData::new(
        h.alg.clone(),
        h.comul.clone(),
        h.counit.clone(),
        h.phi.clone(),
        h.phi_inv.clone(),
        id.clone(),
        id,
        h.alpha.clone(),
        h.beta.clone(),
    )
    .unwrap();
    let report = verify_quasi_hopf(&broken);
    assert!(!report.overall);
    assert!(!report.passed("q5"));
    assert!(report.passed("q1"));
    assert!(report.passed("q3"));
    assert!(report.passed("antipode"), "id is a (wrong) algebra anti-map on a commutative algebra");
}
