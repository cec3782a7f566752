//! Quasi-Hopf algebras: axiom verification, module algebras, smash
//! products, Yetter–Drinfeld structures, bicomodule algebras, coinvariants,
//! and the smash-product structure theorem.
//!
//! A quasi-Hopf algebra is an associative unital algebra H with algebra maps
//! Δ: H → H⊗H and ε: H → k that are coassociative only up to conjugation by
//! an invertible associator Φ ∈ H⊗H⊗H, together with an anti-automorphism S
//! and elements α, β satisfying the antipode equations. Throughout,
//! structure constants are exact and every identity is checked on all basis
//! tuples.

use crate::algebra::{check_algebra_map, AlgebraData};
use crate::elem::{Elem, SlotOp};
use crate::error::{HopfError, Result};
use crate::linmap::{compose, invert_map, kron, split_idempotent, LinearMap, Splitting};
use crate::report::{Report, Runner};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;

/// A quasi-Hopf algebra given by exact structure constants.
///
/// `comul[h][i][j]` is the coefficient of `e_i ⊗ e_j` in Δ(e_h); `phi` and
/// `phi_inv` are the associator Φ and its inverse as elements of H⊗H⊗H;
/// `alpha`/`beta` are the antipode elements. Construction normalizes the
/// gauge so that ε(α) = 1 whenever ε(α) ≠ 0 (the pair (α,β) may always be
/// rescaled by (c, 1/c) without changing the structure).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiHopfData {
    /// Underlying associative algebra.
    pub alg: AlgebraData,
    /// Comultiplication tensor, shape `[d, d, d]`.
    pub comul: Tensor,
    /// Counit vector, shape `[d]`.
    pub counit: Tensor,
    /// Associator Φ ∈ H⊗H⊗H, shape `[d, d, d]`.
    pub phi: Tensor,
    /// Inverse associator, shape `[d, d, d]`.
    pub phi_inv: Tensor,
    /// Antipode as a matrix (column h = S(e_h)).
    pub s: LinearMap,
    /// Inverse antipode.
    pub s_inv: LinearMap,
    /// Antipode element α, shape `[d]`.
    pub alpha: Tensor,
    /// Antipode element β, shape `[d]`.
    pub beta: Tensor,
}

impl QuasiHopfData {
    /// Validate shapes, normalize the (α, β) gauge, and build.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alg: AlgebraData,
        comul: Tensor,
        counit: Tensor,
        phi: Tensor,
        phi_inv: Tensor,
        s: LinearMap,
        s_inv: LinearMap,
        alpha: Tensor,
        beta: Tensor,
    ) -> Result<QuasiHopfData> {
        let d = alg.dim;
        for (name, t, shape) in [
            ("comul", &comul, vec![d, d, d]),
            ("counit", &counit, vec![d]),
            ("phi", &phi, vec![d, d, d]),
            ("phi_inv", &phi_inv, vec![d, d, d]),
            ("alpha", &alpha, vec![d]),
            ("beta", &beta, vec![d]),
        ] {
            if t.shape() != shape {
                return Err(HopfError::Dim {
                    context: format!("QuasiHopfData {name}"),
                    detail: format!("{:?}, expected {shape:?}", t.shape()),
                });
            }
        }
        if s.rows() != d || s.cols() != d || s_inv.rows() != d || s_inv.cols() != d {
            return Err(HopfError::Dim {
                context: "QuasiHopfData antipode".into(),
                detail: "S and S⁻¹ must be d×d".into(),
            });
        }
        let mut data = QuasiHopfData { alg, comul, counit, phi, phi_inv, s, s_inv, alpha, beta };
        // Gauge normalization: (α, β) ↦ (α/c, cβ) with c = ε(α), when ε(α)
        // is invertible. For lawful data ε(α)ε(β) = 1, so this forces
        // ε(α) = ε(β) = 1.
        let c = data.eps_of(&data.alpha);
        if !c.is_zero() {
            let c_inv = c.inv()?;
            data.alpha = data.alpha.scale(&c_inv);
            data.beta = data.beta.scale(&c);
        }
        Ok(data)
    }

    /// An ordinary Hopf algebra viewed as quasi-Hopf: Φ = 1⊗1⊗1, α = β = 1.
    pub fn from_hopf(alg: AlgebraData, comul: Tensor, counit: Tensor, s: LinearMap) -> Result<QuasiHopfData> {
        let unit = alg.unit.clone();
        let phi = unit.outer(&unit)?.outer(&unit)?;
        let s_inv = invert_map(&s)?;
        QuasiHopfData::new(alg, comul, counit, phi.clone(), phi, s, s_inv, unit.clone(), unit)
    }

    /// Carrier dimension.
    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    /// Base field.
    pub fn field(&self) -> Field {
        self.alg.field
    }

    /// ε evaluated on a coordinate vector.
    pub fn eps_of(&self, v: &Tensor) -> Scalar {
        let mut acc = self.field().zero();
        for (idx, c) in v.iter_nonzero() {
            acc = acc.add(&c.mul(self.counit.get(&idx)));
        }
        acc
    }

    /// ε(e_h).
    pub fn eps_basis(&self, h: usize) -> Scalar {
        self.counit.get(&[h]).clone()
    }

    /// The unit 1_H as a one-slot element.
    pub fn unit_elem(&self) -> Elem {
        self.alg.unit_elem()
    }

    /// The associator as a three-slot element.
    pub fn phi_elem(&self) -> Elem {
        Elem::from_tensor(&self.phi)
    }

    /// The inverse associator as a three-slot element.
    pub fn phi_inv_elem(&self) -> Elem {
        Elem::from_tensor(&self.phi_inv)
    }

    /// ε as a 1×d map.
    pub fn counit_map(&self) -> LinearMap {
        LinearMap::from_tensor(&self.counit, 1)
    }

    /// Δ as a d²×d map.
    pub fn comul_map(&self) -> LinearMap {
        LinearMap::from_tensor(&self.comul, 1)
    }

    /// The element q_R = q¹ ⊗ q² = X¹ ⊗ S⁻¹(αX³)X² used by the canonical
    /// coinvariants projector.
    pub fn q_r_elem(&self) -> Elem {
        self.phi_elem()
            .tensor(&Elem::from_tensor(&self.alpha))
            .move_slot(3, 2) // (X1, X2, α, X3)
            .mul(&self.alg.mul, 2) // (X1, X2, αX3)
            .map1(&self.s_inv, 2) // (X1, X2, S⁻¹(αX3))
            .move_slot(2, 1) // (X1, S⁻¹(αX3), X2)
            .mul(&self.alg.mul, 1) // (X1, S⁻¹(αX3)·X2)
    }
}

/// A left H-module algebra: an algebra A with an H-action under which the
/// multiplication is associative up to the associator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAlgebraData {
    /// Underlying algebra A (associativity replaced by the Φ-twisted law).
    pub alg: AlgebraData,
    /// Action tensor, shape `[d_H, d_A, d_A]`.
    pub action: Tensor,
}

/// A left Yetter–Drinfeld module: H-action plus H-coaction compatible up to
/// the associator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YdModuleData {
    /// Carrier dimension.
    pub dim: usize,
    /// Action tensor, shape `[d_H, d_M, d_M]`.
    pub action: Tensor,
    /// Coaction M → H⊗M as a (d_H·d_M)×d_M map.
    pub coaction: LinearMap,
}

/// A Yetter–Drinfeld module algebra: module algebra + YD module + the two
/// compatibility laws for the coaction against the multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YdAlgebraData {
    /// Underlying algebra A.
    pub alg: AlgebraData,
    /// Action tensor, shape `[d_H, d_A, d_A]`.
    pub action: Tensor,
    /// Coaction A → H⊗A.
    pub coaction: LinearMap,
}

impl YdAlgebraData {
    /// Forget the multiplication.
    pub fn yd_module(&self) -> YdModuleData {
        YdModuleData { dim: self.alg.dim, action: self.action.clone(), coaction: self.coaction.clone() }
    }
}

/// A two-sided two-cosided Hopf module over a quasi-Hopf algebra: an
/// H-bimodule with bimodule-map coactions on both sides, coassociative up to
/// Φ, and with the mixed coassociativity law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedBimoduleData {
    /// Carrier dimension.
    pub dim: usize,
    /// Left action, shape `[d_H, d_M, d_M]`.
    pub lact: Tensor,
    /// Right action, shape `[d_M, d_H, d_M]`.
    pub ract: Tensor,
    /// Right coaction M → M⊗H.
    pub rho: LinearMap,
    /// Left coaction M → H⊗M.
    pub lambda: LinearMap,
}

/// A bicomodule algebra over a quasi-Hopf algebra: an associative algebra B
/// with two-sided coactions, each an algebra map, coassociative up to three
/// invertible mixed associators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicomoduleAlgebraData {
    /// Underlying associative algebra B.
    pub alg: AlgebraData,
    /// Right coaction B → B⊗H.
    pub rho: LinearMap,
    /// Left coaction B → H⊗B.
    pub lambda: LinearMap,
    /// Right associator Φ_ρ ∈ B⊗H⊗H, shape `[d_B, d_H, d_H]`.
    pub phi_r: Tensor,
    /// Inverse of Φ_ρ.
    pub phi_r_inv: Tensor,
    /// Left associator Φ_λ ∈ H⊗H⊗B, shape `[d_H, d_H, d_B]`.
    pub phi_l: Tensor,
    /// Inverse of Φ_λ.
    pub phi_l_inv: Tensor,
    /// Mixed associator Φ_{λ,ρ} ∈ H⊗B⊗H, shape `[d_H, d_B, d_H]`.
    pub phi_lr: Tensor,
    /// Inverse of Φ_{λ,ρ}.
    pub phi_lr_inv: Tensor,
}

/// H itself as a bicomodule algebra: both coactions are Δ and all three
/// associators are Φ.
pub fn bicomodule_of_h(h: &QuasiHopfData) -> BicomoduleAlgebraData {
    let comul = h.comul_map();
    BicomoduleAlgebraData {
        alg: h.alg.clone(),
        rho: comul.clone(),
        lambda: comul,
        phi_r: h.phi.clone(),
        phi_r_inv: h.phi_inv.clone(),
        phi_l: h.phi.clone(),
        phi_l_inv: h.phi_inv.clone(),
        phi_lr: h.phi.clone(),
        phi_lr_inv: h.phi_inv.clone(),
    }
}

/// Verify the full quasi-Hopf axiom system (11 identities).
///
/// Entries, in order: `assoc-unital`, `delta-alg-map`, `eps-alg-map`,
/// `q1` (Δ coassociative up to Φ), `q2` (counit), `q3` (pentagon),
/// `q4` (counit of Φ), `q5` (antipode against α and β), `q6` (Zorro
/// equations), `phi-invertible`, `antipode` (anti-automorphism, S∘S⁻¹,
/// ε∘S = ε, S(1) = 1).
pub fn verify_quasi_hopf(h: &QuasiHopfData) -> Report {
    let mut r = Runner::new("verify_quasi_hopf");
    run_quasi_checks(h, &mut r);
    r.finish()
}

fn run_quasi_checks(h: &QuasiHopfData, r: &mut Runner) {
    let d = h.dim();
    let f = h.field();
    let mul = &h.alg.mul;
    let hh = [d, d];

    h.alg.check_assoc_unital(r, "assoc-unital");

    r.probe("delta-alg-map", |p| {
        p.elem_eq(&hh, |idx| {
            let e = Elem::basis_tuple(&hh, idx, f);
            let lhs = e.mul(mul, 0).coprod(&h.comul, 0);
            let rhs = e
                .coprod(&h.comul, 0) // (h1, h2, h')
                .coprod(&h.comul, 2) // (h1, h2, h'1, h'2)
                .move_slot(2, 1) // (h1, h'1, h2, h'2)
                .mul(mul, 0)
                .mul(mul, 1);
            (lhs, rhs)
        });
        p.elem_eq(&[], |_| {
            (h.unit_elem().coprod(&h.comul, 0), h.unit_elem().tensor(&h.unit_elem()))
        });
    });

    r.probe("eps-alg-map", |p| {
        p.elem_eq(&hh, |idx| {
            let e = Elem::basis_tuple(&hh, idx, f);
            let lhs = e.mul(mul, 0).counit(&h.counit, 0);
            let rhs = e.counit(&h.counit, 1).counit(&h.counit, 0);
            (lhs, rhs)
        });
        p.elem_eq(&[], |_| {
            (h.unit_elem().counit(&h.counit, 0), Elem::scalar_one(f))
        });
    });

    let mul3 = [SlotOp::Mul(mul), SlotOp::Mul(mul), SlotOp::Mul(mul)];
    r.elem_eq("q1", &[d], |idx| {
        let dd = Elem::basis(d, idx[0], f).coprod(&h.comul, 0);
        let lhs = dd.coprod(&h.comul, 1).pointwise(&h.phi_elem(), &mul3);
        let rhs = h.phi_elem().pointwise(&dd.coprod(&h.comul, 0), &mul3);
        (lhs, rhs)
    });

    r.probe("q2", |p| {
        p.elem_eq(&[d], |idx| {
            let e = Elem::basis(d, idx[0], f);
            (e.coprod(&h.comul, 0).counit(&h.counit, 1), e.clone())
        });
        p.elem_eq(&[d], |idx| {
            let e = Elem::basis(d, idx[0], f);
            (e.coprod(&h.comul, 0).counit(&h.counit, 0), e.clone())
        });
    });

    r.elem_eq("q3", &[], |_| {
        let phi = h.phi_elem();
        let mul4 = [SlotOp::Mul(mul), SlotOp::Mul(mul), SlotOp::Mul(mul), SlotOp::Mul(mul)];
        let lhs = h
            .unit_elem()
            .tensor(&phi)
            .pointwise(&phi.coprod(&h.comul, 1), &mul4)
            .pointwise(&phi.tensor(&h.unit_elem()), &mul4);
        let rhs = phi.coprod(&h.comul, 2).pointwise(&phi.coprod(&h.comul, 0), &mul4);
        (lhs, rhs)
    });

    r.probe("q4", |p| {
        let one_one = h.unit_elem().tensor(&h.unit_elem());
        for slot in [1usize, 0, 2] {
            p.elem_eq(&[], |_| (h.phi_elem().counit(&h.counit, slot), one_one.clone()));
        }
    });

    let alpha_e = Elem::from_tensor(&h.alpha);
    let beta_e = Elem::from_tensor(&h.beta);
    r.probe("q5", |p| {
        p.elem_eq(&[d], |idx| {
            let lhs = Elem::basis(d, idx[0], f)
                .coprod(&h.comul, 0) // (h1, h2)
                .map1(&h.s, 0) // (S(h1), h2)
                .tensor(&alpha_e) // (S(h1), h2, α)
                .move_slot(2, 1) // (S(h1), α, h2)
                .mul(mul, 0)
                .mul(mul, 0);
            (lhs, alpha_e.scale(&h.eps_basis(idx[0])))
        });
        p.elem_eq(&[d], |idx| {
            let lhs = Elem::basis(d, idx[0], f)
                .coprod(&h.comul, 0) // (h1, h2)
                .map1(&h.s, 1) // (h1, S(h2))
                .tensor(&beta_e) // (h1, S(h2), β)
                .move_slot(2, 1) // (h1, β, S(h2))
                .mul(mul, 0)
                .mul(mul, 0);
            (lhs, beta_e.scale(&h.eps_basis(idx[0])))
        });
    });

    r.probe("q6", |p| {
        // X¹ β S(X²) α X³ = 1
        p.elem_eq(&[], |_| {
            let lhs = h
                .phi_elem()
                .map1(&h.s, 1) // (X1, S(X2), X3)
                .tensor(&beta_e)
                .tensor(&alpha_e) // (X1, S(X2), X3, β, α)
                .move_slot(3, 1) // (X1, β, S(X2), X3, α)
                .move_slot(4, 3) // (X1, β, S(X2), α, X3)
                .mul(mul, 0)
                .mul(mul, 0)
                .mul(mul, 0)
                .mul(mul, 0);
            (lhs, h.unit_elem())
        });
        // S(x¹) α x² β S(x³) = 1
        p.elem_eq(&[], |_| {
            let lhs = h
                .phi_inv_elem()
                .map1(&h.s, 0)
                .map1(&h.s, 2) // (S(x1), x2, S(x3))
                .tensor(&alpha_e)
                .tensor(&beta_e) // (S(x1), x2, S(x3), α, β)
                .move_slot(3, 1) // (S(x1), α, x2, S(x3), β)
                .move_slot(4, 3) // (S(x1), α, x2, β, S(x3))
                .mul(mul, 0)
                .mul(mul, 0)
                .mul(mul, 0)
                .mul(mul, 0);
            (lhs, h.unit_elem())
        });
    });

    r.probe("phi-invertible", |p| {
        let one3 = h.unit_elem().tensor(&h.unit_elem()).tensor(&h.unit_elem());
        p.elem_eq(&[], |_| (h.phi_elem().pointwise(&h.phi_inv_elem(), &mul3), one3.clone()));
        p.elem_eq(&[], |_| (h.phi_inv_elem().pointwise(&h.phi_elem(), &mul3), one3.clone()));
    });

    r.probe("antipode", |p| {
        // S(hh') = S(h')S(h)
        p.elem_eq(&hh, |idx| {
            let e = Elem::basis_tuple(&hh, idx, f);
            let lhs = e.mul(mul, 0).map1(&h.s, 0);
            let rhs = e.map1(&h.s, 0).map1(&h.s, 1).move_slot(1, 0).mul(mul, 0);
            (lhs, rhs)
        });
        // S(1) = 1
        p.elem_eq(&[], |_| (h.unit_elem().map1(&h.s, 0), h.unit_elem()));
        // S and S⁻¹ are mutually inverse
        let id = LinearMap::identity(d, f);
        p.map_eq(&compose(&h.s, &h.s_inv).expect("square"), &id);
        p.map_eq(&compose(&h.s_inv, &h.s).expect("square"), &id);
        // ε ∘ S = ε
        let eps = h.counit_map();
        p.map_eq(&compose(&eps, &h.s).expect("eps∘S"), &eps);
    });
}

/// Verify that A is a left H-module algebra (6 identities):
/// `module-assoc`, `module-unit`, `ma1` (Φ-twisted associativity),
/// `alg-unit`, `act-mult`, `act-unit`.
pub fn verify_module_algebra(h: &QuasiHopfData, a: &ModuleAlgebraData) -> Report {
    let mut r = Runner::new("verify_module_algebra");
    run_module_algebra_checks(h, a, &mut r);
    r.finish()
}

fn run_module_algebra_checks(h: &QuasiHopfData, a: &ModuleAlgebraData, r: &mut Runner) {
    let dh = h.dim();
    let da = a.alg.dim;
    let f = h.field();
    let mul_a = &a.alg.mul;
    let act = &a.action;

    r.elem_eq("module-assoc", &[dh, dh, da], |idx| {
        let e = Elem::basis_tuple(&[dh, dh, da], idx, f);
        (e.mul(&h.alg.mul, 0).act(act, 0), e.act(act, 1).act(act, 0))
    });

    r.elem_eq("module-unit", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        (h.unit_elem().tensor(&e).act(act, 0), e.clone())
    });

    r.elem_eq("ma1", &[da, da, da], |idx| {
        let e = Elem::basis_tuple(&[da, da, da], idx, f);
        let lhs = e.mul(mul_a, 0).mul(mul_a, 0);
        let rhs = h
            .phi_elem()
            .tensor(&e) // (X1, X2, X3, a, a', a'')
            .move_slot(3, 1) // (X1, a, X2, X3, a', a'')
            .act(act, 0) // (X1·a, X2, X3, a', a'')
            .move_slot(3, 2) // (X1·a, X2, a', X3, a'')
            .act(act, 1) // (X1·a, X2·a', X3, a'')
            .act(act, 2) // (X1·a, X2·a', X3·a'')
            .mul(mul_a, 1)
            .mul(mul_a, 0);
        (lhs, rhs)
    });

    r.probe("alg-unit", |p| {
        let one_a = a.alg.unit_elem();
        p.elem_eq(&[da], |idx| {
            let e = Elem::basis(da, idx[0], f);
            (one_a.tensor(&e).mul(mul_a, 0), e.clone())
        });
        p.elem_eq(&[da], |idx| {
            let e = Elem::basis(da, idx[0], f);
            (e.tensor(&one_a).mul(mul_a, 0), e.clone())
        });
    });

    r.elem_eq("act-mult", &[dh, da, da], |idx| {
        let e = Elem::basis_tuple(&[dh, da, da], idx, f);
        let lhs = e.mul(mul_a, 1).act(act, 0);
        let rhs = e
            .coprod(&h.comul, 0) // (h1, h2, a, b)
            .move_slot(2, 1) // (h1, a, h2, b)
            .act(act, 0) // (h1·a, h2, b)
            .act(act, 1) // (h1·a, h2·b)
            .mul(mul_a, 0);
        (lhs, rhs)
    });

    r.elem_eq("act-unit", &[dh], |idx| {
        let e = Elem::basis(dh, idx[0], f);
        let lhs = e.tensor(&a.alg.unit_elem()).act(act, 0);
        (lhs, a.alg.unit_elem().scale(&h.eps_basis(idx[0])))
    });
}

/// The smash product A#H of a module algebra with H, on A⊗H with product
/// (a#h)(a'#h') = (x¹·a)(x²h₁·a') # x³h₂h'. Associativity and unitality of
/// the result are certified; the module-algebra laws are a precondition.
pub fn build_smash(h: &QuasiHopfData, a: &ModuleAlgebraData) -> Result<AlgebraData> {
    let pre = verify_module_algebra(h, a);
    if !pre.overall {
        let id = pre.first_failure().expect("failed report has a failure").id.clone();
        return Err(HopfError::Precondition { op: "build_smash".into(), id, report: Box::new(pre) });
    }
    let smash = smash_algebra_unchecked(h, a);
    let mut r = Runner::new("build_smash");
    smash.check_assoc_unital(&mut r, "smash-assoc-unital");
    let report = r.finish();
    if !report.overall {
        return Err(HopfError::Certification {
            op: "build_smash".into(),
            id: "smash-assoc-unital".into(),
            report: Box::new(report),
        });
    }
    Ok(smash)
}

fn smash_algebra_unchecked(h: &QuasiHopfData, a: &ModuleAlgebraData) -> AlgebraData {
    let dh = h.dim();
    let da = a.alg.dim;
    let f = h.field();
    let db = da * dh;
    let dims = [da, dh, da, dh];
    let mut mul = Tensor::zeros(&[db, db, db], f);
    for ai in 0..da {
        for hi in 0..dh {
            for aj in 0..da {
                for hj in 0..dh {
                    let prod = Elem::from_tensor(&h.phi_inv)
                        .tensor(&Elem::basis_tuple(&dims, &[ai, hi, aj, hj], f))
                        // (x1, x2, x3, a, h, a', h')
                        .coprod(&h.comul, 4) // (x1, x2, x3, a, h1, h2, a', h')
                        .move_slot(4, 2) // (x1, x2, h1, x3, a, h2, a', h')
                        .mul(&h.alg.mul, 1) // (x1, x2h1, x3, a, h2, a', h')
                        .move_slot(5, 2) // (x1, x2h1, a', x3, a, h2, h')
                        .act(&a.action, 1) // (x1, (x2h1)·a', x3, a, h2, h')
                        .move_slot(3, 1) // (x1, a, (x2h1)·a', x3, h2, h')
                        .act(&a.action, 0) // (x1·a, (x2h1)·a', x3, h2, h')
                        .mul(&a.alg.mul, 0) // (A-part, x3, h2, h')
                        .mul(&h.alg.mul, 1) // (A-part, x3h2, h')
                        .mul(&h.alg.mul, 1); // (A-part, x3h2h')
                    for (idx, c) in prod.to_tensor().iter_nonzero() {
                        mul.set(&[ai * dh + hi, aj * dh + hj, idx[0] * dh + idx[1]], c.clone());
                    }
                }
            }
        }
    }
    let unit = a.alg.unit.outer(&h.alg.unit).expect("same field").reshape(&[db]).expect("flatten");
    let labels = smash_labels(&a.alg.labels, &h.alg.labels);
    AlgebraData { dim: db, field: f, labels, mul, unit }
}

fn smash_labels(a: &[String], h: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * h.len());
    for la in a {
        for lh in h {
            out.push(format!("{la}#{lh}"));
        }
    }
    out
}

/// Verify the Yetter–Drinfeld module axioms (5 identities):
/// `module-assoc`, `module-unit`, `yd1` (Φ-twisted compatibility),
/// `yd2` (counit of the coaction), `yd3` (crossing relation).
pub fn verify_yd(h: &QuasiHopfData, m: &YdModuleData) -> Report {
    let mut r = Runner::new("verify_yd");
    run_yd_checks(h, m, &mut r);
    r.finish()
}

fn run_yd_checks(h: &QuasiHopfData, m: &YdModuleData, r: &mut Runner) {
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let mul = &h.alg.mul;
    let act = &m.action;

    r.elem_eq("module-assoc", &[dh, dh, dm], |idx| {
        let e = Elem::basis_tuple(&[dh, dh, dm], idx, f);
        (e.mul(mul, 0).act(act, 0), e.act(act, 1).act(act, 0))
    });

    r.elem_eq("module-unit", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        (h.unit_elem().tensor(&e).act(act, 0), e.clone())
    });

    run_yd_core_checks(h, m, r);
}

/// The three coaction identities alone, shared between [`verify_yd`] and
/// [`verify_yd_algebra`] (which already checks the module laws).
fn run_yd_core_checks(h: &QuasiHopfData, m: &YdModuleData, r: &mut Runner) {
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let mul = &h.alg.mul;
    let act = &m.action;
    let lam = &m.coaction;

    r.elem_eq("yd1", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        let lhs = h
            .phi_elem()
            .tensor(&e) // (X1, X2, X3, m)
            .map_multi(lam, 3, &[dh, dm]) // (X1, X2, X3, m⁻¹, m⁰)
            .move_slot(3, 1) // (X1, m⁻¹, X2, X3, m⁰)
            .mul(mul, 0) // (X1m⁻¹, X2, X3, m⁰)
            .move_slot(3, 2) // (X1m⁻¹, X2, m⁰, X3)
            .act(act, 1) // (X1m⁻¹, X2·m⁰, X3)
            .map_multi(lam, 1, &[dh, dm]) // (X1m⁻¹, u⁻¹, u⁰, X3)
            .move_slot(3, 2) // (X1m⁻¹, u⁻¹, X3, u⁰)
            .mul(mul, 1); // (X1m⁻¹, u⁻¹X3, u⁰)
        let rhs = h
            .phi_elem()
            .tensor(&h.phi_elem())
            .tensor(&e) // (X1, X2, X3, Y1, Y2, Y3, m)
            .move_slot(6, 4) // (X1, X2, X3, Y1, m, Y2, Y3)
            .act(act, 3) // (X1, X2, X3, Y1·m, Y2, Y3)
            .map_multi(lam, 3, &[dh, dm]) // (X1, X2, X3, w⁻¹, w⁰, Y2, Y3)
            .coprod(&h.comul, 3) // (X1, X2, X3, w⁻¹₁, w⁻¹₂, w⁰, Y2, Y3)
            .move_slot(3, 1) // (X1, w⁻¹₁, X2, X3, w⁻¹₂, w⁰, Y2, Y3)
            .mul(mul, 0) // (c, X2, X3, w⁻¹₂, w⁰, Y2, Y3)
            .move_slot(5, 1) // (c, Y2, X2, X3, w⁻¹₂, w⁰, Y3)
            .mul(mul, 0) // (C, X2, X3, w⁻¹₂, w⁰, Y3)
            .move_slot(3, 2) // (C, X2, w⁻¹₂, X3, w⁰, Y3)
            .mul(mul, 1) // (C, u, X3, w⁰, Y3)
            .move_slot(4, 2) // (C, u, Y3, X3, w⁰)
            .mul(mul, 1) // (C, U, X3, w⁰)
            .act(act, 2); // (C, U, X3·w⁰)
        (lhs, rhs)
    });

    r.elem_eq("yd2", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        (e.map_multi(lam, 0, &[dh, dm]).counit(&h.counit, 0), e.clone())
    });

    r.elem_eq("yd3", &[dh, dm], |idx| {
        let e = Elem::basis_tuple(&[dh, dm], idx, f);
        let lhs = e
            .coprod(&h.comul, 0) // (h1, h2, m)
            .map_multi(lam, 2, &[dh, dm]) // (h1, h2, m⁻¹, m⁰)
            .move_slot(2, 1) // (h1, m⁻¹, h2, m⁰)
            .mul(mul, 0) // (h1m⁻¹, h2, m⁰)
            .act(act, 1); // (h1m⁻¹, h2·m⁰)
        let rhs = e
            .coprod(&h.comul, 0) // (h1, h2, m)
            .move_slot(2, 1) // (h1, m, h2)
            .act(act, 0) // (h1·m, h2)
            .map_multi(lam, 0, &[dh, dm]) // (w⁻¹, w⁰, h2)
            .move_slot(2, 1) // (w⁻¹, h2, w⁰)
            .mul(mul, 0); // (w⁻¹h2, w⁰)
        (lhs, rhs)
    });
}

/// Verify the Yetter–Drinfeld module algebra axioms (11 identities): the six
/// module-algebra identities, the three YD identities, and the coaction
/// compatibilities `unitate` (λ(1) = 1⊗1) and `multi` (λ of a product).
pub fn verify_yd_algebra(h: &QuasiHopfData, a: &YdAlgebraData) -> Report {
    let mut r = Runner::new("verify_yd_algebra");
    run_yd_algebra_checks(h, a, &mut r);
    r.finish()
}

fn run_yd_algebra_checks(h: &QuasiHopfData, a: &YdAlgebraData, r: &mut Runner) {
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    run_module_algebra_checks(h, &ma, r);
    run_yd_core_checks(h, &a.yd_module(), r);

    let dh = h.dim();
    let da = a.alg.dim;
    let f = h.field();
    let mul = &h.alg.mul;
    let mul_a = &a.alg.mul;
    let act = &a.action;
    let lam = &a.coaction;

    r.elem_eq("unitate", &[], |_| {
        let lhs = a.alg.unit_elem().map_multi(lam, 0, &[dh, da]);
        (lhs, h.unit_elem().tensor(&a.alg.unit_elem()))
    });

    r.elem_eq("multi", &[da, da], |idx| {
        let e = Elem::basis_tuple(&[da, da], idx, f);
        let lhs = e.mul(mul_a, 0).map_multi(lam, 0, &[dh, da]);
        let rhs = h
            .phi_elem()
            .tensor(&h.phi_inv_elem())
            .tensor(&h.phi_elem())
            .tensor(&e)
            // 0:X1 1:X2 2:X3 3:x1 4:x2 5:x3 6:Y1 7:Y2 8:Y3 9:a 10:a'
            .move_slot(9, 7) // (…, x3, Y1, a, Y2, Y3, a')
            .act(act, 6) // 0:X1 1:X2 2:X3 3:x1 4:x2 5:x3 6:Y1·a 7:Y2 8:Y3 9:a'
            .move_slot(6, 4) // (X1, X2, X3, x1, Y1·a, x2, x3, Y2, Y3, a')
            .act(act, 3) // 0:X1 1:X2 2:X3 3:u 4:x2 5:x3 6:Y2 7:Y3 8:a'  (u = x1Y1·a)
            .map_multi(lam, 3, &[dh, da]) // 0:X1 1:X2 2:X3 3:u⁻¹ 4:u⁰ 5:x2 6:x3 7:Y2 8:Y3 9:a'
            .move_slot(9, 8) // (…, Y2, a', Y3)
            .act(act, 7) // 0:X1 1:X2 2:X3 3:u⁻¹ 4:u⁰ 5:x2 6:x3 7:v 8:Y3  (v = Y2·a')
            .map_multi(lam, 7, &[dh, da]) // 0:X1 1:X2 2:X3 3:u⁻¹ 4:u⁰ 5:x2 6:x3 7:v⁻¹ 8:v⁰ 9:Y3
            .move_slot(3, 1) // (X1, u⁻¹, X2, X3, u⁰, x2, x3, v⁻¹, v⁰, Y3)
            .mul(mul, 0) // 0:c1 1:X2 2:X3 3:u⁰ 4:x2 5:x3 6:v⁻¹ 7:v⁰ 8:Y3
            .move_slot(4, 1) // (c1, x2, X2, X3, u⁰, x3, v⁻¹, v⁰, Y3)
            .mul(mul, 0) // 0:c2 1:X2 2:X3 3:u⁰ 4:x3 5:v⁻¹ 6:v⁰ 7:Y3
            .move_slot(5, 1) // (c2, v⁻¹, X2, X3, u⁰, x3, v⁰, Y3)
            .mul(mul, 0) // 0:c3 1:X2 2:X3 3:u⁰ 4:x3 5:v⁰ 6:Y3
            .move_slot(6, 1) // (c3, Y3, X2, X3, u⁰, x3, v⁰)
            .mul(mul, 0) // 0:C 1:X2 2:X3 3:u⁰ 4:x3 5:v⁰
            .move_slot(3, 2) // (C, X2, u⁰, X3, x3, v⁰)
            .act(act, 1) // (C, X2·u⁰, X3, x3, v⁰)
            .mul(mul, 2) // (C, X2·u⁰, X3x3, v⁰)
            .act(act, 2) // (C, X2·u⁰, (X3x3)·v⁰)
            .mul(mul_a, 1); // (C, product)
        (lhs, rhs)
    });
}

/// A bicomodule algebra together with the canonical comparison morphism
/// v: H → B used by the structure theorem.
#[derive(Debug, Clone)]
pub struct BicomoduleWithV {
    /// The bicomodule algebra.
    pub b: BicomoduleAlgebraData,
    /// The algebra/bicolinear comparison map v: H → B.
    pub v: LinearMap,
}

/// Build the smash product A#H of a YD module algebra as a bicomodule
/// algebra, with the canonical v(h) = 1_A # h. All bicomodule-algebra
/// axioms are certified on the output, as is bicolinearity of v.
pub fn yd_smash_bicomodule(h: &QuasiHopfData, a: &YdAlgebraData) -> Result<(BicomoduleWithV, Report)> {
    let pre = verify_yd_algebra(h, a);
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: "yd_smash_bicomodule".into(), id, report: Box::new(pre) });
    }
    let dh = h.dim();
    let da = a.alg.dim;
    let db = da * dh;
    let f = h.field();
    let ma = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
    let alg = smash_algebra_unchecked(h, &ma);

    // λ(a#h) = T¹(t¹·a)⁻¹t²h₁ ⊗ (T²·(t¹·a)⁰ # T³t³h₂), T = Φ, t = Φ⁻¹.
    let mut lambda = LinearMap::zeros(dh * db, db, f);
    for ai in 0..da {
        for hi in 0..dh {
            let out = h
                .phi_elem()
                .tensor(&h.phi_inv_elem())
                .tensor(&Elem::basis_tuple(&[da, dh], &[ai, hi], f))
                // 0:T1 1:T2 2:T3 3:t1 4:t2 5:t3 6:a 7:h
                .coprod(&h.comul, 7) // …, 7:h1, 8:h2
                .move_slot(6, 4) // (T1, T2, T3, t1, a, t2, t3, h1, h2)
                .act(&a.action, 3) // 0:T1 1:T2 2:T3 3:u 4:t2 5:t3 6:h1 7:h2  (u = t1·a)
                .map_multi(&a.coaction, 3, &[dh, da]) // 0:T1 1:T2 2:T3 3:u⁻¹ 4:u⁰ 5:t2 6:t3 7:h1 8:h2
                .move_slot(3, 1) // (T1, u⁻¹, …)
                .mul(&h.alg.mul, 0) // 0:v1 1:T2 2:T3 3:u⁰ 4:t2 5:t3 6:h1 7:h2
                .move_slot(4, 1) // (v1, t2, T2, T3, u⁰, t3, h1, h2)
                .mul(&h.alg.mul, 0) // 0:v2 1:T2 2:T3 3:u⁰ 4:t3 5:h1 6:h2
                .move_slot(5, 1) // (v2, h1, T2, T3, u⁰, t3, h2)
                .mul(&h.alg.mul, 0) // 0:V 1:T2 2:T3 3:u⁰ 4:t3 5:h2
                .move_slot(3, 2) // (V, T2, u⁰, T3, t3, h2)
                .act(&a.action, 1) // (V, T2·u⁰, T3, t3, h2)
                .mul(&h.alg.mul, 2) // (V, T2·u⁰, T3t3, h2)
                .mul(&h.alg.mul, 2); // (V, T2·u⁰, T3t3h2)
            for (idx, c) in out.to_tensor().iter_nonzero() {
                // Slots: (H, A, H); flatten the last two as B.
                lambda.set(idx[0] * db + (idx[1] * dh + idx[2]), ai * dh + hi, c.clone());
            }
        }
    }

    // ρ(a#h) = (x¹·a # x²h₁) ⊗ x³h₂.
    let mut rho = LinearMap::zeros(db * dh, db, f);
    for ai in 0..da {
        for hi in 0..dh {
            let out = h
                .phi_inv_elem()
                .tensor(&Elem::basis_tuple(&[da, dh], &[ai, hi], f))
                // 0:x1 1:x2 2:x3 3:a 4:h
                .coprod(&h.comul, 4) // 0:x1 1:x2 2:x3 3:a 4:h1 5:h2
                .move_slot(3, 1) // (x1, a, x2, x3, h1, h2)
                .act(&a.action, 0) // (x1·a, x2, x3, h1, h2)
                .move_slot(3, 2) // (x1·a, x2, h1, x3, h2)
                .mul(&h.alg.mul, 1) // (x1·a, x2h1, x3, h2)
                .mul(&h.alg.mul, 2); // (x1·a, x2h1, x3h2)
            for (idx, c) in out.to_tensor().iter_nonzero() {
                rho.set((idx[0] * dh + idx[1]) * dh + idx[2], ai * dh + hi, c.clone());
            }
        }
    }

    let unit_a = Elem::from_tensor(&a.alg.unit);
    let assoc = |pattern: [usize; 3], phi: &Tensor| -> Result<Tensor> {
        // Insert 1_A next to the slot of Φ carrying the B-leg: pattern is
        // the axis order with the B-leg marked by its position.
        // pattern[k] == 1 marks the B slot.
        let phi_e = Elem::from_tensor(phi);
        let pos = pattern.iter().position(|&x| x == 1).expect("one B slot");
        let with_unit = phi_e.tensor(&unit_a).move_slot(3, pos);
        // Shape now (…, A at pos, H at pos+1, …): flatten (A,H) as B.
        let t = with_unit.to_tensor();
        let mut shape: Vec<usize> = Vec::new();
        let mut k = 0;
        while k < t.shape().len() {
            if k == pos {
                shape.push(t.shape()[k] * t.shape()[k + 1]);
                k += 2;
            } else {
                shape.push(t.shape()[k]);
                k += 1;
            }
        }
        t.reshape(&shape)
    };
    let phi_l = assoc([0, 0, 1], &h.phi)?;
    let phi_l_inv = assoc([0, 0, 1], &h.phi_inv)?;
    let phi_r = assoc([1, 0, 0], &h.phi)?;
    let phi_r_inv = assoc([1, 0, 0], &h.phi_inv)?;
    let phi_lr = assoc([0, 1, 0], &h.phi)?;
    let phi_lr_inv = assoc([0, 1, 0], &h.phi_inv)?;

    // v(h) = 1_A # h.
    let mut v = LinearMap::zeros(db, dh, f);
    for hi in 0..dh {
        for (aidx, c) in a.alg.unit.iter_nonzero() {
            v.set(aidx[0] * dh + hi, hi, c.clone());
        }
    }

    let b = BicomoduleAlgebraData { alg, rho, lambda, phi_r, phi_r_inv, phi_l, phi_l_inv, phi_lr, phi_lr_inv };

    let mut r = Runner::new("yd_smash_bicomodule");
    run_bicomodule_checks(h, &b, &mut r);
    check_v_morphism(h, &b, &v, &mut r);
    let report = r.finish();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: "yd_smash_bicomodule".into(), id, report: Box::new(report) });
    }
    Ok((BicomoduleWithV { b, v }, report))
}

/// Record that v: H → B is an algebra map intertwining both coactions
/// (ρ_B∘v = (v⊗id)∘Δ and λ_B∘v = (id⊗v)∘Δ).
pub fn check_v_morphism(h: &QuasiHopfData, b: &BicomoduleAlgebraData, v: &LinearMap, r: &mut Runner) {
    check_algebra_map(r, "v-alg-map", v, &h.alg, &b.alg);
    let dh = h.dim();
    let id_h = LinearMap::identity(dh, h.field());
    r.probe("v-rho", |p| {
        let lhs = compose(&b.rho, v).expect("shapes");
        let rhs = compose(&kron(v, &id_h).expect("kron"), &h.comul_map()).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });
    r.probe("v-lambda", |p| {
        let lhs = compose(&b.lambda, v).expect("shapes");
        let rhs = compose(&kron(&id_h, v).expect("kron"), &h.comul_map()).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });
}

/// Verify the bicomodule-algebra axioms (16 identities): associativity and
/// unitality of B, both coactions algebra maps and counital, the four
/// right-sided laws `rca1`–`rca4`, the four left-sided laws `lca1`–`lca4`,
/// the three mixed laws `bca1`–`bca3`, the derived counit law `bca4`, and
/// invertibility of all three associators.
pub fn verify_bicomodule_algebra(h: &QuasiHopfData, b: &BicomoduleAlgebraData) -> Report {
    let mut r = Runner::new("verify_bicomodule_algebra");
    run_bicomodule_checks(h, b, &mut r);
    r.finish()
}

fn run_bicomodule_checks(h: &QuasiHopfData, b: &BicomoduleAlgebraData, r: &mut Runner) {
    let dh = h.dim();
    let db = b.alg.dim;
    let f = h.field();
    let mul_h = &h.alg.mul;
    let mul_b = &b.alg.mul;
    let one_b = b.alg.unit_elem();
    let one_h = h.unit_elem();
    let phi_r = Elem::from_tensor(&b.phi_r);
    let phi_l = Elem::from_tensor(&b.phi_l);
    let phi_lr = Elem::from_tensor(&b.phi_lr);

    b.alg.check_assoc_unital(r, "alg-assoc-unital");

    r.probe("rho-alg-map", |p| {
        p.elem_eq(&[db, db], |idx| {
            let e = Elem::basis_tuple(&[db, db], idx, f);
            let lhs = e.mul(mul_b, 0).map_multi(&b.rho, 0, &[db, dh]);
            let rhs = e
                .map_multi(&b.rho, 0, &[db, dh])
                .map_multi(&b.rho, 2, &[db, dh]) // (b0, b1, b'0, b'1)
                .move_slot(2, 1) // (b0, b'0, b1, b'1)
                .mul(mul_b, 0)
                .mul(mul_h, 1);
            (lhs, rhs)
        });
        p.elem_eq(&[], |_| {
            (one_b.map_multi(&b.rho, 0, &[db, dh]), one_b.tensor(&one_h))
        });
    });

    r.elem_eq("rca1", &[db], |idx| {
        let e = Elem::basis(db, idx[0], f);
        let ops = [SlotOp::Mul(mul_b), SlotOp::Mul(mul_h), SlotOp::Mul(mul_h)];
        let lhs = phi_r.pointwise(
            &e.map_multi(&b.rho, 0, &[db, dh]).map_multi(&b.rho, 0, &[db, dh]),
            &ops,
        );
        let rhs = e
            .map_multi(&b.rho, 0, &[db, dh])
            .coprod(&h.comul, 1)
            .pointwise(&phi_r, &ops);
        (lhs, rhs)
    });

    r.elem_eq("rca2", &[], |_| {
        let ops = [SlotOp::Mul(mul_b), SlotOp::Mul(mul_h), SlotOp::Mul(mul_h), SlotOp::Mul(mul_h)];
        let lhs = one_b
            .tensor(&h.phi_elem())
            .pointwise(&phi_r.coprod(&h.comul, 1), &ops)
            .pointwise(&phi_r.tensor(&one_h), &ops);
        let rhs = phi_r
            .coprod(&h.comul, 2)
            .pointwise(&phi_r.map_multi(&b.rho, 0, &[db, dh]), &ops);
        (lhs, rhs)
    });

    r.elem_eq("rca3", &[db], |idx| {
        let e = Elem::basis(db, idx[0], f);
        (e.map_multi(&b.rho, 0, &[db, dh]).counit(&h.counit, 1), e.clone())
    });

    r.probe("rca4", |p| {
        let expect = one_b.tensor(&one_h);
        p.elem_eq(&[], |_| (phi_r.counit(&h.counit, 1), expect.clone()));
        p.elem_eq(&[], |_| (phi_r.counit(&h.counit, 2), expect.clone()));
    });

    r.probe("lambda-alg-map", |p| {
        p.elem_eq(&[db, db], |idx| {
            let e = Elem::basis_tuple(&[db, db], idx, f);
            let lhs = e.mul(mul_b, 0).map_multi(&b.lambda, 0, &[dh, db]);
            let rhs = e
                .map_multi(&b.lambda, 0, &[dh, db])
                .map_multi(&b.lambda, 2, &[dh, db]) // (b⁻¹, b⁰, b'⁻¹, b'⁰)
                .move_slot(2, 1) // (b⁻¹, b'⁻¹, b⁰, b'⁰)
                .mul(mul_h, 0)
                .mul(mul_b, 1);
            (lhs, rhs)
        });
        p.elem_eq(&[], |_| {
            (one_b.map_multi(&b.lambda, 0, &[dh, db]), one_h.tensor(&one_b))
        });
    });

    r.elem_eq("lca1", &[db], |idx| {
        let e = Elem::basis(db, idx[0], f);
        let ops = [SlotOp::Mul(mul_h), SlotOp::Mul(mul_h), SlotOp::Mul(mul_b)];
        let lhs = e
            .map_multi(&b.lambda, 0, &[dh, db])
            .map_multi(&b.lambda, 1, &[dh, db])
            .pointwise(&phi_l, &ops);
        let rhs = phi_l.pointwise(&e.map_multi(&b.lambda, 0, &[dh, db]).coprod(&h.comul, 0), &ops);
        (lhs, rhs)
    });

    r.elem_eq("lca2", &[], |_| {
        let ops = [SlotOp::Mul(mul_h), SlotOp::Mul(mul_h), SlotOp::Mul(mul_h), SlotOp::Mul(mul_b)];
        let lhs = one_h
            .tensor(&phi_l)
            .pointwise(&phi_l.coprod(&h.comul, 1), &ops)
            .pointwise(&h.phi_elem().tensor(&one_b), &ops);
        let rhs = phi_l
            .map_multi(&b.lambda, 2, &[dh, db])
            .pointwise(&phi_l.coprod(&h.comul, 0), &ops);
        (lhs, rhs)
    });

    r.elem_eq("lca3", &[db], |idx| {
        let e = Elem::basis(db, idx[0], f);
        (e.map_multi(&b.lambda, 0, &[dh, db]).counit(&h.counit, 0), e.clone())
    });

    r.probe("lca4", |p| {
        let expect = one_h.tensor(&one_b);
        p.elem_eq(&[], |_| (phi_l.counit(&h.counit, 1), expect.clone()));
        p.elem_eq(&[], |_| (phi_l.counit(&h.counit, 0), expect.clone()));
    });

    r.elem_eq("bca1", &[db], |idx| {
        let e = Elem::basis(db, idx[0], f);
        let ops = [SlotOp::Mul(mul_h), SlotOp::Mul(mul_b), SlotOp::Mul(mul_h)];
        let lhs = phi_lr.pointwise(
            &e.map_multi(&b.rho, 0, &[db, dh]).map_multi(&b.lambda, 0, &[dh, db]),
            &ops,
        );
        let rhs = e
            .map_multi(&b.lambda, 0, &[dh, db])
            .map_multi(&b.rho, 1, &[db, dh])
            .pointwise(&phi_lr, &ops);
        (lhs, rhs)
    });

    r.elem_eq("bca2", &[], |_| {
        let ops = [SlotOp::Mul(mul_h), SlotOp::Mul(mul_h), SlotOp::Mul(mul_b), SlotOp::Mul(mul_h)];
        let lhs = one_h
            .tensor(&phi_lr)
            .pointwise(&phi_lr.map_multi(&b.lambda, 1, &[dh, db]), &ops)
            .pointwise(&phi_l.tensor(&one_h), &ops);
        let rhs = phi_l
            .map_multi(&b.rho, 2, &[db, dh])
            .pointwise(&phi_lr.coprod(&h.comul, 0), &ops);
        (lhs, rhs)
    });

    r.elem_eq("bca3", &[], |_| {
        let ops = [SlotOp::Mul(mul_h), SlotOp::Mul(mul_b), SlotOp::Mul(mul_h), SlotOp::Mul(mul_h)];
        let lhs = one_h
            .tensor(&phi_r)
            .pointwise(&phi_lr.map_multi(&b.rho, 1, &[db, dh]), &ops)
            .pointwise(&phi_lr.tensor(&one_h), &ops);
        let rhs = phi_lr
            .coprod(&h.comul, 2)
            .pointwise(&phi_r.map_multi(&b.lambda, 0, &[dh, db]), &ops);
        (lhs, rhs)
    });

    r.probe("bca4", |p| {
        p.elem_eq(&[], |_| (phi_lr.counit(&h.counit, 2), one_h.tensor(&one_b)));
        p.elem_eq(&[], |_| (phi_lr.counit(&h.counit, 0), one_b.tensor(&one_h)));
    });

    r.probe("assoc-invertible", |p| {
        let pairs: [(&Tensor, &Tensor, [SlotOp; 3], Elem); 3] = [
            (
                &b.phi_r,
                &b.phi_r_inv,
                [SlotOp::Mul(mul_b), SlotOp::Mul(mul_h), SlotOp::Mul(mul_h)],
                one_b.tensor(&one_h).tensor(&one_h),
            ),
            (
                &b.phi_l,
                &b.phi_l_inv,
                [SlotOp::Mul(mul_h), SlotOp::Mul(mul_h), SlotOp::Mul(mul_b)],
                one_h.tensor(&one_h).tensor(&one_b),
            ),
            (
                &b.phi_lr,
                &b.phi_lr_inv,
                [SlotOp::Mul(mul_h), SlotOp::Mul(mul_b), SlotOp::Mul(mul_h)],
                one_h.tensor(&one_b).tensor(&one_h),
            ),
        ];
        for (fwd, bwd, ops, expect) in &pairs {
            let fe = Elem::from_tensor(fwd);
            let be = Elem::from_tensor(bwd);
            p.elem_eq(&[], |_| (fe.pointwise(&be, ops), expect.clone()));
            p.elem_eq(&[], |_| (be.pointwise(&fe, ops), expect.clone()));
        }
    });
}

/// Verify that f: B → B' is a morphism of bicomodule algebras (6 entries):
/// a unital algebra map intertwining both coactions, pushing each of the
/// three associators of B forward onto those of B'.
pub fn verify_bicomodule_morphism(
    h: &QuasiHopfData,
    f: &LinearMap,
    b: &BicomoduleAlgebraData,
    b2: &BicomoduleAlgebraData,
) -> Report {
    let mut r = Runner::new("verify_bicomodule_morphism");
    run_bicomodule_morphism_checks(h, f, b, b2, &mut r);
    r.finish()
}

fn run_bicomodule_morphism_checks(
    h: &QuasiHopfData,
    f: &LinearMap,
    b: &BicomoduleAlgebraData,
    b2: &BicomoduleAlgebraData,
    r: &mut Runner,
) {
    let dh = h.dim();
    let id_h = LinearMap::identity(dh, h.field());
    check_algebra_map(r, "alg-map", f, &b.alg, &b2.alg);
    r.probe("rho-intertwine", |p| {
        let lhs = compose(&b2.rho, f).expect("shapes");
        let rhs = compose(&kron(f, &id_h).expect("kron"), &b.rho).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });
    r.probe("lambda-intertwine", |p| {
        let lhs = compose(&b2.lambda, f).expect("shapes");
        let rhs = compose(&kron(&id_h, f).expect("kron"), &b.lambda).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });
    r.probe("phi-r-push", |p| {
        let pushed = Elem::from_tensor(&b.phi_r).map1(f, 0).to_tensor();
        p.tensor_eq(&pushed, &b2.phi_r);
    });
    r.probe("phi-l-push", |p| {
        let pushed = Elem::from_tensor(&b.phi_l).map1(f, 2).to_tensor();
        p.tensor_eq(&pushed, &b2.phi_l);
    });
    r.probe("phi-lr-push", |p| {
        let pushed = Elem::from_tensor(&b.phi_lr).map1(f, 1).to_tensor();
        p.tensor_eq(&pushed, &b2.phi_lr);
    });
}

/// Verify a two-sided two-cosided Hopf module (8 entries): `bimodule`,
/// `rho-bimodule-map`, `lambda-bimodule-map`, `qb1`–`qb5`.
pub fn verify_twosided_bimodule(h: &QuasiHopfData, m: &TwoSidedBimoduleData) -> Report {
    let mut r = Runner::new("verify_twosided_bimodule");
    run_twosided_checks(h, m, &mut r, false);
    r.finish()
}

fn run_twosided_checks(h: &QuasiHopfData, m: &TwoSidedBimoduleData, r: &mut Runner, right_only: bool) {
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let mul = &h.alg.mul;

    r.probe("bimodule", |p| {
        p.elem_eq(&[dh, dh, dm], |idx| {
            let e = Elem::basis_tuple(&[dh, dh, dm], idx, f);
            (e.mul(mul, 0).act(&m.lact, 0), e.act(&m.lact, 1).act(&m.lact, 0))
        });
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            (h.unit_elem().tensor(&e).act(&m.lact, 0), e.clone())
        });
        p.elem_eq(&[dm, dh, dh], |idx| {
            let e = Elem::basis_tuple(&[dm, dh, dh], idx, f);
            (e.mul(mul, 1).ract(&m.ract, 0), e.ract(&m.ract, 0).ract(&m.ract, 0))
        });
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            (e.tensor(&h.unit_elem()).ract(&m.ract, 0), e.clone())
        });
        // (h·m)·h' = h·(m·h')
        p.elem_eq(&[dh, dm, dh], |idx| {
            let e = Elem::basis_tuple(&[dh, dm, dh], idx, f);
            (e.act(&m.lact, 0).ract(&m.ract, 0), e.ract(&m.ract, 1).act(&m.lact, 0))
        });
    });

    r.elem_eq("rho-bimodule-map", &[dh, dm, dh], |idx| {
        let e = Elem::basis_tuple(&[dh, dm, dh], idx, f);
        let lhs = e.act(&m.lact, 0).ract(&m.ract, 0).map_multi(&m.rho, 0, &[dm, dh]);
        let rhs = e
            .coprod(&h.comul, 0) // (h1, h2, m, h')
            .coprod(&h.comul, 3) // (h1, h2, m, h'1, h'2)
            .map_multi(&m.rho, 2, &[dm, dh]) // (h1, h2, m0, m1, h'1, h'2)
            .move_slot(2, 1) // (h1, m0, h2, m1, h'1, h'2)
            .act(&m.lact, 0) // (h1·m0, h2, m1, h'1, h'2)
            .move_slot(3, 1) // (h1·m0, h'1, h2, m1, h'2)
            .ract(&m.ract, 0) // (h1·m0·h'1, h2, m1, h'2)
            .mul(mul, 1) // (…, h2m1, h'2)
            .mul(mul, 1); // (…, h2m1h'2)
        (lhs, rhs)
    });

    if !right_only {
        r.elem_eq("lambda-bimodule-map", &[dh, dm, dh], |idx| {
            let e = Elem::basis_tuple(&[dh, dm, dh], idx, f);
            let lhs = e.act(&m.lact, 0).ract(&m.ract, 0).map_multi(&m.lambda, 0, &[dh, dm]);
            let rhs = e
                .coprod(&h.comul, 0) // (h1, h2, m, h')
                .coprod(&h.comul, 3) // (h1, h2, m, h'1, h'2)
                .map_multi(&m.lambda, 2, &[dh, dm]) // (h1, h2, m⁻¹, m⁰, h'1, h'2)
                .move_slot(2, 1) // (h1, m⁻¹, h2, m⁰, h'1, h'2)
                .mul(mul, 0) // (h1m⁻¹, h2, m⁰, h'1, h'2)
                .move_slot(3, 1) // (h1m⁻¹, h'1, h2, m⁰, h'2)
                .mul(mul, 0) // (h1m⁻¹h'1, h2, m⁰, h'2)
                .act(&m.lact, 1) // (h1m⁻¹h'1, h2·m⁰, h'2)
                .ract(&m.ract, 1); // (h1m⁻¹h'1, h2·m⁰·h'2)
            (lhs, rhs)
        });
    }

    r.elem_eq("qb1", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        (e.map_multi(&m.rho, 0, &[dm, dh]).counit(&h.counit, 1), e.clone())
    });

    r.elem_eq("qb2", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        let ops = [SlotOp::LAct(&m.lact), SlotOp::Mul(mul), SlotOp::Mul(mul)];
        let lhs = h.phi_elem().pointwise(
            &e.map_multi(&m.rho, 0, &[dm, dh]).map_multi(&m.rho, 0, &[dm, dh]),
            &ops,
        );
        let ops_r = [SlotOp::RAct(&m.ract), SlotOp::Mul(mul), SlotOp::Mul(mul)];
        let rhs = e
            .map_multi(&m.rho, 0, &[dm, dh])
            .coprod(&h.comul, 1)
            .pointwise(&h.phi_elem(), &ops_r);
        (lhs, rhs)
    });

    if right_only {
        return;
    }

    r.elem_eq("qb3", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        (e.map_multi(&m.lambda, 0, &[dh, dm]).counit(&h.counit, 0), e.clone())
    });

    r.elem_eq("qb4", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        let ops_r = [SlotOp::Mul(mul), SlotOp::Mul(mul), SlotOp::RAct(&m.ract)];
        let lhs = e
            .map_multi(&m.lambda, 0, &[dh, dm])
            .map_multi(&m.lambda, 1, &[dh, dm])
            .pointwise(&h.phi_elem(), &ops_r);
        let ops_l = [SlotOp::Mul(mul), SlotOp::Mul(mul), SlotOp::LAct(&m.lact)];
        let rhs = h
            .phi_elem()
            .pointwise(&e.map_multi(&m.lambda, 0, &[dh, dm]).coprod(&h.comul, 0), &ops_l);
        (lhs, rhs)
    });

    r.elem_eq("qb5", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        let ops_l = [SlotOp::Mul(mul), SlotOp::LAct(&m.lact), SlotOp::Mul(mul)];
        let lhs = h.phi_elem().pointwise(
            &e.map_multi(&m.rho, 0, &[dm, dh]).map_multi(&m.lambda, 0, &[dh, dm]),
            &ops_l,
        );
        let ops_r = [SlotOp::Mul(mul), SlotOp::RAct(&m.ract), SlotOp::Mul(mul)];
        let rhs = e
            .map_multi(&m.lambda, 0, &[dh, dm])
            .map_multi(&m.rho, 1, &[dm, dh])
            .pointwise(&h.phi_elem(), &ops_r);
        (lhs, rhs)
    });
}

/// The canonical coinvariants projector of a two-sided two-cosided Hopf
/// module, its induced action, and the certified splitting.
#[derive(Debug, Clone)]
pub struct CoinvariantsProjector {
    /// The projector E(m) = q¹·m_(0)·βS(q²m_(1)).
    pub e: LinearMap,
    /// The induced action h▷m = E(h·m) as a `[d_H, d_M, d_M]` tensor.
    pub act: Tensor,
    /// Certified splitting of E through its image.
    pub splitting: Splitting,
    /// The seven projector properties, certified.
    pub report: Report,
}

/// Compute the canonical projector onto coinvariants and certify its seven
/// properties. Preconditions: the bimodule axioms, `rho-bimodule-map`,
/// `qb1`, `qb2` (the right-sided part of the Hopf-module structure).
pub fn coinvariants_projector(h: &QuasiHopfData, m: &TwoSidedBimoduleData) -> Result<CoinvariantsProjector> {
    let mut pre_runner = Runner::new("coinvariants_projector.pre");
    run_twosided_checks(h, m, &mut pre_runner, true);
    let pre = pre_runner.finish();
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: "coinvariants_projector".into(), id, report: Box::new(pre) });
    }

    let e = projector_matrix(h, m);
    let splitting = split_idempotent(&e)?;

    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let act = Tensor::from_fn(&[dh, dm, dm], f, |idx| {
        // h▷m = E(h·m)
        let he = Elem::basis_tuple(&[dh, dm], &[idx[0], idx[1]], f)
            .act(&m.lact, 0)
            .map1(&e, 0);
        he.to_tensor().get(&[idx[2]]).clone()
    });

    let mut r = Runner::new("coinvariants_projector");
    run_projector_property_checks(h, m, &e, &mut r);
    let report = r.finish();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: "coinvariants_projector".into(), id, report: Box::new(report) });
    }
    Ok(CoinvariantsProjector { e, act, splitting, report })
}

/// E(m) = q¹·m_(0)·βS(q²m_(1)) as a matrix.
fn projector_matrix(h: &QuasiHopfData, m: &TwoSidedBimoduleData) -> LinearMap {
    let dm = m.dim;
    let f = h.field();
    let q_r = h.q_r_elem();
    let beta_e = Elem::from_tensor(&h.beta);
    let mut e = LinearMap::zeros(dm, dm, f);
    for mi in 0..dm {
        let out = q_r
            .tensor(&Elem::basis(dm, mi, f)) // (q1, q2, m)
            .map_multi(&m.rho, 2, &[dm, dh_of(h)]) // (q1, q2, m0, m1)
            .move_slot(1, 2) // (q1, m0, q2, m1)
            .mul(&h.alg.mul, 2) // (q1, m0, q2m1)
            .map1(&h.s, 2) // (q1, m0, S(q2m1))
            .tensor(&beta_e) // (q1, m0, S(q2m1), β)
            .move_slot(3, 2) // (q1, m0, β, S(q2m1))
            .mul(&h.alg.mul, 2) // (q1, m0, βS(q2m1))
            .ract(&m.ract, 1) // (q1, m0·βS(q2m1))
            .act(&m.lact, 0); // single M slot
        for (idx, c) in out.to_tensor().iter_nonzero() {
            e.set(idx[0], mi, c.clone());
        }
    }
    e
}

fn dh_of(h: &QuasiHopfData) -> usize {
    h.dim()
}

/// The seven projector properties, each under its own id.
fn run_projector_property_checks(h: &QuasiHopfData, m: &TwoSidedBimoduleData, e: &LinearMap, r: &mut Runner) {
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();

    r.probe("e1-idempotent", |p| {
        p.map_eq(&compose(e, e).expect("square"), e);
    });

    r.elem_eq("e2-right-counit", &[dm, dh], |idx| {
        let x = Elem::basis_tuple(&[dm, dh], idx, f);
        let lhs = x.ract(&m.ract, 0).map1(e, 0);
        let rhs = Elem::basis(dm, idx[0], f).map1(e, 0).scale(&h.eps_basis(idx[1]));
        (lhs, rhs)
    });

    r.elem_eq("e3-left-action", &[dh, dm], |idx| {
        let x = Elem::basis_tuple(&[dh, dm], idx, f);
        let lhs = x.map1(e, 1).act(&m.lact, 0).map1(e, 0); // h▷E(m) = E(h·E(m))
        let rhs = x.act(&m.lact, 0).map1(e, 0); // E(h·m)
        (lhs, rhs)
    });

    r.elem_eq("e4-action-assoc", &[dh, dh, dm], |idx| {
        let x = Elem::basis_tuple(&[dh, dh, dm], idx, f);
        let lhs = x.mul(&h.alg.mul, 0).act(&m.lact, 0).map1(e, 0);
        let rhs = x.act(&m.lact, 1).map1(e, 1).act(&m.lact, 0).map1(e, 0);
        (lhs, rhs)
    });

    r.elem_eq("e5-bimodule-mix", &[dh, dm], |idx| {
        let x = Elem::basis_tuple(&[dh, dm], idx, f);
        let lhs = x.map1(e, 1).act(&m.lact, 0); // h·E(m)
        let rhs = x
            .map1(e, 1) // (h, E(m))
            .coprod(&h.comul, 0) // (h1, h2, E(m))
            .move_slot(2, 1) // (h1, E(m), h2)
            .act(&m.lact, 0) // (h1·E(m), h2)
            .map1(e, 0) // (h1▷E(m), h2)
            .ract(&m.ract, 0); // (h1▷E(m))·h2
        (lhs, rhs)
    });

    r.elem_eq("e6-coaction-recovery", &[dm], |idx| {
        let x = Elem::basis(dm, idx[0], f);
        let lhs = x.map_multi(&m.rho, 0, &[dm, dh]).map1(e, 0).ract(&m.ract, 0);
        (lhs, x.clone())
    });

    r.elem_eq("e7-image-coinvariance", &[dm], |idx| {
        let x = Elem::basis(dm, idx[0], f).map1(e, 0);
        let lhs = x.map_multi(&m.rho, 0, &[dm, dh]).map1(e, 0);
        let rhs = x.tensor(&h.unit_elem());
        (lhs, rhs)
    });
}

/// The decomposition of a two-sided two-cosided Hopf module as V⊗H over its
/// coinvariants V.
#[derive(Debug, Clone)]
pub struct HopfModuleDecomposition {
    /// The coinvariants as a Yetter–Drinfeld module.
    pub v: YdModuleData,
    /// The isomorphism ν: V⊗H → M, ν(v⊗h) = i(v)·h.
    pub nu: LinearMap,
    /// Its exact inverse.
    pub nu_inv: LinearMap,
    /// The projector and splitting used.
    pub projector: CoinvariantsProjector,
    /// All certifications performed.
    pub report: Report,
}

/// Build the two-sided two-cosided Hopf module V⊗H from a YD module V:
/// a·(v⊗h)·b = (a₁·v)⊗a₂hb, with the canonical two-sided coactions.
pub fn hopf_module_from_yd(h: &QuasiHopfData, v: &YdModuleData) -> TwoSidedBimoduleData {
    let dh = h.dim();
    let dv = v.dim;
    let dm = dv * dh;
    let f = h.field();
    let mul = &h.alg.mul;

    let mut lact = Tensor::zeros(&[dh, dm, dm], f);
    for a in 0..dh {
        for vi in 0..dv {
            for hi in 0..dh {
                let out = Elem::basis_tuple(&[dh, dv, dh], &[a, vi, hi], f)
                    .coprod(&h.comul, 0) // (a1, a2, v, h)
                    .move_slot(2, 1) // (a1, v, a2, h)
                    .act(&v.action, 0) // (a1·v, a2, h)
                    .mul(mul, 1); // (a1·v, a2h)
                for (idx, c) in out.to_tensor().iter_nonzero() {
                    lact.set(&[a, vi * dh + hi, idx[0] * dh + idx[1]], c.clone());
                }
            }
        }
    }

    let mut ract = Tensor::zeros(&[dm, dh, dm], f);
    for vi in 0..dv {
        for hi in 0..dh {
            for b in 0..dh {
                let out = Elem::basis_tuple(&[dh, dh], &[hi, b], f).mul(mul, 0);
                for (idx, c) in out.to_tensor().iter_nonzero() {
                    ract.set(&[vi * dh + hi, b, vi * dh + idx[0]], c.clone());
                }
            }
        }
    }

    // ρ(v⊗h) = (x¹·v ⊗ x²h₁) ⊗ x³h₂
    let mut rho = LinearMap::zeros(dm * dh, dm, f);
    for vi in 0..dv {
        for hi in 0..dh {
            let out = h
                .phi_inv_elem()
                .tensor(&Elem::basis_tuple(&[dv, dh], &[vi, hi], f))
                // (x1, x2, x3, v, h)
                .coprod(&h.comul, 4) // (x1, x2, x3, v, h1, h2)
                .move_slot(3, 1) // (x1, v, x2, x3, h1, h2)
                .act(&v.action, 0) // (x1·v, x2, x3, h1, h2)
                .move_slot(3, 2) // (x1·v, x2, h1, x3, h2)
                .mul(mul, 1) // (x1·v, x2h1, x3, h2)
                .mul(mul, 2); // (x1·v, x2h1, x3h2)
            for (idx, c) in out.to_tensor().iter_nonzero() {
                rho.set((idx[0] * dh + idx[1]) * dh + idx[2], vi * dh + hi, c.clone());
            }
        }
    }

    // λ(v⊗h) = X¹(x¹·v)⁻¹x²h₁ ⊗ (X²·(x¹·v)⁰ ⊗ X³x³h₂)
    let mut lambda = LinearMap::zeros(dh * dm, dm, f);
    for vi in 0..dv {
        for hi in 0..dh {
            let out = h
                .phi_elem()
                .tensor(&h.phi_inv_elem())
                .tensor(&Elem::basis_tuple(&[dv, dh], &[vi, hi], f))
                // 0:X1 1:X2 2:X3 3:x1 4:x2 5:x3 6:v 7:h
                .coprod(&h.comul, 7) // …, 7:h1, 8:h2
                .move_slot(6, 4) // (X1, X2, X3, x1, v, x2, x3, h1, h2)
                .act(&v.action, 3) // 0:X1 1:X2 2:X3 3:u 4:x2 5:x3 6:h1 7:h2
                .map_multi(&v.coaction, 3, &[dh, dv]) // 0:X1 1:X2 2:X3 3:u⁻¹ 4:u⁰ 5:x2 6:x3 7:h1 8:h2
                .move_slot(3, 1) // (X1, u⁻¹, X2, X3, u⁰, x2, x3, h1, h2)
                .mul(mul, 0) // 0:c1 1:X2 2:X3 3:u⁰ 4:x2 5:x3 6:h1 7:h2
                .move_slot(4, 1) // (c1, x2, X2, X3, u⁰, x3, h1, h2)
                .mul(mul, 0) // 0:c2 1:X2 2:X3 3:u⁰ 4:x3 5:h1 6:h2
                .move_slot(5, 1) // (c2, h1, X2, X3, u⁰, x3, h2)
                .mul(mul, 0) // 0:C 1:X2 2:X3 3:u⁰ 4:x3 5:h2
                .move_slot(3, 2) // (C, X2, u⁰, X3, x3, h2)
                .act(&v.action, 1) // (C, X2·u⁰, X3, x3, h2)
                .mul(mul, 2) // (C, X2·u⁰, X3x3, h2)
                .mul(mul, 2); // (C, X2·u⁰, X3x3h2)
            for (idx, c) in out.to_tensor().iter_nonzero() {
                lambda.set(idx[0] * dm + (idx[1] * dh + idx[2]), vi * dh + hi, c.clone());
            }
        }
    }

    TwoSidedBimoduleData { dim: dm, lact, ract, rho, lambda }
}

/// Decompose a two-sided two-cosided Hopf module as V⊗H: compute the
/// coinvariants V with its YD structure, the isomorphism ν(v⊗h) = i(v)·h,
/// and certify that the forward construction on V reproduces M through ν.
/// Precondition: the full Hopf-module axiom suite.
pub fn schauenburg_decompose(h: &QuasiHopfData, m: &TwoSidedBimoduleData) -> Result<HopfModuleDecomposition> {
    let pre = verify_twosided_bimodule(h, m);
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: "schauenburg_decompose".into(), id, report: Box::new(pre) });
    }

    let projector = coinvariants_projector(h, m)?;
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let (i, p) = (&projector.splitting.i, &projector.splitting.p);
    let rank = projector.splitting.rank;

    // V's action: restriction of ▷ through the splitting.
    let act_v = Tensor::from_fn(&[dh, rank, rank], f, |idx| {
        let col = i.col(idx[1]);
        let lifted = Elem::from_vec(&col, f);
        let out = Elem::basis(dh, idx[0], f)
            .tensor(&lifted)
            .act(&m.lact, 0)
            .map1(&projector.e, 0)
            .map1(p, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    // V's coaction: v ↦ v_(-1) ⊗ E(v_(0)) through the splitting (p∘E = p).
    let id_h = LinearMap::identity(dh, f);
    let coact_v = compose(&kron(&id_h, p)?, &compose(&m.lambda, i)?)?;
    let v = YdModuleData { dim: rank, action: act_v, coaction: coact_v };

    // ν(v⊗h) = i(v)·h.
    let mut nu = LinearMap::zeros(dm, rank * dh, f);
    for vi in 0..rank {
        for hi in 0..dh {
            let out = Elem::from_vec(&i.col(vi), f)
                .tensor(&Elem::basis(dh, hi, f))
                .ract(&m.ract, 0);
            for (idx, c) in out.to_tensor().iter_nonzero() {
                nu.set(idx[0], vi * dh + hi, c.clone());
            }
        }
    }
    let nu_inv = invert_map(&nu)?;

    // Certify: V is a YD module, and ν intertwines all four structures
    // between the forward construction on V and M.
    let mut r = Runner::new("schauenburg_decompose");
    run_yd_checks(h, &v, &mut r);
    let built = hopf_module_from_yd(h, &v);
    r.probe("nu-left-linear", |p2| {
        let lact_m = LinearMap::from_tensor(&m.lact, 2);
        let lact_v = LinearMap::from_tensor(&built.lact, 2);
        let lhs = compose(&lact_m, &kron(&id_h, &nu).expect("kron")).expect("shapes");
        let rhs = compose(&nu, &lact_v).expect("shapes");
        p2.map_eq(&lhs, &rhs);
    });
    r.probe("nu-right-linear", |p2| {
        let ract_m = LinearMap::from_tensor(&m.ract, 2);
        let ract_v = LinearMap::from_tensor(&built.ract, 2);
        let lhs = compose(&ract_m, &kron(&nu, &id_h).expect("kron")).expect("shapes");
        let rhs = compose(&nu, &ract_v).expect("shapes");
        p2.map_eq(&lhs, &rhs);
    });
    r.probe("nu-rho-colinear", |p2| {
        let lhs = compose(&m.rho, &nu).expect("shapes");
        let rhs = compose(&kron(&nu, &id_h).expect("kron"), &built.rho).expect("shapes");
        p2.map_eq(&lhs, &rhs);
    });
    r.probe("nu-lambda-colinear", |p2| {
        let lhs = compose(&m.lambda, &nu).expect("shapes");
        let rhs = compose(&kron(&id_h, &nu).expect("kron"), &built.lambda).expect("shapes");
        p2.map_eq(&lhs, &rhs);
    });
    r.bool_check("nu-invertible", compose(&nu, &nu_inv)? == LinearMap::identity(dm, f), "ν∘ν⁻¹ = id");
    let mut report = r.finish();
    // Prepend the precondition and projector certifications for a complete
    // audit trail.
    let mut all = pre.checks;
    all.extend(projector.report.checks.clone());
    all.extend(report.checks);
    report.checks = all;
    report.overall = report.checks.iter().all(|c| c.passed);
    report.op = "schauenburg_decompose".into();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: "schauenburg_decompose".into(), id, report: Box::new(report) });
    }
    Ok(HopfModuleDecomposition { v, nu, nu_inv, projector, report })
}

/// The certified structure theorem for a bicomodule algebra B with
/// comparison morphism v: B ≅ B^co(H) # H.
#[derive(Debug, Clone)]
pub struct QuasiStructureTheorem {
    /// The coinvariants A = B^co(H) as a YD module algebra.
    pub a: YdAlgebraData,
    /// The smash product A#H as a certified bicomodule algebra with its
    /// canonical comparison map.
    pub smash: BicomoduleWithV,
    /// The isomorphism Ψ: A#H → B, Ψ(a⊗h) = i(a)·v(h).
    pub psi: LinearMap,
    /// Its exact inverse.
    pub psi_inv: LinearMap,
    /// The projector E on B.
    pub e: LinearMap,
    /// The splitting of E.
    pub splitting: Splitting,
    /// Every certification performed, concatenated.
    pub report: Report,
}

/// Certify the structure theorem for a quasi-Hopf bicomodule algebra:
/// compute A = B^co(H) with its YD module algebra structure, build A#H,
/// and certify that Ψ(a⊗h) = i(a)·v(h) is an isomorphism of bicomodule
/// algebras matching all three associators.
pub fn structure_theorem_quasi(h: &QuasiHopfData, input: &BicomoduleWithV) -> Result<QuasiStructureTheorem> {
    let op = "structure_theorem_quasi";
    let b = &input.b;
    let v = &input.v;

    // Preconditions: B is a bicomodule algebra and v is a bicolinear
    // algebra map.
    let mut pre_runner = Runner::new("structure_theorem_quasi.pre");
    run_bicomodule_checks(h, b, &mut pre_runner);
    check_v_morphism(h, b, v, &mut pre_runner);
    let pre = pre_runner.finish();
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: op.into(), id, report: Box::new(pre) });
    }

    let dh = h.dim();
    let db = b.alg.dim;
    let f = h.field();

    // B as an H-bimodule through v, with its own coactions.
    let mul_b = &b.alg.mul;
    let lact = Tensor::from_fn(&[dh, db, db], f, |idx| {
        let out = Elem::from_vec(&v.col(idx[0]), f)
            .tensor(&Elem::basis(db, idx[1], f))
            .mul(mul_b, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let ract = Tensor::from_fn(&[db, dh, db], f, |idx| {
        let out = Elem::basis(db, idx[0], f)
            .tensor(&Elem::from_vec(&v.col(idx[1]), f))
            .mul(mul_b, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let m = TwoSidedBimoduleData { dim: db, lact, ract, rho: b.rho.clone(), lambda: b.lambda.clone() };

    let projector = coinvariants_projector(h, &m)?;
    let e = projector.e.clone();
    let splitting = projector.splitting.clone();
    let (i, p) = (&splitting.i, &splitting.p);
    let rank = splitting.rank;

    // A = im(E) with transported multiplication p∘μ_B∘(i⊗i), unit p(1_B),
    // action via ▷, coaction (id⊗p)∘λ_B∘i.
    let mut r = Runner::new(op);
    let one_b: Vec<Scalar> = (0..db).map(|k| b.alg.unit.get(&[k]).clone()).collect();
    let e_one = e.apply(&one_b)?;
    r.bool_check("unit-coinvariant", e_one == one_b, "E(1_B) = 1_B");

    let mul_a = Tensor::from_fn(&[rank, rank, rank], f, |idx| {
        let out = Elem::from_vec(&i.col(idx[0]), f)
            .tensor(&Elem::from_vec(&i.col(idx[1]), f))
            .mul(mul_b, 0)
            .map1(p, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let unit_a_coords = p.apply(&one_b)?;
    let unit_a = Tensor::from_fn(&[rank], f, |idx| unit_a_coords[idx[0]].clone());
    let labels = (0..rank).map(|k| format!("a{k}")).collect();
    let alg_a = AlgebraData { dim: rank, field: f, labels, mul: mul_a, unit: unit_a };

    let act_a = Tensor::from_fn(&[dh, rank, rank], f, |idx| {
        let out = Elem::basis(dh, idx[0], f)
            .tensor(&Elem::from_vec(&i.col(idx[1]), f))
            .act(&m.lact, 0)
            .map1(&e, 0)
            .map1(p, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let id_h = LinearMap::identity(dh, f);
    let coact_a = compose(&kron(&id_h, p)?, &compose(&b.lambda, i)?)?;
    let a = YdAlgebraData { alg: alg_a, action: act_a, coaction: coact_a };

    // Certify A is a YD module algebra.
    run_yd_algebra_checks(h, &a, &mut r);
    if !r.ok() {
        let report = r.finish();
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }

    // Build A#H as a certified bicomodule algebra.
    let (smash, smash_report) = yd_smash_bicomodule(h, &a)?;
    r.absorb(smash_report);

    // Ψ(a⊗h) = i(a)·v(h).
    let mut psi = LinearMap::zeros(db, rank * dh, f);
    for ai in 0..rank {
        for hi in 0..dh {
            let out = Elem::from_vec(&i.col(ai), f)
                .tensor(&Elem::from_vec(&v.col(hi), f))
                .mul(mul_b, 0);
            for (idx, c) in out.to_tensor().iter_nonzero() {
                psi.set(idx[0], ai * dh + hi, c.clone());
            }
        }
    }
    let psi_inv = invert_map(&psi)?;
    r.bool_check("psi-invertible", compose(&psi, &psi_inv)? == LinearMap::identity(db, f), "Ψ∘Ψ⁻¹ = id");

    // Ψ is a morphism of bicomodule algebras A#H → B…
    run_bicomodule_morphism_checks(h, &psi, &smash.b, b, &mut r);
    // …compatible with the comparison maps: Ψ ∘ v_{A#H} = v_B.
    r.probe("psi-v-compat", |p2| {
        let lhs = compose(&psi, &smash.v).expect("shapes");
        p2.map_eq(&lhs, v);
    });

    let mut report = r.finish();
    let mut all = pre.checks;
    all.extend(projector.report.checks.clone());
    all.extend(report.checks);
    report.checks = all;
    report.overall = report.checks.iter().all(|c| c.passed);
    report.op = op.into();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    Ok(QuasiStructureTheorem { a, smash, psi, psi_inv, e, splitting, report })
}
