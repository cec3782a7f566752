//! Weak Hopf algebras: axiom verification with the full derived-identity
//! suite, counital idempotents and their split images, module and comodule
//! algebras, the relative smash product over the target counital subalgebra,
//! weak Yetter–Drinfeld structures, Hopf bimodules with coinvariants, and
//! the smash-product structure theorem.
//!
//! A weak Hopf algebra is an associative unital algebra H carrying a
//! coassociative counital comultiplication Δ that is multiplicative but not
//! unital: instead of Δ(1) = 1⊗1 one only has the weak unitality laws
//! Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1), and the counit is weakly
//! multiplicative, ε(xyz) = ε(xy₁)ε(y₂z) = ε(xy₂)ε(y₁z). The antipode
//! satisfies h₁S(h₂) = ε_t(h), S(h₁)h₂ = ε_s(h), S(h₁)h₂S(h₃) = S(h), where
//! ε_t(h) = ε(1₁h)1₂ and ε_s(h) = 1₁ε(h1₂) are the target and source
//! counital idempotent maps. Their images H_t and H_s are separable
//! subalgebras over which all relative constructions are taken. Everything
//! here is exact: identities are verified on all basis tuples, and
//! constructions certify their own output.

use crate::algebra::{check_algebra_map, transpose, AlgebraData, Quotient};
use crate::elem::{Elem, SlotOp};
use crate::error::{HopfError, Result};
use crate::linmap::{compose, invert_map, kron, split_idempotent, LinearMap, Splitting};
use crate::report::{Report, Runner};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;

/// A weak Hopf algebra given by exact structure constants.
///
/// `comul[h][i][j]` is the coefficient of `e_i ⊗ e_j` in Δ(e_h). Δ need not
/// preserve the unit and ε need not be an algebra map; the verification
/// suite checks the weak replacements for those laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakHopfData {
    /// Underlying associative algebra.
    pub alg: AlgebraData,
    /// Comultiplication tensor, shape `[d, d, d]`.
    pub comul: Tensor,
    /// Counit vector, shape `[d]`.
    pub counit: Tensor,
    /// Antipode as a matrix (column h = S(e_h)).
    pub s: LinearMap,
    /// Inverse antipode.
    pub s_inv: LinearMap,
}

impl WeakHopfData {
    /// Validate shapes and build.
    pub fn new(alg: AlgebraData, comul: Tensor, counit: Tensor, s: LinearMap, s_inv: LinearMap) -> Result<WeakHopfData> {
        let d = alg.dim;
        if comul.shape() != [d, d, d] || counit.shape() != [d] {
            return Err(HopfError::Dim {
                context: "WeakHopfData".into(),
                detail: format!("comul {:?} / counit {:?}, carrier dim {d}", comul.shape(), counit.shape()),
            });
        }
        if s.rows() != d || s.cols() != d || s_inv.rows() != d || s_inv.cols() != d {
            return Err(HopfError::Dim {
                context: "WeakHopfData antipode".into(),
                detail: "S and S⁻¹ must be d×d".into(),
            });
        }
        Ok(WeakHopfData { alg, comul, counit, s, s_inv })
    }

    /// Build from an antipode whose inverse is computed by linear algebra.
    pub fn from_invertible_antipode(alg: AlgebraData, comul: Tensor, counit: Tensor, s: LinearMap) -> Result<WeakHopfData> {
        let s_inv = invert_map(&s)?;
        WeakHopfData::new(alg, comul, counit, s, s_inv)
    }

    /// Carrier dimension.
    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    /// Base field.
    pub fn field(&self) -> Field {
        self.alg.field
    }

    /// The unit as a one-slot element.
    pub fn unit_elem(&self) -> Elem {
        self.alg.unit_elem()
    }

    /// Comultiplication as a d²×d matrix.
    pub fn comul_map(&self) -> LinearMap {
        LinearMap::from_tensor(&self.comul, 1)
    }

    /// Counit as a 1×d matrix.
    pub fn counit_map(&self) -> LinearMap {
        LinearMap::from_tensor(&self.counit, 1)
    }

    /// The target counital map ε_t(h) = ε(1₁h)1₂ as a matrix.
    pub fn eps_t_map(&self) -> LinearMap {
        let d = self.dim();
        let f = self.field();
        matrix_of(d, d, f, |hb| {
            self.unit_elem()
                .coprod(&self.comul, 0) // (1₁, 1₂)
                .tensor(&Elem::basis(d, hb, f)) // (1₁, 1₂, h)
                .move_slot(2, 1) // (1₁, h, 1₂)
                .mul(&self.alg.mul, 0) // (1₁h, 1₂)
                .counit(&self.counit, 0) // ε(1₁h) 1₂
        })
    }

    /// The source counital map ε_s(h) = 1₁ε(h1₂) as a matrix.
    pub fn eps_s_map(&self) -> LinearMap {
        let d = self.dim();
        let f = self.field();
        matrix_of(d, d, f, |hb| {
            self.unit_elem()
                .coprod(&self.comul, 0) // (1₁, 1₂)
                .tensor(&Elem::basis(d, hb, f)) // (1₁, 1₂, h)
                .move_slot(2, 1) // (1₁, h, 1₂)
                .mul(&self.alg.mul, 1) // (1₁, h1₂)
                .counit(&self.counit, 1) // 1₁ ε(h1₂)
        })
    }
}

/// Row-major flattening of a multi-index.
fn flat_index(idx: &[usize], dims: &[usize]) -> usize {
    let mut k = 0;
    for (i, d) in idx.iter().zip(dims) {
        k = k * d + i;
    }
    k
}

/// Build a matrix column-by-column from element scripts, flattening the
/// output slots row-major.
fn matrix_of(rows: usize, cols: usize, f: Field, col: impl Fn(usize) -> Elem) -> LinearMap {
    let mut m = LinearMap::zeros(rows, cols, f);
    for c in 0..cols {
        let t = col(c).to_tensor();
        let dims = t.shape().to_vec();
        for (idx, v) in t.iter_nonzero() {
            m.set(flat_index(&idx, &dims), c, v.clone());
        }
    }
    m
}

/// Dense coordinates of an element, flattened row-major.
fn elem_coords(e: &Elem, f: Field) -> Vec<Scalar> {
    let t = e.to_tensor();
    let dims = t.shape().to_vec();
    let n: usize = dims.iter().product();
    let mut v = vec![f.zero(); n];
    for (idx, c) in t.iter_nonzero() {
        v[flat_index(&idx, &dims)] = c.clone();
    }
    v
}

/// The counital maps of a weak Hopf algebra together with splittings of
/// their images: `t_split.i`/`t_split.p` factor ε_t through H_t and
/// `s_split` does the same for ε_s. Construction fails if either map is not
/// idempotent, which is itself a consequence of the axioms.
#[derive(Debug, Clone)]
pub struct CounitalData {
    /// ε_t as a matrix.
    pub eps_t: LinearMap,
    /// ε_s as a matrix.
    pub eps_s: LinearMap,
    /// Splitting of ε_t through its image H_t.
    pub t_split: Splitting,
    /// Splitting of ε_s through its image H_s.
    pub s_split: Splitting,
}

/// Compute ε_t, ε_s and split their images.
pub fn counital_maps(h: &WeakHopfData) -> Result<CounitalData> {
    let eps_t = h.eps_t_map();
    let eps_s = h.eps_s_map();
    let t_split = split_idempotent(&eps_t)?;
    let s_split = split_idempotent(&eps_s)?;
    Ok(CounitalData { eps_t, eps_s, t_split, s_split })
}

/// Verify the full weak Hopf axiom system: structural laws, the five
/// defining axioms, and the derived calculus of the counital maps ε_t, ε_s
/// and their images. Identities quantified over H_t or H_s are checked on
/// the spanning sets ε_t(e_h), ε_s(e_h) so that no rank computation enters
/// the verification path.
pub fn verify_weak_hopf(h: &WeakHopfData) -> Report {
    let mut r = Runner::new("verify_weak_hopf");
    run_weak_hopf_checks(h, &mut r);
    r.finish()
}

fn run_weak_hopf_checks(h: &WeakHopfData, r: &mut Runner) {
    let d = h.dim();
    let f = h.field();
    let mul = &h.alg.mul;
    let comul = &h.comul;
    let eps = &h.counit;
    let unit = h.unit_elem();
    let et = h.eps_t_map();
    let es = h.eps_s_map();
    let zs: Vec<Elem> = (0..d).map(|k| Elem::from_vec(&et.col(k), f)).collect();
    let ys: Vec<Elem> = (0..d).map(|k| Elem::from_vec(&es.col(k), f)).collect();

    // Structural laws.
    h.alg.check_assoc_unital(r, "assoc-unital");
    r.elem_eq("coassoc", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        (e.coprod(comul, 0).coprod(comul, 0), e.coprod(comul, 0).coprod(comul, 1))
    });
    r.probe("counit", |p| {
        p.elem_eq(&[d], |idx| {
            let e = Elem::basis(d, idx[0], f);
            (e.coprod(comul, 0).counit(eps, 1), e.clone())
        });
        p.elem_eq(&[d], |idx| {
            let e = Elem::basis(d, idx[0], f);
            (e.coprod(comul, 0).counit(eps, 0), e.clone())
        });
    });
    r.probe("s-inverse", |p| {
        let id = LinearMap::identity(d, f);
        p.map_eq(&compose(&h.s, &h.s_inv).expect("square"), &id);
        p.map_eq(&compose(&h.s_inv, &h.s).expect("square"), &id);
    });
    // Δ is multiplicative (though not unital).
    r.elem_eq("delta-mult", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        let lhs = e.mul(mul, 0).coprod(comul, 0);
        let rhs = e
            .coprod(comul, 0) // (h1, h2, h')
            .coprod(comul, 2) // (h1, h2, h'1, h'2)
            .move_slot(2, 1) // (h1, h'1, h2, h'2)
            .mul(mul, 0)
            .mul(mul, 1);
        (lhs, rhs)
    });

    // Weak unitality of Δ: Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1).
    r.probe("delta21", |p| {
        let lhs = unit.coprod(comul, 0).coprod(comul, 0);
        let mul3 = [SlotOp::Mul(mul), SlotOp::Mul(mul), SlotOp::Mul(mul)];
        let d1 = unit.coprod(comul, 0);
        let rhs1 = d1.tensor(&unit).pointwise(&unit.tensor(&d1), &mul3);
        let rhs2 = unit.tensor(&d1).pointwise(&d1.tensor(&unit), &mul3);
        p.elem_eq(&[], |_| (lhs.clone(), rhs1.clone()));
        p.elem_eq(&[], |_| (lhs.clone(), rhs2.clone()));
    });

    // Weak multiplicativity of ε: ε(xyz) = ε(xy₁)ε(y₂z) = ε(xy₂)ε(y₁z).
    r.probe("exyz", |p| {
        let tri = [d, d, d];
        p.elem_eq(&tri, |idx| {
            let e = Elem::basis_tuple(&tri, idx, f);
            let lhs = e.mul(mul, 0).mul(mul, 0).counit(eps, 0);
            let rhs = e
                .coprod(comul, 1) // (x, y1, y2, z)
                .mul(mul, 0) // (xy1, y2, z)
                .mul(mul, 1) // (xy1, y2z)
                .counit(eps, 0)
                .counit(eps, 0);
            (lhs, rhs)
        });
        p.elem_eq(&tri, |idx| {
            let e = Elem::basis_tuple(&tri, idx, f);
            let lhs = e.mul(mul, 0).mul(mul, 0).counit(eps, 0);
            let rhs = e
                .coprod(comul, 1) // (x, y1, y2, z)
                .move_slot(2, 1) // (x, y2, y1, z)
                .mul(mul, 0) // (xy2, y1, z)
                .mul(mul, 1) // (xy2, y1z)
                .counit(eps, 0)
                .counit(eps, 0);
            (lhs, rhs)
        });
    });

    // Antipode axioms against the inline counital scripts.
    r.elem_eq("antipode-t", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let lhs = e.coprod(comul, 0).map1(&h.s, 1).mul(mul, 0);
        let rhs = unit
            .coprod(comul, 0)
            .tensor(&e) // (1₁, 1₂, h)
            .move_slot(2, 1) // (1₁, h, 1₂)
            .mul(mul, 0) // (1₁h, 1₂)
            .counit(eps, 0);
        (lhs, rhs)
    });
    r.elem_eq("antipode-s", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let lhs = e.coprod(comul, 0).map1(&h.s, 0).mul(mul, 0);
        let rhs = unit
            .coprod(comul, 0)
            .tensor(&e) // (1₁, 1₂, h)
            .move_slot(2, 1) // (1₁, h, 1₂)
            .mul(mul, 1) // (1₁, h1₂)
            .counit(eps, 1);
        (lhs, rhs)
    });
    r.elem_eq("antipode-composite", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let lhs = e
            .coprod(comul, 0) // (h1, h2)
            .coprod(comul, 1) // (h1, h2, h3)
            .map1(&h.s, 0)
            .map1(&h.s, 2) // (S(h1), h2, S(h3))
            .mul(mul, 0)
            .mul(mul, 0);
        (lhs, e.map1(&h.s, 0))
    });

    // Derived calculus of ε_t and ε_s.
    r.probe("2.7-t", |p| {
        let m2 = matrix_of(d, d, f, |hb| Elem::basis(d, hb, f).coprod(comul, 0).map1(&h.s, 1).mul(mul, 0));
        p.map_eq(&et, &m2);
    });
    r.probe("2.7-s", |p| {
        let m2 = matrix_of(d, d, f, |hb| Elem::basis(d, hb, f).coprod(comul, 0).map1(&h.s, 0).mul(mul, 0));
        p.map_eq(&es, &m2);
    });
    r.elem_eq("delta1-t", &[], |_| {
        let d1 = unit.coprod(comul, 0);
        (d1.map1(&et, 1), d1.clone())
    });
    r.elem_eq("delta1-s", &[], |_| {
        let d1 = unit.coprod(comul, 0);
        (d1.map1(&es, 0), d1.clone())
    });
    r.elem_eq("2.9-t", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        (e.map1(&et, 1).mul(mul, 0).map1(&et, 0), e.mul(mul, 0).map1(&et, 0))
    });
    r.elem_eq("2.9-s", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        (e.map1(&es, 0).mul(mul, 0).map1(&es, 0), e.mul(mul, 0).map1(&es, 0))
    });
    r.elem_eq("2.10-t", &[d], |idx| {
        let z = &zs[idx[0]];
        (z.coprod(comul, 0).map1(&et, 1), z.coprod(comul, 0))
    });
    r.elem_eq("2.10-s", &[d], |idx| {
        let y = &ys[idx[0]];
        (y.coprod(comul, 0).map1(&es, 0), y.coprod(comul, 0))
    });
    r.elem_eq("2.11-t", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let lhs = e.coprod(comul, 0).map1(&et, 1);
        let rhs = unit
            .coprod(comul, 0)
            .tensor(&e) // (1₁, 1₂, h)
            .move_slot(2, 1) // (1₁, h, 1₂)
            .mul(mul, 0); // (1₁h, 1₂)
        (lhs, rhs)
    });
    r.elem_eq("2.11-s", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let lhs = e.coprod(comul, 0).map1(&es, 0);
        let rhs = unit
            .coprod(comul, 0)
            .tensor(&e) // (1₁, 1₂, h)
            .move_slot(2, 1) // (1₁, h, 1₂)
            .mul(mul, 1); // (1₁, h1₂)
        (lhs, rhs)
    });
    r.elem_eq("cucu-t", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        let lhs = e.map1(&et, 1).mul(mul, 0);
        let rhs = e
            .coprod(comul, 0) // (h1, h2, h')
            .move_slot(2, 1) // (h1, h', h2)
            .mul(mul, 0) // (h1h', h2)
            .counit(eps, 0);
        (lhs, rhs)
    });
    r.elem_eq("cucu-s", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        let lhs = e.map1(&es, 0).mul(mul, 0);
        let rhs = e
            .coprod(comul, 1) // (h, h'1, h'2)
            .move_slot(0, 1) // (h'1, h, h'2)
            .mul(mul, 1) // (h'1, hh'2)
            .counit(eps, 1);
        (lhs, rhs)
    });
    r.elem_eq("lala-t", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        (e.map1(&et, 0).mul(mul, 0).map1(&et, 0), e.map1(&et, 0).map1(&et, 1).mul(mul, 0))
    });
    r.elem_eq("lala-s", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        (e.map1(&es, 1).mul(mul, 0).map1(&es, 0), e.map1(&es, 0).map1(&es, 1).mul(mul, 0))
    });
    r.elem_eq("est-t", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        (e.coprod(comul, 0).map1(&et, 0).mul(mul, 0), e.clone())
    });
    r.elem_eq("est-s", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        (e.coprod(comul, 0).map1(&es, 1).mul(mul, 0), e.clone())
    });
    r.elem_eq("titi-t", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let lhs = e.coprod(comul, 0).map1(&et, 0);
        let rhs = unit.coprod(comul, 0).map1(&h.s, 0).tensor(&e).mul(mul, 1); // (S(1₁), 1₂h)
        (lhs, rhs)
    });
    r.elem_eq("titi-s", &[d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let lhs = e.coprod(comul, 0).map1(&es, 1);
        let rhs = unit
            .coprod(comul, 0)
            .map1(&h.s, 1)
            .tensor(&e) // (1₁, S(1₂), h)
            .move_slot(2, 0) // (h, 1₁, S(1₂))
            .mul(mul, 0); // (h1₁, S(1₂))
        (lhs, rhs)
    });
    r.elem_eq("dudu-t", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        (e.map1(&et, 1).mul(mul, 0).counit(eps, 0), e.mul(mul, 0).counit(eps, 0))
    });
    r.elem_eq("dudu-s", &[d, d], |idx| {
        let e = Elem::basis_tuple(&[d, d], idx, f);
        (e.map1(&es, 0).mul(mul, 0).counit(eps, 0), e.mul(mul, 0).counit(eps, 0))
    });
    r.elem_eq("comutst", &[d, d], |idx| {
        let y = &ys[idx[0]];
        let z = &zs[idx[1]];
        (y.tensor(z).mul(mul, 0), z.tensor(y).mul(mul, 0))
    });
    r.probe("delta-y", |p| {
        p.elem_eq(&[d], |idx| {
            let y = &ys[idx[0]];
            let rhs = unit
                .coprod(comul, 0)
                .tensor(y) // (1₁, 1₂, y)
                .move_slot(2, 1) // (1₁, y, 1₂)
                .mul(mul, 1); // (1₁, y1₂)
            (y.coprod(comul, 0), rhs)
        });
        p.elem_eq(&[d], |idx| {
            let y = &ys[idx[0]];
            let rhs = unit.coprod(comul, 0).tensor(y).mul(mul, 1); // (1₁, 1₂y)
            (y.coprod(comul, 0), rhs)
        });
    });
    r.probe("delta-z", |p| {
        p.elem_eq(&[d], |idx| {
            let z = &zs[idx[0]];
            let rhs = unit
                .coprod(comul, 0)
                .tensor(z) // (1₁, 1₂, z)
                .move_slot(2, 0) // (z, 1₁, 1₂)
                .mul(mul, 0); // (z1₁, 1₂)
            (z.coprod(comul, 0), rhs)
        });
        p.elem_eq(&[d], |idx| {
            let z = &zs[idx[0]];
            let rhs = unit
                .coprod(comul, 0)
                .tensor(z) // (1₁, 1₂, z)
                .move_slot(2, 1) // (1₁, z, 1₂)
                .mul(mul, 0); // (1₁z, 1₂)
            (z.coprod(comul, 0), rhs)
        });
    });
    r.elem_eq("y-titi", &[d], |idx| {
        let y = &ys[idx[0]];
        let t1 = unit.coprod(comul, 0).map1(&h.s, 1); // (1₁, S(1₂))
        let lhs = t1
            .tensor(y) // (1₁, S(1₂), y)
            .move_slot(2, 0) // (y, 1₁, S(1₂))
            .mul(mul, 0); // (y1₁, S(1₂))
        let rhs = t1.tensor(y).mul(mul, 1); // (1₁, S(1₂)y)
        (lhs, rhs)
    });
    r.elem_eq("z-titi", &[d], |idx| {
        let z = &zs[idx[0]];
        let t1 = unit.coprod(comul, 0).map1(&h.s, 0); // (S(1₁), 1₂)
        let lhs = t1
            .tensor(z) // (S(1₁), 1₂, z)
            .move_slot(2, 0) // (z, S(1₁), 1₂)
            .mul(mul, 0); // (zS(1₁), 1₂)
        let rhs = t1.tensor(z).mul(mul, 1); // (S(1₁), 1₂z)
        (lhs, rhs)
    });
    r.elem_eq("skew-y", &[d, d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let y = &ys[idx[1]];
        let lhs = e
            .coprod(comul, 0)
            .tensor(y) // (h1, h2, y)
            .move_slot(2, 1) // (h1, y, h2)
            .mul(mul, 0); // (h1y, h2)
        let rhs = e
            .coprod(comul, 0)
            .tensor(y)
            .map1(&h.s, 2) // (h1, h2, S(y))
            .mul(mul, 1); // (h1, h2S(y))
        (lhs, rhs)
    });
    r.elem_eq("2.31b", &[d, d], |idx| {
        let e = Elem::basis(d, idx[0], f);
        let z = &zs[idx[1]];
        let lhs = e
            .coprod(comul, 0)
            .tensor(z) // (h1, h2, z)
            .move_slot(2, 1) // (h1, z, h2)
            .mul(mul, 1); // (h1, zh2)
        let rhs = e
            .coprod(comul, 0)
            .tensor(z)
            .map1(&h.s, 2) // (h1, h2, S(z))
            .move_slot(2, 0) // (S(z), h1, h2)
            .mul(mul, 0); // (S(z)h1, h2)
        (lhs, rhs)
    });
    r.probe("ht-subalg", |p| {
        p.elem_eq(&[], |_| (unit.map1(&et, 0), unit.clone()));
        p.elem_eq(&[d, d], |idx| {
            let prod = zs[idx[0]].tensor(&zs[idx[1]]).mul(mul, 0);
            (prod.map1(&et, 0), prod.clone())
        });
    });
    r.probe("hs-subalg", |p| {
        p.elem_eq(&[], |_| (unit.map1(&es, 0), unit.clone()));
        p.elem_eq(&[d, d], |idx| {
            let prod = ys[idx[0]].tensor(&ys[idx[1]]).mul(mul, 0);
            (prod.map1(&es, 0), prod.clone())
        });
    });
}

/// A module algebra over a weak Hopf algebra: an algebra A with an H-action
/// that is multiplicative on products and weakly unital, h·1 = ε_t(h)·1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakModuleAlgebraData {
    /// Underlying algebra.
    pub alg: AlgebraData,
    /// Action tensor, shape `[d_H, d_A, d_A]`.
    pub action: Tensor,
}

/// Verify the weak module algebra laws.
pub fn verify_weak_module_algebra(h: &WeakHopfData, a: &WeakModuleAlgebraData) -> Report {
    let mut r = Runner::new("verify_weak_module_algebra");
    run_weak_module_algebra_checks(h, a, &mut r);
    r.finish()
}

fn run_weak_module_algebra_checks(h: &WeakHopfData, a: &WeakModuleAlgebraData, r: &mut Runner) {
    let dh = h.dim();
    let da = a.alg.dim;
    let f = h.field();
    let act = &a.action;
    let mul_a = &a.alg.mul;

    a.alg.check_assoc_unital(r, "alg-assoc-unital");
    r.elem_eq("module-assoc", &[dh, dh, da], |idx| {
        let e = Elem::basis_tuple(&[dh, dh, da], idx, f);
        (e.mul(&h.alg.mul, 0).act(act, 0), e.act(act, 1).act(act, 0))
    });
    r.elem_eq("module-unit", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        (h.unit_elem().tensor(&e).act(act, 0), e.clone())
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
    let et = h.eps_t_map();
    r.elem_eq("modalg1", &[dh], |idx| {
        let e = Elem::basis(dh, idx[0], f);
        let one_a = a.alg.unit_elem();
        let lhs = e.tensor(&one_a).act(act, 0);
        let rhs = e.map1(&et, 0).tensor(&one_a).act(act, 0);
        (lhs, rhs)
    });
}

/// The relative smash product A #_{H_t} H of a weak module algebra with H:
/// the quotient of A⊗H by the relations a(z·1_A)⊗h = a⊗zh for z in H_t,
/// carrying the multiplication (a#h)(a'#h') = a(h₁·a') # h₂h'.
#[derive(Debug, Clone)]
pub struct RelativeSmash {
    /// The quotient algebra.
    pub alg: AlgebraData,
    /// The presentation of the carrier as a quotient of A⊗H.
    pub quotient: Quotient,
    /// The multiplication on the ambient space A⊗H, before descending.
    pub m_full: LinearMap,
    /// Certification: the module algebra laws, well-definedness of the
    /// descended multiplication, and associativity/unitality.
    pub report: Report,
}

/// Build the relative smash product and certify it.
pub fn relative_smash(h: &WeakHopfData, a: &WeakModuleAlgebraData) -> Result<RelativeSmash> {
    let op = "relative_smash";
    let pre = verify_weak_module_algebra(h, a);
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: op.into(), id, report: Box::new(pre) });
    }
    let mut r = Runner::new(op);
    r.absorb(pre);
    let (alg, quotient, m_full) = build_relative_smash(h, a, &mut r)?;
    let report = r.finish();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    Ok(RelativeSmash { alg, quotient, m_full, report })
}

/// Shared construction of the relative smash product; pushes the
/// well-definedness and associativity certifications onto the runner.
fn build_relative_smash(h: &WeakHopfData, a: &WeakModuleAlgebraData, r: &mut Runner) -> Result<(AlgebraData, Quotient, LinearMap)> {
    let dh = h.dim();
    let da = a.alg.dim;
    let f = h.field();
    let ambient = da * dh;
    let counital = counital_maps(h)?;
    let act = &a.action;
    let mul_a = &a.alg.mul;
    let mul_h = &h.alg.mul;

    // Relations a(z·1_A)⊗h − a⊗zh over a basis of A, of H_t, and of H.
    let one_a = a.alg.unit_elem();
    let mut relations = Vec::new();
    for k in 0..counital.t_split.rank {
        let z = Elem::from_vec(&counital.t_split.i.col(k), f);
        let z_one = z.tensor(&one_a).act(act, 0); // z·1_A
        for ai in 0..da {
            let left_a = Elem::basis(da, ai, f).tensor(&z_one).mul(mul_a, 0); // a(z·1_A)
            for hb in 0..dh {
                let lhs = left_a.tensor(&Elem::basis(dh, hb, f));
                let zh = z.tensor(&Elem::basis(dh, hb, f)).mul(mul_h, 0);
                let rhs = Elem::basis(da, ai, f).tensor(&zh);
                relations.push(elem_coords(&lhs.sub(&rhs), f));
            }
        }
    }
    let quotient = Quotient::new(ambient, relations, f)?;

    // Multiplication on the ambient space: (a⊗h)(a'⊗h') = a(h₁·a') ⊗ h₂h'.
    let dims = [da, dh, da, dh];
    let m_full = matrix_of(ambient, ambient * ambient, f, |c| {
        let hj = c % dh;
        let aj = (c / dh) % da;
        let hi = (c / (dh * da)) % dh;
        let ai = c / (dh * da * dh);
        Elem::basis_tuple(&dims, &[ai, hi, aj, hj], f)
            .coprod(&h.comul, 1) // (a, h1, h2, a', h')
            .move_slot(3, 2) // (a, h1, a', h2, h')
            .act(act, 1) // (a, h1·a', h2, h')
            .mul(mul_a, 0) // (a(h1·a'), h2, h')
            .mul(mul_h, 1) // (…, h2h')
    });

    // The multiplication descends iff it kills the relations on both sides.
    let rel_t = transpose(&quotient.relations);
    let id_amb = LinearMap::identity(ambient, f);
    let qm = compose(&quotient.q, &m_full)?;
    let left_kill = compose(&qm, &kron(&rel_t, &id_amb)?)?;
    let right_kill = compose(&qm, &kron(&id_amb, &rel_t)?)?;
    r.probe("smash-well-defined", |p| {
        p.bool_check(left_kill.is_zero(), "relations are a left ideal for the smash multiplication");
        p.bool_check(right_kill.is_zero(), "relations are a right ideal for the smash multiplication");
    });

    let dim = quotient.dim;
    let mul_b = compose(&qm, &kron(&quotient.s, &quotient.s)?)?;
    let mul_t = mul_b.to_tensor(&[dim, dim], &[dim])?;
    let one_b = quotient.q.apply(&elem_coords(&one_a.tensor(&h.unit_elem()), f))?;
    let unit_t = Tensor::from_fn(&[dim], f, |idx| one_b[idx[0]].clone());
    let labels = (0..dim).map(|k| format!("q{k}")).collect();
    let alg = AlgebraData::new(labels, mul_t, unit_t)?;
    alg.check_assoc_unital(r, "smash-assoc-unital");
    Ok((alg, quotient, m_full))
}

/// Which comodule structures a weak comodule algebra carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComoduleSide {
    /// A right coaction ρ: A → A⊗H only.
    Right,
    /// A left coaction λ: A → H⊗A only.
    Left,
    /// Both, with the bicomodule compatibility.
    Bi,
}

/// A (right, left, or bi) comodule algebra over a weak Hopf algebra. The
/// coactions are multiplicative maps whose unit images satisfy the weak
/// unitality laws rather than ρ(1) = 1⊗1.
#[derive(Debug, Clone)]
pub struct WeakComoduleAlgebraData {
    /// Underlying algebra.
    pub alg: AlgebraData,
    /// Right coaction A → A⊗H as a (d_A·d_H)×d_A matrix, if present.
    pub rho: Option<LinearMap>,
    /// Left coaction A → H⊗A as a (d_H·d_A)×d_A matrix, if present.
    pub lambda: Option<LinearMap>,
}

/// Verify the weak comodule algebra laws for the requested side. The left
/// suite also records whether the three equivalent unitality conditions
/// (2.1b), (NSW), (NV) hold, and certifies under `equiv-21b-nsw-nv` that
/// their verdicts agree whenever `h` is a weak Hopf algebra and the
/// surrounding comodule-algebra laws hold (the equivalence is only a
/// theorem under those hypotheses).
pub fn verify_weak_comodule_algebra(h: &WeakHopfData, a: &WeakComoduleAlgebraData, side: ComoduleSide) -> Report {
    let mut r = Runner::new("verify_weak_comodule_algebra");
    a.alg.check_assoc_unital(&mut r, "alg-assoc-unital");
    let alg_ok = r.ok();
    let needs_rho = matches!(side, ComoduleSide::Right | ComoduleSide::Bi);
    let needs_lambda = matches!(side, ComoduleSide::Left | ComoduleSide::Bi);
    if needs_rho {
        match &a.rho {
            Some(rho) => run_right_comodule_checks(h, &a.alg, rho, &mut r),
            None => r.bool_check("rho-present", false, "right coaction required but absent"),
        }
    }
    if needs_lambda {
        match &a.lambda {
            Some(lambda) => run_left_comodule_checks(h, &a.alg, lambda, alg_ok, &mut r),
            None => r.bool_check("lambda-present", false, "left coaction required but absent"),
        }
    }
    if matches!(side, ComoduleSide::Bi) {
        if let (Some(rho), Some(lambda)) = (&a.rho, &a.lambda) {
            let (da, dh, f) = (a.alg.dim, h.dim(), h.field());
            r.elem_eq("bicomodule", &[da], |idx| {
                let e = Elem::basis(da, idx[0], f);
                let lhs = e.map_multi(rho, 0, &[da, dh]).map_multi(lambda, 0, &[dh, da]);
                let rhs = e.map_multi(lambda, 0, &[dh, da]).map_multi(rho, 1, &[da, dh]);
                (lhs, rhs)
            });
        }
    }
    r.finish()
}

fn run_right_comodule_checks(h: &WeakHopfData, alg: &AlgebraData, rho: &LinearMap, r: &mut Runner) {
    let da = alg.dim;
    let dh = h.dim();
    let f = h.field();
    let mul_a = &alg.mul;
    let mul_h = &h.alg.mul;

    r.elem_eq("rho-mult", &[da, da], |idx| {
        let e = Elem::basis_tuple(&[da, da], idx, f);
        let lhs = e.mul(mul_a, 0).map_multi(rho, 0, &[da, dh]);
        let rhs = e
            .map_multi(rho, 0, &[da, dh]) // (a0, a1, a')
            .map_multi(rho, 2, &[da, dh]) // (a0, a1, a'0, a'1)
            .move_slot(2, 1) // (a0, a'0, a1, a'1)
            .mul(mul_a, 0)
            .mul(mul_h, 1);
        (lhs, rhs)
    });
    r.elem_eq("2.2a", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        let lhs = e.map_multi(rho, 0, &[da, dh]).map_multi(rho, 0, &[da, dh]);
        let rhs = e.map_multi(rho, 0, &[da, dh]).coprod(&h.comul, 1);
        (lhs, rhs)
    });
    r.elem_eq("rho-counit", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        (e.map_multi(rho, 0, &[da, dh]).counit(&h.counit, 1), e.clone())
    });
    let et = h.eps_t_map();
    r.elem_eq("2.2b", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        let lhs = alg
            .unit_elem()
            .map_multi(rho, 0, &[da, dh]) // (1⁰, 1¹)
            .tensor(&e) // (1⁰, 1¹, a)
            .move_slot(2, 1) // (1⁰, a, 1¹)
            .mul(mul_a, 0); // (1⁰a, 1¹)
        let rhs = e.map_multi(rho, 0, &[da, dh]).map1(&et, 1);
        (lhs, rhs)
    });
}

fn run_left_comodule_checks(h: &WeakHopfData, alg: &AlgebraData, lambda: &LinearMap, alg_ok: bool, r: &mut Runner) {
    let da = alg.dim;
    let dh = h.dim();
    let f = h.field();
    let mul_a = &alg.mul;
    let mul_h = &h.alg.mul;
    let es = h.eps_s_map();

    // Run the left-side checks in a scratch runner so the conditional
    // equivalence certification can read the individual verdicts.
    let mut t = Runner::new("left");
    t.elem_eq("lambda-mult", &[da, da], |idx| {
        let e = Elem::basis_tuple(&[da, da], idx, f);
        let lhs = e.mul(mul_a, 0).map_multi(lambda, 0, &[dh, da]);
        let rhs = e
            .map_multi(lambda, 0, &[dh, da]) // (a⁻¹, a⁰, a')
            .map_multi(lambda, 2, &[dh, da]) // (a⁻¹, a⁰, a'⁻¹, a'⁰)
            .move_slot(2, 1) // (a⁻¹, a'⁻¹, a⁰, a'⁰)
            .mul(mul_h, 0)
            .mul(mul_a, 1);
        (lhs, rhs)
    });
    t.elem_eq("2.1a", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        let lhs = e.map_multi(lambda, 0, &[dh, da]).map_multi(lambda, 1, &[dh, da]);
        let rhs = e.map_multi(lambda, 0, &[dh, da]).coprod(&h.comul, 0);
        (lhs, rhs)
    });
    t.elem_eq("lambda-counit", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        (e.map_multi(lambda, 0, &[dh, da]).counit(&h.counit, 0), e.clone())
    });
    t.elem_eq("2.1b", &[da], |idx| {
        let e = Elem::basis(da, idx[0], f);
        let lhs = alg
            .unit_elem()
            .map_multi(lambda, 0, &[dh, da]) // (1⁻¹, 1⁰)
            .tensor(&e) // (1⁻¹, 1⁰, a)
            .move_slot(2, 1) // (1⁻¹, a, 1⁰)
            .mul(mul_a, 1); // (1⁻¹, a1⁰)
        let rhs = e.map_multi(lambda, 0, &[dh, da]).map1(&es, 0);
        (lhs, rhs)
    });
    t.elem_eq("NSW", &[], |_| {
        let lam1 = alg.unit_elem().map_multi(lambda, 0, &[dh, da]); // (1⁻¹, 1⁰)
        let lhs = lam1.coprod(&h.comul, 0); // (1⁻¹₁, 1⁻¹₂, 1⁰)
        let rhs = h
            .unit_elem()
            .coprod(&h.comul, 0) // (1₁, 1₂)
            .tensor(&lam1) // (1₁, 1₂, 1⁻¹, 1⁰)
            .move_slot(2, 1) // (1₁, 1⁻¹, 1₂, 1⁰)
            .mul(mul_h, 1); // (1₁, 1⁻¹1₂, 1⁰)
        (lhs, rhs)
    });
    t.elem_eq("NV", &[], |_| {
        let lam1 = alg.unit_elem().map_multi(lambda, 0, &[dh, da]);
        (lam1.clone(), lam1.map1(&es, 0))
    });
    let rep = t.finish();
    let prereq = alg_ok && rep.passed("lambda-mult") && rep.passed("2.1a") && rep.passed("lambda-counit");
    let (v1, v2, v3) = (rep.passed("2.1b"), rep.passed("NSW"), rep.passed("NV"));
    // The three unitality conditions are interchangeable only over a genuine
    // weak Hopf algebra: the proof rewrites each into the next through the
    // counit and antipode axioms of H. The certification is therefore
    // conditional on H itself; the (expensive) re-verification runs only
    // when the verdicts actually disagree.
    let equiv = !prereq || (v1 == v2 && v2 == v3) || !verify_weak_hopf(h).overall;
    r.absorb(rep);
    r.bool_check(
        "equiv-21b-nsw-nv",
        equiv,
        "over a weak Hopf algebra satisfying the left comodule algebra laws the three unitality conditions share one verdict",
    );
}

/// A weak left-left Yetter–Drinfeld module: an H-module and left H-comodule
/// whose coaction lands in Δ(1)·(H⊗M) and intertwines the action by
/// (h·m)⁻¹ ⊗ (h·m)⁰ = h₁m⁻¹S(h₃) ⊗ h₂·m⁰.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakYdModuleData {
    /// Carrier dimension.
    pub dim: usize,
    /// Action tensor, shape `[d_H, d_M, d_M]`.
    pub action: Tensor,
    /// Coaction M → H⊗M as a (d_H·d_M)×d_M map.
    pub coaction: LinearMap,
}

/// A weak Yetter–Drinfeld module algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakYdAlgebraData {
    /// Underlying algebra.
    pub alg: AlgebraData,
    /// Action tensor, shape `[d_H, d_A, d_A]`.
    pub action: Tensor,
    /// Coaction A → H⊗A.
    pub coaction: LinearMap,
}

impl WeakYdAlgebraData {
    /// Forget the multiplication.
    pub fn yd_module(&self) -> WeakYdModuleData {
        WeakYdModuleData { dim: self.alg.dim, action: self.action.clone(), coaction: self.coaction.clone() }
    }

    /// Forget the coaction.
    pub fn module_algebra(&self) -> WeakModuleAlgebraData {
        WeakModuleAlgebraData { alg: self.alg.clone(), action: self.action.clone() }
    }
}

/// Verify the weak Yetter–Drinfeld laws. The two compatibility forms (wyd2)
/// and (wyd3) are each checked, and `equiv-wyd2-wyd3` certifies that their
/// verdicts agree whenever `h` is a weak Hopf algebra and the
/// module/comodule laws and (wyd1) hold.
pub fn verify_weak_yd(h: &WeakHopfData, m: &WeakYdModuleData) -> Report {
    let mut r = Runner::new("verify_weak_yd");
    run_weak_yd_checks(h, m, &mut r);
    r.finish()
}

fn run_weak_yd_checks(h: &WeakHopfData, m: &WeakYdModuleData, r: &mut Runner) {
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let act = &m.action;
    let lam = &m.coaction;
    let mul = &h.alg.mul;
    let comul = &h.comul;

    let mut t = Runner::new("yd");
    t.elem_eq("module-assoc", &[dh, dh, dm], |idx| {
        let e = Elem::basis_tuple(&[dh, dh, dm], idx, f);
        (e.mul(mul, 0).act(act, 0), e.act(act, 1).act(act, 0))
    });
    t.elem_eq("module-unit", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        (h.unit_elem().tensor(&e).act(act, 0), e.clone())
    });
    t.elem_eq("comodule-coassoc", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        let lhs = e.map_multi(lam, 0, &[dh, dm]).map_multi(lam, 1, &[dh, dm]);
        let rhs = e.map_multi(lam, 0, &[dh, dm]).coprod(comul, 0);
        (lhs, rhs)
    });
    t.elem_eq("comodule-counit", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        (e.map_multi(lam, 0, &[dh, dm]).counit(&h.counit, 0), e.clone())
    });
    t.elem_eq("wyd1", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        let lm = e.map_multi(lam, 0, &[dh, dm]);
        let rhs = h.unit_elem().coprod(comul, 0).pointwise(&lm, &[SlotOp::Mul(mul), SlotOp::LAct(act)]);
        (lm, rhs)
    });
    t.elem_eq("wyd2", &[dh, dm], |idx| {
        let e = Elem::basis_tuple(&[dh, dm], idx, f);
        let lhs = e
            .coprod(comul, 0) // (h1, h2, m)
            .map_multi(lam, 2, &[dh, dm]) // (h1, h2, m⁻¹, m⁰)
            .move_slot(2, 1) // (h1, m⁻¹, h2, m⁰)
            .mul(mul, 0) // (h1m⁻¹, h2, m⁰)
            .act(act, 1); // (h1m⁻¹, h2·m⁰)
        let rhs = e
            .coprod(comul, 0) // (h1, h2, m)
            .move_slot(1, 2) // (h1, m, h2)
            .act(act, 0) // (h1·m, h2)
            .map_multi(lam, 0, &[dh, dm]) // (w⁻¹, w⁰, h2)
            .move_slot(2, 1) // (w⁻¹, h2, w⁰)
            .mul(mul, 0); // (w⁻¹h2, w⁰)
        (lhs, rhs)
    });
    t.elem_eq("wyd3", &[dh, dm], |idx| {
        let e = Elem::basis_tuple(&[dh, dm], idx, f);
        let lhs = e.act(act, 0).map_multi(lam, 0, &[dh, dm]);
        let rhs = e
            .coprod(comul, 0) // (h1, h2, m)
            .coprod(comul, 1) // (h1, h2, h3, m)
            .map1(&h.s, 2) // (h1, h2, S(h3), m)
            .map_multi(lam, 3, &[dh, dm]) // (h1, h2, S(h3), m⁻¹, m⁰)
            .move_slot(3, 1) // (h1, m⁻¹, h2, S(h3), m⁰)
            .mul(mul, 0) // (h1m⁻¹, h2, S(h3), m⁰)
            .move_slot(2, 1) // (h1m⁻¹, S(h3), h2, m⁰)
            .mul(mul, 0) // (h1m⁻¹S(h3), h2, m⁰)
            .act(act, 1); // (h1m⁻¹S(h3), h2·m⁰)
        (lhs, rhs)
    });
    let rep = t.finish();
    let prereq = rep.passed("module-assoc")
        && rep.passed("module-unit")
        && rep.passed("comodule-coassoc")
        && rep.passed("comodule-counit")
        && rep.passed("wyd1");
    // Rewriting (wyd2) into (wyd3) multiplies by S(h₃) and contracts with
    // the antipode axioms of H, so the two forms are interchangeable only
    // over a genuine weak Hopf algebra. As above, the re-verification of H
    // runs only when the verdicts actually disagree.
    let equiv =
        !prereq || (rep.passed("wyd2") == rep.passed("wyd3")) || !verify_weak_hopf(h).overall;
    r.absorb(rep);
    r.bool_check(
        "equiv-wyd2-wyd3",
        equiv,
        "over a weak Hopf algebra satisfying the module, comodule, and projection laws the two compatibility forms share one verdict",
    );
}

/// The relative smash product of a weak Yetter–Drinfeld module algebra with
/// its weak Hopf algebra, carrying the certified bicomodule algebra
/// structure and the comparison map j = (1_A # −): H → A #_{H_t} H.
#[derive(Debug, Clone)]
pub struct WeakSmashBicomodule {
    /// The smash product algebra.
    pub alg: AlgebraData,
    /// Right coaction a#h ↦ (a # h₁) ⊗ h₂.
    pub rho: LinearMap,
    /// Left coaction a#h ↦ a⁻¹h₁ ⊗ (a⁰ # h₂).
    pub lambda: LinearMap,
    /// Comparison map j(h) = 1_A # h.
    pub j: LinearMap,
    /// Presentation of the carrier as a quotient of A⊗H.
    pub quotient: Quotient,
    /// Certification of the construction.
    pub report: Report,
}

/// Build the smash product of a weak YD module algebra as a bicomodule
/// algebra, certifying well-definedness of both coactions, the bicomodule
/// algebra laws, that j is a bicolinear algebra map, that elements of H_s
/// act through the left coaction as j(y)·b = ε(b⁻¹y) b⁰, and that the left
/// unit image is source-reduced.
pub fn weak_yd_smash_bicomodule(h: &WeakHopfData, a: &WeakYdAlgebraData) -> Result<WeakSmashBicomodule> {
    let op = "weak_yd_smash_bicomodule";
    for pre in [
        verify_weak_module_algebra(h, &a.module_algebra()),
        verify_weak_comodule_algebra(
            h,
            &WeakComoduleAlgebraData { alg: a.alg.clone(), rho: None, lambda: Some(a.coaction.clone()) },
            ComoduleSide::Left,
        ),
        verify_weak_yd(h, &a.yd_module()),
    ] {
        if !pre.overall {
            let id = pre.first_failure().expect("failure present").id.clone();
            return Err(HopfError::Precondition { op: op.into(), id, report: Box::new(pre) });
        }
    }

    let dh = h.dim();
    let da = a.alg.dim;
    let f = h.field();
    let mut r = Runner::new(op);
    let (alg, quotient, _m_full) = build_relative_smash(h, &a.module_algebra(), &mut r)?;
    let db = alg.dim;
    let id_h = LinearMap::identity(dh, f);

    // ρ(a#h) = (a # h₁) ⊗ h₂, descended from (id⊗Δ).
    let rho_amb = compose(&kron(&quotient.q, &id_h)?, &kron(&LinearMap::identity(da, f), &h.comul_map())?)?;
    let rho_ok = quotient.descends(&rho_amb)?;
    r.bool_check("rho-well-defined", rho_ok, "right coaction kills the relative relations");
    let rho = compose(&rho_amb, &quotient.s)?;

    // λ(a#h) = a⁻¹h₁ ⊗ (a⁰ # h₂).
    let lam_full = matrix_of(dh * da * dh, da * dh, f, |c| {
        let hb = c % dh;
        let ai = c / dh;
        Elem::basis_tuple(&[da, dh], &[ai, hb], f)
            .map_multi(&a.coaction, 0, &[dh, da]) // (a⁻¹, a⁰, h)
            .coprod(&h.comul, 2) // (a⁻¹, a⁰, h1, h2)
            .move_slot(2, 1) // (a⁻¹, h1, a⁰, h2)
            .mul(&h.alg.mul, 0) // (a⁻¹h1, a⁰, h2)
    });
    let lam_amb = compose(&kron(&id_h, &quotient.q)?, &lam_full)?;
    let lam_ok = quotient.descends(&lam_amb)?;
    r.bool_check("lambda-well-defined", lam_ok, "left coaction kills the relative relations");
    let lambda = compose(&lam_amb, &quotient.s)?;

    // j(h) = 1_A # h.
    let j = compose(&quotient.q, &kron(&a.alg.unit_map(), &id_h)?)?;

    // The bicomodule algebra laws for the smash.
    let comod = WeakComoduleAlgebraData { alg: alg.clone(), rho: Some(rho.clone()), lambda: Some(lambda.clone()) };
    r.absorb(verify_weak_comodule_algebra(h, &comod, ComoduleSide::Bi));

    // j is a bicolinear algebra map.
    check_algebra_map(&mut r, "j-alg-map", &j, &h.alg, &alg);
    r.probe("j-rho", |p| {
        let lhs = compose(&rho, &j).expect("shapes");
        let rhs = compose(&kron(&j, &id_h).expect("kron"), &h.comul_map()).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });
    r.probe("j-lambda", |p| {
        let lhs = compose(&lambda, &j).expect("shapes");
        let rhs = compose(&kron(&id_h, &j).expect("kron"), &h.comul_map()).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });

    // For y in H_s: j(y)·b = ε(y b⁻¹) b⁰.
    let counital = counital_maps(h)?;
    let ys: Vec<Elem> = (0..counital.s_split.rank).map(|k| Elem::from_vec(&counital.s_split.i.col(k), f)).collect();
    let j_ys: Vec<Elem> = ys.iter().map(|y| Elem::from_vec(&j.apply(&elem_coords(y, f)).expect("shapes"), f)).collect();
    let mul_b = &alg.mul;
    let n_ys = ys.len();
    r.elem_eq("calanen", &[n_ys, db], |idx| {
        let b = Elem::basis(db, idx[1], f);
        let lhs = j_ys[idx[0]].tensor(&b).mul(mul_b, 0);
        let rhs = b
            .map_multi(&lambda, 0, &[dh, db]) // (b⁻¹, b⁰)
            .tensor(&ys[idx[0]]) // (b⁻¹, b⁰, y)
            .move_slot(2, 0) // (y, b⁻¹, b⁰)
            .mul(&h.alg.mul, 0) // (yb⁻¹, b⁰)
            .counit(&h.counit, 0);
        (lhs, rhs)
    });

    // The left unit image is source-reduced: λ(1_B) = (ε_s⊗id)λ(1_B).
    r.elem_eq("consec", &[], |_| {
        let lam1 = alg.unit_elem().map_multi(&lambda, 0, &[dh, db]);
        (lam1.clone(), lam1.map1(&counital.eps_s, 0))
    });

    let report = r.finish();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    Ok(WeakSmashBicomodule { alg, rho, lambda, j, quotient, report })
}

/// A Hopf bimodule over a weak Hopf algebra: an H-bimodule with bimodule
/// maps ρ: M → M⊗H and λ: M → H⊗M forming a counital coassociative
/// bicomodule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakHopfBimoduleData {
    /// Carrier dimension.
    pub dim: usize,
    /// Left action tensor, shape `[d_H, d_M, d_M]`.
    pub lact: Tensor,
    /// Right action tensor, shape `[d_M, d_H, d_M]`.
    pub ract: Tensor,
    /// Right coaction M → M⊗H.
    pub rho: LinearMap,
    /// Left coaction M → H⊗M.
    pub lambda: LinearMap,
}

/// Verify the Hopf bimodule laws.
pub fn verify_weak_hopf_bimodule(h: &WeakHopfData, m: &WeakHopfBimoduleData) -> Report {
    let mut r = Runner::new("verify_weak_hopf_bimodule");
    run_weak_bimodule_checks(h, m, &mut r);
    r.finish()
}

fn run_weak_bimodule_checks(h: &WeakHopfData, m: &WeakHopfBimoduleData, r: &mut Runner) {
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let mul = &h.alg.mul;
    let comul = &h.comul;
    let (lact, ract, rho, lam) = (&m.lact, &m.ract, &m.rho, &m.lambda);

    r.probe("bimodule", |p| {
        p.elem_eq(&[dh, dh, dm], |idx| {
            let e = Elem::basis_tuple(&[dh, dh, dm], idx, f);
            (e.mul(mul, 0).act(lact, 0), e.act(lact, 1).act(lact, 0))
        });
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            (h.unit_elem().tensor(&e).act(lact, 0), e.clone())
        });
        p.elem_eq(&[dm, dh, dh], |idx| {
            let e = Elem::basis_tuple(&[dm, dh, dh], idx, f);
            (e.mul(mul, 1).ract(ract, 0), e.ract(ract, 0).ract(ract, 0))
        });
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            (e.tensor(&h.unit_elem()).ract(ract, 0), e.clone())
        });
        p.elem_eq(&[dh, dm, dh], |idx| {
            let e = Elem::basis_tuple(&[dh, dm, dh], idx, f);
            (e.act(lact, 0).ract(ract, 0), e.ract(ract, 1).act(lact, 0))
        });
    });
    r.probe("rho-comodule", |p| {
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            let lhs = e.map_multi(rho, 0, &[dm, dh]).map_multi(rho, 0, &[dm, dh]);
            let rhs = e.map_multi(rho, 0, &[dm, dh]).coprod(comul, 1);
            (lhs, rhs)
        });
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            (e.map_multi(rho, 0, &[dm, dh]).counit(&h.counit, 1), e.clone())
        });
    });
    r.probe("lambda-comodule", |p| {
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            let lhs = e.map_multi(lam, 0, &[dh, dm]).map_multi(lam, 1, &[dh, dm]);
            let rhs = e.map_multi(lam, 0, &[dh, dm]).coprod(comul, 0);
            (lhs, rhs)
        });
        p.elem_eq(&[dm], |idx| {
            let e = Elem::basis(dm, idx[0], f);
            (e.map_multi(lam, 0, &[dh, dm]).counit(&h.counit, 0), e.clone())
        });
    });
    r.elem_eq("rho-bimodule-map", &[dh, dm, dh], |idx| {
        let e = Elem::basis_tuple(&[dh, dm, dh], idx, f);
        let lhs = e.act(lact, 0).ract(ract, 0).map_multi(rho, 0, &[dm, dh]);
        let rhs = e
            .coprod(comul, 0) // (h1, h2, m, h')
            .coprod(comul, 3) // (h1, h2, m, h'1, h'2)
            .map_multi(rho, 2, &[dm, dh]) // (h1, h2, m0, m1, h'1, h'2)
            .move_slot(2, 1) // (h1, m0, h2, m1, h'1, h'2)
            .act(lact, 0) // (h1·m0, h2, m1, h'1, h'2)
            .move_slot(3, 1) // (h1·m0, h'1, h2, m1, h'2)
            .ract(ract, 0) // (h1·m0·h'1, h2, m1, h'2)
            .mul(mul, 1) // (…, h2m1, h'2)
            .mul(mul, 1); // (…, h2m1h'2)
        (lhs, rhs)
    });
    r.elem_eq("lambda-bimodule-map", &[dh, dm, dh], |idx| {
        let e = Elem::basis_tuple(&[dh, dm, dh], idx, f);
        let lhs = e.act(lact, 0).ract(ract, 0).map_multi(lam, 0, &[dh, dm]);
        let rhs = e
            .coprod(comul, 0) // (h1, h2, m, h')
            .coprod(comul, 3) // (h1, h2, m, h'1, h'2)
            .map_multi(lam, 2, &[dh, dm]) // (h1, h2, m⁻¹, m⁰, h'1, h'2)
            .move_slot(2, 1) // (h1, m⁻¹, h2, m⁰, h'1, h'2)
            .mul(mul, 0) // (h1m⁻¹, h2, m⁰, h'1, h'2)
            .move_slot(3, 1) // (h1m⁻¹, h'1, h2, m⁰, h'2)
            .mul(mul, 0) // (h1m⁻¹h'1, h2, m⁰, h'2)
            .act(lact, 1) // (…, h2·m⁰, h'2)
            .ract(ract, 1); // (…, h2·m⁰·h'2)
        (lhs, rhs)
    });
    r.elem_eq("bicomodule", &[dm], |idx| {
        let e = Elem::basis(dm, idx[0], f);
        let lhs = e.map_multi(rho, 0, &[dm, dh]).map_multi(lam, 0, &[dh, dm]);
        let rhs = e.map_multi(lam, 0, &[dh, dm]).map_multi(rho, 1, &[dm, dh]);
        (lhs, rhs)
    });
}

/// The coinvariants of a Hopf bimodule, presented by splitting the
/// projector E(m) = m₀·S(m₁).
#[derive(Debug, Clone)]
pub struct WeakCoinvariants {
    /// The projector E as a matrix.
    pub e: LinearMap,
    /// Splitting E = i∘p with p∘i = id on the coinvariants.
    pub splitting: Splitting,
    /// Certification: the bimodule laws plus the projector properties.
    pub report: Report,
}

/// Compute the coinvariants of a Hopf bimodule. Certifies that E is
/// idempotent, that its image is exactly the kernel of
/// ρ − (id⊗ε_t)∘ρ, and the triangle law E((hh')·m) = E(h·E(h'·m)).
pub fn weak_coinvariants(h: &WeakHopfData, m: &WeakHopfBimoduleData) -> Result<WeakCoinvariants> {
    let op = "weak_coinvariants";
    let pre = verify_weak_hopf_bimodule(h, m);
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: op.into(), id, report: Box::new(pre) });
    }
    let dm = m.dim;
    let dh = h.dim();
    let f = h.field();
    let e = matrix_of(dm, dm, f, |mi| {
        Elem::basis(dm, mi, f)
            .map_multi(&m.rho, 0, &[dm, dh]) // (m0, m1)
            .map1(&h.s, 1) // (m0, S(m1))
            .ract(&m.ract, 0) // m0·S(m1)
    });

    let mut r = Runner::new(op);
    r.absorb(pre);
    r.probe("e-idempotent", |p| {
        p.map_eq(&compose(&e, &e).expect("square"), &e);
    });
    let rep_so_far = r.ok();
    if !rep_so_far {
        let report = r.finish();
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    let splitting = split_idempotent(&e)?;

    // Image of E = kernel of D, D = ρ − (id⊗ε_t)∘ρ.
    let et = h.eps_t_map();
    let d_map = m.rho.sub(&compose(&kron(&LinearMap::identity(dm, f), &et)?, &m.rho)?)?;
    let ker = d_map.kernel_basis();
    let d_on_image = compose(&d_map, &splitting.i)?;
    r.probe("coinvariants-subspace", |p| {
        p.bool_check(d_on_image.is_zero(), "ρ restricted to im(E) is reduced by ε_t");
        p.bool_check(splitting.rank == ker.cols(), "rank of E equals the corank of ρ − (id⊗ε_t)∘ρ");
    });

    r.elem_eq("tria-assoc", &[dh, dh, dm], |idx| {
        let el = Elem::basis_tuple(&[dh, dh, dm], idx, f);
        let lhs = el.mul(&h.alg.mul, 0).act(&m.lact, 0).map1(&e, 0);
        let rhs = el.act(&m.lact, 1).map1(&e, 1).act(&m.lact, 0).map1(&e, 0);
        (lhs, rhs)
    });

    let report = r.finish();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    Ok(WeakCoinvariants { e, splitting, report })
}

/// The four-corner decomposition of a Hopf bimodule: the coinvariants V as
/// a weak Yetter–Drinfeld module, the induced bimodule V ⊗_{H_t} H, and the
/// comparison isomorphism ν(v⊗h) = i(v)·h.
#[derive(Debug, Clone)]
pub struct WeakFourCorners {
    /// The coinvariants as a weak YD module.
    pub v: WeakYdModuleData,
    /// The coinvariants data (projector and splitting).
    pub coinv: WeakCoinvariants,
    /// Presentation of V ⊗_{H_t} H as a quotient of V⊗H.
    pub quotient: Quotient,
    /// The induced Hopf bimodule structure on V ⊗_{H_t} H.
    pub m_q: WeakHopfBimoduleData,
    /// Comparison isomorphism V ⊗_{H_t} H → M.
    pub nu: LinearMap,
    /// Its inverse.
    pub nu_inv: LinearMap,
    /// Certification of the decomposition.
    pub report: Report,
}

/// Build the Hopf bimodule V ⊗_{H_t} H induced by a weak YD module V,
/// pushing well-definedness certifications onto the runner. The right
/// H_t-action on V used in the relative tensor product is v·z = S(z)·v.
fn build_v_tensor_h(h: &WeakHopfData, v: &WeakYdModuleData, r: &mut Runner) -> Result<(WeakHopfBimoduleData, Quotient)> {
    let dh = h.dim();
    let dv = v.dim;
    let f = h.field();
    let ambient = dv * dh;
    let counital = counital_maps(h)?;
    let mul_h = &h.alg.mul;

    let mut relations = Vec::new();
    for k in 0..counital.t_split.rank {
        let z = Elem::from_vec(&counital.t_split.i.col(k), f);
        let sz = z.map1(&h.s, 0);
        for vi in 0..dv {
            let vz = sz.tensor(&Elem::basis(dv, vi, f)).act(&v.action, 0); // v·z = S(z)·v
            for hb in 0..dh {
                let lhs = vz.tensor(&Elem::basis(dh, hb, f));
                let zh = z.tensor(&Elem::basis(dh, hb, f)).mul(mul_h, 0);
                let rhs = Elem::basis(dv, vi, f).tensor(&zh);
                relations.push(elem_coords(&lhs.sub(&rhs), f));
            }
        }
    }
    let quotient = Quotient::new(ambient, relations, f)?;
    let dq = quotient.dim;
    let rel_t = transpose(&quotient.relations);
    let id_h = LinearMap::identity(dh, f);

    // a·(v⊗h) = a₁·v ⊗ a₂h.
    let lact_full = matrix_of(ambient, dh * ambient, f, |c| {
        let hb = c % dh;
        let vi = (c / dh) % dv;
        let ab = c / ambient;
        Elem::basis_tuple(&[dh, dv, dh], &[ab, vi, hb], f)
            .coprod(&h.comul, 0) // (a1, a2, v, h)
            .move_slot(2, 1) // (a1, v, a2, h)
            .act(&v.action, 0) // (a1·v, a2, h)
            .mul(mul_h, 1) // (a1·v, a2h)
    });
    let lact_amb = compose(&quotient.q, &lact_full)?;
    let lact_ok = compose(&lact_amb, &kron(&id_h, &rel_t)?)?.is_zero();
    r.bool_check("lact-well-defined", lact_ok, "left action kills the relative relations");
    let lact = compose(&lact_amb, &kron(&id_h, &quotient.s)?)?.to_tensor(&[dh, dq], &[dq])?;

    // (v⊗h)·b = v ⊗ hb.
    let ract_full = matrix_of(ambient, ambient * dh, f, |c| {
        let bb = c % dh;
        let hb = (c / dh) % dh;
        let vi = c / (dh * dh);
        Elem::basis_tuple(&[dv, dh, dh], &[vi, hb, bb], f).mul(mul_h, 1)
    });
    let ract_amb = compose(&quotient.q, &ract_full)?;
    let ract_ok = compose(&ract_amb, &kron(&rel_t, &id_h)?)?.is_zero();
    r.bool_check("ract-well-defined", ract_ok, "right action kills the relative relations");
    let ract = compose(&ract_amb, &kron(&quotient.s, &id_h)?)?.to_tensor(&[dq, dh], &[dq])?;

    // ρ(v⊗h) = (v⊗h₁) ⊗ h₂.
    let rho_full = matrix_of(ambient * dh, ambient, f, |c| {
        let hb = c % dh;
        let vi = c / dh;
        Elem::basis_tuple(&[dv, dh], &[vi, hb], f).coprod(&h.comul, 1)
    });
    let rho_amb = compose(&kron(&quotient.q, &id_h)?, &rho_full)?;
    let rho_ok = quotient.descends(&rho_amb)?;
    r.bool_check("rho-well-defined", rho_ok, "right coaction kills the relative relations");
    let rho = compose(&rho_amb, &quotient.s)?;

    // λ(v⊗h) = v⁻¹h₁ ⊗ (v⁰⊗h₂).
    let lam_full = matrix_of(dh * ambient, ambient, f, |c| {
        let hb = c % dh;
        let vi = c / dh;
        Elem::basis_tuple(&[dv, dh], &[vi, hb], f)
            .map_multi(&v.coaction, 0, &[dh, dv]) // (v⁻¹, v⁰, h)
            .coprod(&h.comul, 2) // (v⁻¹, v⁰, h1, h2)
            .move_slot(1, 2) // (v⁻¹, h1, v⁰, h2)
            .mul(mul_h, 0) // (v⁻¹h1, v⁰, h2)
    });
    let lam_amb = compose(&kron(&id_h, &quotient.q)?, &lam_full)?;
    let lam_ok = quotient.descends(&lam_amb)?;
    r.bool_check("lambda-well-defined", lam_ok, "left coaction kills the relative relations");
    let lambda = compose(&lam_amb, &quotient.s)?;

    Ok((WeakHopfBimoduleData { dim: dq, lact, ract, rho, lambda }, quotient))
}

/// Induce a Hopf bimodule V ⊗_{H_t} H from a weak Yetter–Drinfeld module
/// and certify the bimodule laws on the quotient.
pub fn weak_four_corners_construct(h: &WeakHopfData, v: &WeakYdModuleData) -> Result<(WeakHopfBimoduleData, Quotient, Report)> {
    let op = "weak_four_corners_construct";
    let pre = verify_weak_yd(h, v);
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: op.into(), id, report: Box::new(pre) });
    }
    let mut r = Runner::new(op);
    let (m_q, quotient) = build_v_tensor_h(h, v, &mut r)?;
    r.absorb(verify_weak_hopf_bimodule(h, &m_q));
    let report = r.finish();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    Ok((m_q, quotient, report))
}

/// Decompose a Hopf bimodule into its four corners: compute the
/// coinvariants V = im(E), equip V with its weak Yetter–Drinfeld structure,
/// rebuild V ⊗_{H_t} H, and certify that ν(v⊗h) = i(v)·h is an isomorphism
/// of Hopf bimodules.
pub fn weak_four_corners_decompose(h: &WeakHopfData, m: &WeakHopfBimoduleData) -> Result<WeakFourCorners> {
    let op = "weak_four_corners_decompose";
    let coinv = weak_coinvariants(h, m)?;
    let dh = h.dim();
    let dm = m.dim;
    let f = h.field();
    let (i, p) = (&coinv.splitting.i, &coinv.splitting.p);
    let rank = coinv.splitting.rank;

    let mut r = Runner::new(op);

    // V = im(E) with action h▷v = p(h·i(v)) and coaction (id⊗p)∘λ∘i.
    let act_v = Tensor::from_fn(&[dh, rank, rank], f, |idx| {
        let out = Elem::basis(dh, idx[0], f)
            .tensor(&Elem::from_vec(&i.col(idx[1]), f))
            .act(&m.lact, 0)
            .map1(p, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let lam_on_image = compose(&m.lambda, i)?;
    let id_e = kron(&LinearMap::identity(dh, f), &coinv.e)?;
    r.probe("coaction-restricts", |pr| {
        let lhs = compose(&id_e, &lam_on_image).expect("shapes");
        pr.map_eq(&lhs, &lam_on_image);
    });
    let lam_v = compose(&kron(&LinearMap::identity(dh, f), p)?, &lam_on_image)?;
    let v = WeakYdModuleData { dim: rank, action: act_v, coaction: lam_v };
    r.absorb(verify_weak_yd(h, &v));

    // The induced bimodule on V ⊗_{H_t} H and the comparison ν.
    let (m_q, quotient) = build_v_tensor_h(h, &v, &mut r)?;
    r.absorb(verify_weak_hopf_bimodule(h, &m_q));

    let ambient = rank * dh;
    let nu_full = matrix_of(dm, ambient, f, |c| {
        let hb = c % dh;
        let vi = c / dh;
        Elem::from_vec(&i.col(vi), f).tensor(&Elem::basis(dh, hb, f)).ract(&m.ract, 0)
    });
    let nu_ok = quotient.descends(&nu_full)?;
    r.bool_check("nu-well-defined", nu_ok, "ν kills the relative relations");
    let nu = compose(&nu_full, &quotient.s)?;
    let nu_inv = match invert_map(&nu) {
        Ok(inv) => {
            r.bool_check("nu-invertible", true, "ν is a linear isomorphism");
            inv
        }
        Err(_) => {
            r.bool_check("nu-invertible", false, "ν is singular");
            let report = r.finish();
            return Err(HopfError::Certification {
                op: op.into(),
                id: "nu-invertible".into(),
                report: Box::new(report),
            });
        }
    };

    let dq = m_q.dim;
    r.elem_eq("nu-lact", &[dh, dq], |idx| {
        let e = Elem::basis_tuple(&[dh, dq], idx, f);
        (e.map1(&nu, 1).act(&m.lact, 0), e.act(&m_q.lact, 0).map1(&nu, 0))
    });
    r.elem_eq("nu-ract", &[dq, dh], |idx| {
        let e = Elem::basis_tuple(&[dq, dh], idx, f);
        (e.map1(&nu, 0).ract(&m.ract, 0), e.ract(&m_q.ract, 0).map1(&nu, 0))
    });
    r.elem_eq("nu-rho", &[dq], |idx| {
        let e = Elem::basis(dq, idx[0], f);
        (e.map1(&nu, 0).map_multi(&m.rho, 0, &[dm, dh]), e.map_multi(&m_q.rho, 0, &[dq, dh]).map1(&nu, 0))
    });
    r.elem_eq("nu-lambda", &[dq], |idx| {
        let e = Elem::basis(dq, idx[0], f);
        (e.map1(&nu, 0).map_multi(&m.lambda, 0, &[dh, dm]), e.map_multi(&m_q.lambda, 0, &[dh, dq]).map1(&nu, 1))
    });

    let report = r.finish();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    Ok(WeakFourCorners { v, coinv, quotient, m_q, nu, nu_inv, report })
}

/// A bicomodule algebra over a weak Hopf algebra with a bicolinear algebra
/// map from H, the input of the structure theorem.
#[derive(Debug, Clone)]
pub struct WeakBicomoduleWithV {
    /// Underlying algebra B.
    pub alg: AlgebraData,
    /// Right coaction B → B⊗H.
    pub rho: LinearMap,
    /// Left coaction B → H⊗B.
    pub lambda: LinearMap,
    /// A bicolinear algebra map v: H → B.
    pub v: LinearMap,
}

/// The outcome of the smash-product structure theorem over a weak Hopf
/// algebra: coinvariants A, the rebuilt relative smash A #_{H_t} H, and the
/// certified isomorphism φ(a#h) = i(a)·v(h).
#[derive(Debug, Clone)]
pub struct WeakStructureTheorem {
    /// The coinvariants as a weak YD module algebra.
    pub a: WeakYdAlgebraData,
    /// The rebuilt smash product with its comparison map.
    pub smash: WeakSmashBicomodule,
    /// The isomorphism A #_{H_t} H → B.
    pub phi: LinearMap,
    /// Its inverse.
    pub phi_inv: LinearMap,
    /// The coinvariants projector on B.
    pub e: LinearMap,
    /// Splitting of the projector.
    pub splitting: Splitting,
    /// Full certification trail.
    pub report: Report,
}

/// Certify the structure theorem on a concrete bicomodule algebra with
/// comparison map: compute the coinvariants A = B^co along E(b) = b₀·S(b₁)
/// taken in the bimodule structure induced by v, transport multiplication,
/// action, and coaction onto A, certify that A is a weak Yetter–Drinfeld
/// module algebra, rebuild the relative smash product A #_{H_t} H, and
/// certify that φ(a#h) = i(a)·v(h) is an isomorphism of bicomodule algebras
/// compatible with the comparison maps.
pub fn structure_theorem_weak(h: &WeakHopfData, input: &WeakBicomoduleWithV) -> Result<WeakStructureTheorem> {
    let op = "structure_theorem_weak";
    let dh = h.dim();
    let db = input.alg.dim;
    let f = h.field();
    let id_h = LinearMap::identity(dh, f);

    // Preconditions: B is a bicomodule algebra and v is a bicolinear
    // algebra map.
    let mut pre_runner = Runner::new("structure_theorem_weak.pre");
    let comod = WeakComoduleAlgebraData {
        alg: input.alg.clone(),
        rho: Some(input.rho.clone()),
        lambda: Some(input.lambda.clone()),
    };
    pre_runner.absorb(verify_weak_comodule_algebra(h, &comod, ComoduleSide::Bi));
    check_algebra_map(&mut pre_runner, "v-alg-map", &input.v, &h.alg, &input.alg);
    pre_runner.probe("v-rho", |p| {
        let lhs = compose(&input.rho, &input.v).expect("shapes");
        let rhs = compose(&kron(&input.v, &id_h).expect("kron"), &h.comul_map()).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });
    pre_runner.probe("v-lambda", |p| {
        let lhs = compose(&input.lambda, &input.v).expect("shapes");
        let rhs = compose(&kron(&id_h, &input.v).expect("kron"), &h.comul_map()).expect("shapes");
        p.map_eq(&lhs, &rhs);
    });
    let pre = pre_runner.finish();
    if !pre.overall {
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: op.into(), id, report: Box::new(pre) });
    }

    // B as an H-bimodule through v.
    let mul_b = &input.alg.mul;
    let lact = Tensor::from_fn(&[dh, db, db], f, |idx| {
        let out = Elem::from_vec(&input.v.col(idx[0]), f)
            .tensor(&Elem::basis(db, idx[1], f))
            .mul(mul_b, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let ract = Tensor::from_fn(&[db, dh, db], f, |idx| {
        let out = Elem::basis(db, idx[0], f)
            .tensor(&Elem::from_vec(&input.v.col(idx[1]), f))
            .mul(mul_b, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let m = WeakHopfBimoduleData {
        dim: db,
        lact,
        ract,
        rho: input.rho.clone(),
        lambda: input.lambda.clone(),
    };

    let coinv = weak_coinvariants(h, &m)?;
    let e = coinv.e.clone();
    let splitting = coinv.splitting.clone();
    let (i, p) = (&splitting.i, &splitting.p);
    let rank = splitting.rank;

    let mut r = Runner::new(op);
    let one_b: Vec<Scalar> = (0..db).map(|k| input.alg.unit.get(&[k]).clone()).collect();
    let e_one = e.apply(&one_b)?;
    r.bool_check("unit-coinvariant", e_one == one_b, "E(1_B) = 1_B");

    // The coinvariants are closed under multiplication.
    let mu_map = input.alg.mul_map();
    let e_complement = LinearMap::identity(db, f).sub(&e)?;
    let closure = compose(&e_complement, &compose(&mu_map, &kron(i, i)?)?)?;
    r.bool_check("coinvariants-closed", closure.is_zero(), "(id−E)∘μ_B∘(i⊗i) = 0");

    // A with transported multiplication, unit, action h▷a = p(E(v(h)i(a))),
    // and coaction (id⊗p)∘λ_B∘i.
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
        let out = Elem::from_vec(&input.v.col(idx[0]), f)
            .tensor(&Elem::from_vec(&i.col(idx[1]), f))
            .mul(mul_b, 0)
            .map1(&e, 0)
            .map1(p, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let lam_on_image = compose(&input.lambda, i)?;
    let id_e = kron(&id_h, &e)?;
    r.probe("coaction-restricts", |pr| {
        let lhs = compose(&id_e, &lam_on_image).expect("shapes");
        pr.map_eq(&lhs, &lam_on_image);
    });
    let coact_a = compose(&kron(&id_h, p)?, &lam_on_image)?;
    let a = WeakYdAlgebraData { alg: alg_a, action: act_a, coaction: coact_a };

    // Certify that A is a weak YD module algebra over H.
    r.absorb(verify_weak_module_algebra(h, &a.module_algebra()));
    r.absorb(verify_weak_comodule_algebra(
        h,
        &WeakComoduleAlgebraData { alg: a.alg.clone(), rho: None, lambda: Some(a.coaction.clone()) },
        ComoduleSide::Left,
    ));
    r.absorb(verify_weak_yd(h, &a.yd_module()));
    if !r.ok() {
        let report = r.finish();
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }

    // Rebuild the relative smash product as a bicomodule algebra.
    let smash = weak_yd_smash_bicomodule(h, &a)?;
    r.absorb(smash.report.clone());

    // φ(a#h) = i(a)·v(h).
    let phi_full = matrix_of(db, rank * dh, f, |c| {
        let hb = c % dh;
        let ai = c / dh;
        Elem::from_vec(&i.col(ai), f)
            .tensor(&Elem::from_vec(&input.v.col(hb), f))
            .mul(mul_b, 0)
    });
    let phi_ok = smash.quotient.descends(&phi_full)?;
    r.bool_check("phi-well-defined", phi_ok, "φ kills the relative relations");
    let phi = compose(&phi_full, &smash.quotient.s)?;
    let phi_inv = match invert_map(&phi) {
        Ok(inv) => {
            r.bool_check("phi-invertible", true, "φ is a linear isomorphism");
            inv
        }
        Err(_) => {
            r.bool_check("phi-invertible", false, "φ is singular");
            let report = r.finish();
            return Err(HopfError::Certification {
                op: op.into(),
                id: "phi-invertible".into(),
                report: Box::new(report),
            });
        }
    };

    check_algebra_map(&mut r, "phi-alg-map", &phi, &smash.alg, &input.alg);
    r.probe("phi-rho", |pr| {
        let lhs = compose(&input.rho, &phi).expect("shapes");
        let rhs = compose(&kron(&phi, &id_h).expect("kron"), &smash.rho).expect("shapes");
        pr.map_eq(&lhs, &rhs);
    });
    r.probe("phi-lambda", |pr| {
        let lhs = compose(&input.lambda, &phi).expect("shapes");
        let rhs = compose(&kron(&id_h, &phi).expect("kron"), &smash.lambda).expect("shapes");
        pr.map_eq(&lhs, &rhs);
    });
    r.probe("phi-v-compat", |pr| {
        let lhs = compose(&phi, &smash.j).expect("shapes");
        pr.map_eq(&lhs, &input.v);
    });

    let mut report = r.finish();
    let mut all = pre.checks;
    all.extend(coinv.report.checks.clone());
    all.extend(report.checks);
    report.checks = all;
    report.overall = report.checks.iter().all(|c| c.passed);
    report.op = op.into();
    if !report.overall {
        let id = report.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Certification { op: op.into(), id, report: Box::new(report) });
    }
    Ok(WeakStructureTheorem { a, smash, phi, phi_inv, e, splitting, report })
}
