//! Plain associative algebras given by structure constants, plus shared
//! verification helpers and quotient-space utilities used by the smash
//! product constructions.

use crate::elem::Elem;
use crate::error::{HopfError, Result};
use crate::linmap::{compose, kron, LinearMap, Rref};
use crate::report::Runner;
use crate::scalar::Field;
use crate::tensor::Tensor;

/// A finite-dimensional algebra: multiplication tensor `mul[i][j][k]`
/// (coefficient of `e_k` in `e_i·e_j`) and unit vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    /// Carrier dimension.
    pub dim: usize,
    /// Base field.
    pub field: Field,
    /// Basis labels, used in emitted files.
    pub labels: Vec<String>,
    /// Multiplication tensor, shape `[dim, dim, dim]`.
    pub mul: Tensor,
    /// Unit vector, shape `[dim]`.
    pub unit: Tensor,
}

impl AlgebraData {
    /// Validate shapes and build.
    pub fn new(labels: Vec<String>, mul: Tensor, unit: Tensor) -> Result<AlgebraData> {
        let dim = unit.shape().first().copied().unwrap_or(0);
        if mul.shape() != [dim, dim, dim] || unit.shape() != [dim] {
            return Err(HopfError::Dim {
                context: "AlgebraData".into(),
                detail: format!("mul {:?} / unit {:?}", mul.shape(), unit.shape()),
            });
        }
        if labels.len() != dim {
            return Err(HopfError::Dim {
                context: "AlgebraData".into(),
                detail: format!("{} labels for dimension {dim}", labels.len()),
            });
        }
        Ok(AlgebraData { dim, field: mul.field(), labels, mul, unit })
    }

    /// Multiplication as a dense map A⊗A → A.
    pub fn mul_map(&self) -> LinearMap {
        LinearMap::from_tensor(&self.mul, 2)
    }

    /// Unit as a dense map k → A.
    pub fn unit_map(&self) -> LinearMap {
        LinearMap::from_tensor(&self.unit, 0)
    }

    /// The unit as a one-slot element.
    pub fn unit_elem(&self) -> Elem {
        Elem::from_tensor(&self.unit)
    }

    /// Basis element `e_i` as a one-slot element.
    pub fn basis_elem(&self, i: usize) -> Elem {
        Elem::basis(self.dim, i, self.field)
    }

    /// Record associativity and both unit laws under one identity id.
    pub fn check_assoc_unital(&self, runner: &mut Runner, id: &str) {
        let d = self.dim;
        runner.probe(id, |p| {
            p.elem_eq(&[d, d, d], |idx| {
                let e = Elem::basis_tuple(&[d, d, d], idx, self.field);
                (e.mul(&self.mul, 0).mul(&self.mul, 0), e.mul(&self.mul, 1).mul(&self.mul, 0))
            });
            p.elem_eq(&[d], |idx| {
                let e = self.basis_elem(idx[0]);
                (self.unit_elem().tensor(&e).mul(&self.mul, 0), e.clone())
            });
            p.elem_eq(&[d], |idx| {
                let e = self.basis_elem(idx[0]);
                (e.tensor(&self.unit_elem()).mul(&self.mul, 0), e.clone())
            });
        });
    }

    /// Default labels `e0, e1, …`.
    pub fn default_labels(dim: usize) -> Vec<String> {
        (0..dim).map(|i| format!("e{i}")).collect()
    }
}

/// Record that `f` is a unital algebra map from `a` to `b` under one id.
pub fn check_algebra_map(runner: &mut Runner, id: &str, f: &LinearMap, a: &AlgebraData, b: &AlgebraData) {
    runner.probe(id, |p| {
        let lhs = compose(f, &a.mul_map()).expect("algebra map shapes");
        let rhs = compose(&b.mul_map(), &kron(f, f).expect("kron")).expect("algebra map shapes");
        p.map_eq(&lhs, &rhs);
        let fu = compose(f, &a.unit_map()).expect("unit shapes");
        p.map_eq(&fu, &b.unit_map());
    });
}

/// A finite presentation of a quotient of a based space by the row span of
/// a set of relations, with a certified section.
///
/// `q` maps the ambient space onto coordinates over the non-pivot columns of
/// the reduced relation matrix; `s` is the section picking the standard basis
/// vector at each non-pivot coordinate. By construction `q ∘ s = id`.
#[derive(Debug, Clone)]
pub struct Quotient {
    /// Dimension of the quotient.
    pub dim: usize,
    /// Ambient dimension.
    pub ambient: usize,
    /// Projection: `dim × ambient`, kills exactly the relation span.
    pub q: LinearMap,
    /// Section: `ambient × dim`, `q ∘ s = id`.
    pub s: LinearMap,
    /// The relation rows, kept for well-definedness certifications.
    pub relations: LinearMap,
}

impl Quotient {
    /// Build the quotient of a space of dimension `ambient` by the span of
    /// the given relation vectors (each of length `ambient`).
    pub fn new(ambient: usize, relations: Vec<Vec<crate::scalar::Scalar>>, field: Field) -> Result<Quotient> {
        let nrel = relations.len();
        let mut rel = LinearMap::zeros(nrel, ambient, field);
        for (r, row) in relations.iter().enumerate() {
            if row.len() != ambient {
                return Err(HopfError::Dim {
                    context: "Quotient".into(),
                    detail: format!("relation {r} has length {} but ambient is {ambient}", row.len()),
                });
            }
            for (c, v) in row.iter().enumerate() {
                rel.set(r, c, v.clone());
            }
        }
        let Rref { matrix, pivots } = rel.rref();
        let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        let dim = free.len();

        // q(e_j): if j is free, the indicator at j's position in `free`;
        // if j is the pivot of reduced row l, then e_j ≡ e_j − row_l in the
        // quotient, which is supported on free columns with the negated row
        // values.
        let mut q = LinearMap::zeros(dim, ambient, field);
        for (pos, &j) in free.iter().enumerate() {
            q.set(pos, j, field.one());
        }
        for (l, &j) in pivots.iter().enumerate() {
            for (pos, &fc) in free.iter().enumerate() {
                let v = matrix.get(l, fc).neg();
                q.set(pos, j, v);
            }
        }
        let mut s = LinearMap::zeros(ambient, dim, field);
        for (pos, &j) in free.iter().enumerate() {
            s.set(j, pos, field.one());
        }
        let qs = compose(&q, &s)?;
        if qs != LinearMap::identity(dim, field) {
            return Err(HopfError::Invalid("Quotient: q∘s is not the identity".into()));
        }
        // Certify that q kills every original relation row.
        let rel_t = transpose(&rel);
        let killed = compose(&q, &rel_t)?;
        if !killed.is_zero() {
            return Err(HopfError::Invalid("Quotient: q does not kill the relation span".into()));
        }
        Ok(Quotient { dim, ambient, q, s, relations: rel })
    }

    /// Whether a map out of the ambient space descends to the quotient,
    /// i.e. kills every relation row.
    pub fn descends(&self, f: &LinearMap) -> Result<bool> {
        let rel_t = transpose(&self.relations);
        Ok(compose(f, &rel_t)?.is_zero())
    }
}

/// Matrix transpose.
pub fn transpose(m: &LinearMap) -> LinearMap {
    LinearMap::from_fn(m.cols(), m.rows(), m.field(), |r, c| m.get(c, r).clone())
}
