//! Exact linear maps between based vector spaces.
//!
//! A `LinearMap` is a rows×cols matrix over the base field, acting on column
//! vectors: rows index the codomain basis, columns the domain basis.
//! Composite spaces are ordered row-major, matching [`crate::tensor::Tensor`]:
//! the basis vector `e_i ⊗ e_j` of V⊗W has index `i·dim(W) + j`.

use crate::error::{HopfError, Result};
use crate::scalar::{require_same_field, Field, Scalar};
use crate::tensor::Tensor;

/// An exact matrix: rows index the codomain, columns the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    field: Field,
}

impl LinearMap {
    /// The zero map.
    pub fn zeros(rows: usize, cols: usize, field: Field) -> LinearMap {
        LinearMap { rows, cols, data: vec![field.zero(); rows * cols], field }
    }

    /// The identity on an n-dimensional space.
    pub fn identity(n: usize, field: Field) -> LinearMap {
        let mut m = LinearMap::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build a map entrywise.
    pub fn from_fn(rows: usize, cols: usize, field: Field, mut f: impl FnMut(usize, usize) -> Scalar) -> LinearMap {
        let mut m = LinearMap::zeros(rows, cols, field);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                debug_assert_eq!(v.field(), field);
                m.set(r, c, v);
            }
        }
        m
    }

    /// Assemble a map from its columns (images of the domain basis).
    pub fn from_cols(rows: usize, cols: Vec<Vec<Scalar>>, field: Field) -> Result<LinearMap> {
        let ncols = cols.len();
        let mut m = LinearMap::zeros(rows, ncols, field);
        for (c, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(HopfError::Dim {
                    context: "from_cols".into(),
                    detail: format!("column {c} has length {} but expected {rows}", col.len()),
                });
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    /// Interpret a structure tensor as a matrix. The first `n_in` axes are
    /// the domain (flattened row-major), the remaining axes the codomain.
    pub fn from_tensor(t: &Tensor, n_in: usize) -> LinearMap {
        let cols: usize = t.shape()[..n_in].iter().product();
        let rows: usize = t.shape()[n_in..].iter().product();
        let mut m = LinearMap::zeros(rows, cols, t.field());
        for (idx, v) in t.iter_nonzero() {
            let mut c = 0;
            for (i, d) in idx[..n_in].iter().zip(&t.shape()[..n_in]) {
                c = c * d + i;
            }
            let mut r = 0;
            for (i, d) in idx[n_in..].iter().zip(&t.shape()[n_in..]) {
                r = r * d + i;
            }
            m.set(r, c, v.clone());
        }
        m
    }

    /// Convert back to an inputs-first structure tensor with the given axis
    /// splits; `in_dims` must multiply to `cols` and `out_dims` to `rows`.
    pub fn to_tensor(&self, in_dims: &[usize], out_dims: &[usize]) -> Result<Tensor> {
        let in_total: usize = in_dims.iter().product();
        let out_total: usize = out_dims.iter().product();
        if in_total != self.cols || out_total != self.rows {
            return Err(HopfError::Dim {
                context: "to_tensor".into(),
                detail: format!(
                    "axis splits {in_dims:?}/{out_dims:?} do not match a {}x{} matrix",
                    self.rows, self.cols
                ),
            });
        }
        let mut shape = in_dims.to_vec();
        shape.extend_from_slice(out_dims);
        let mut t = Tensor::zeros(&shape, self.field);
        for c in 0..self.cols {
            for r in 0..self.rows {
                let v = self.get(r, c);
                if v.is_zero() {
                    continue;
                }
                // Row-major flat offset of (c, r) within shape in_dims++out_dims.
                t.set_flat(c * out_total + r, v.clone());
            }
        }
        Ok(t)
    }

    /// Codomain dimension.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Domain dimension.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Base field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// Entry at (row, col).
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    /// Set the entry at (row, col).
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(HopfError::Dim {
                context: "apply".into(),
                detail: format!("vector length {} vs {} columns", v.len(), self.cols),
            });
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let mut acc = self.field.zero();
            for (c, vc) in v.iter().enumerate() {
                let e = self.get(r, c);
                if !e.is_zero() && !vc.is_zero() {
                    acc = acc.add(&e.mul(vc));
                }
            }
            *slot = acc;
        }
        Ok(out)
    }

    /// The image of the `c`-th domain basis vector.
    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Entrywise sum.
    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        require_same_field(self.field, other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(HopfError::Dim {
                context: "linmap add".into(),
                detail: format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(LinearMap { rows: self.rows, cols: self.cols, data, field: self.field })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    /// Multiply every entry by a scalar.
    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        LinearMap { rows: self.rows, cols: self.cols, data, field: self.field }
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// First (row, col) where two maps differ, if any.
    pub fn first_difference(&self, other: &LinearMap) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Deterministic pivot policy: first row at or below `row` with a
            // nonzero entry in this column.
            let pivot_row = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(pr, c).clone();
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    /// Rank over the base field.
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of the kernel, as columns of a `cols × nullity` map.
    pub fn kernel_basis(&self) -> LinearMap {
        let rref = self.rref();
        let pivots = &rref.pivots;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut cols = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (prow, &pc) in pivots.iter().enumerate() {
                v[pc] = rref.matrix.get(prow, fc).neg();
            }
            cols.push(v);
        }
        LinearMap::from_cols(self.cols, cols, self.field).expect("kernel columns have domain length")
    }
}

/// Matrix composition `f ∘ g` (apply `g` first).
pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    require_same_field(f.field, g.field)?;
    if f.cols != g.rows {
        return Err(HopfError::Dim {
            context: "compose".into(),
            detail: format!("{}x{} cannot follow {}x{}", f.rows, f.cols, g.rows, g.cols),
        });
    }
    let mut out = LinearMap::zeros(f.rows, g.cols, f.field);
    for r in 0..f.rows {
        for k in 0..f.cols {
            let a = f.get(r, k);
            if a.is_zero() {
                continue;
            }
            for c in 0..g.cols {
                let b = g.get(k, c);
                if b.is_zero() {
                    continue;
                }
                let v = out.get(r, c).add(&a.mul(b));
                out.set(r, c, v);
            }
        }
    }
    Ok(out)
}

/// Compose a chain of maps right-to-left: `chain([f, g, h]) = f ∘ g ∘ h`.
pub fn compose_chain(maps: &[&LinearMap]) -> Result<LinearMap> {
    let (last, rest) = maps.split_last().expect("compose_chain needs at least one map");
    let mut acc = (*last).clone();
    for f in rest.iter().rev() {
        acc = compose(f, &acc)?;
    }
    Ok(acc)
}

/// Kronecker product: `kron(f, g)` acts on V⊗W by `f` on the first factor
/// and `g` on the second, with the row-major basis ordering
/// `e_i ⊗ e_j ↦ i·dim(W) + j`.
pub fn kron(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    require_same_field(f.field, g.field)?;
    let mut out = LinearMap::zeros(f.rows * g.rows, f.cols * g.cols, f.field);
    for r1 in 0..f.rows {
        for c1 in 0..f.cols {
            let a = f.get(r1, c1);
            if a.is_zero() {
                continue;
            }
            for r2 in 0..g.rows {
                for c2 in 0..g.cols {
                    let b = g.get(r2, c2);
                    if b.is_zero() {
                        continue;
                    }
                    out.set(r1 * g.rows + r2, c1 * g.cols + c2, a.mul(b));
                }
            }
        }
    }
    Ok(out)
}

/// Kronecker product of several factors, left to right.
pub fn kron_chain(maps: &[&LinearMap]) -> Result<LinearMap> {
    let (first, rest) = maps.split_first().expect("kron_chain needs at least one map");
    let mut acc = (*first).clone();
    for g in rest {
        acc = kron(&acc, g)?;
    }
    Ok(acc)
}

/// The flip V⊗W → W⊗V on the row-major product basis.
pub fn flip_map(dim_v: usize, dim_w: usize, field: Field) -> LinearMap {
    let mut m = LinearMap::zeros(dim_v * dim_w, dim_v * dim_w, field);
    for i in 0..dim_v {
        for j in 0..dim_w {
            m.set(j * dim_v + i, i * dim_w + j, field.one());
        }
    }
    m
}

/// Exact inverse via Gauss–Jordan elimination; errors if singular.
pub fn invert_map(f: &LinearMap) -> Result<LinearMap> {
    if f.rows != f.cols {
        return Err(HopfError::Singular);
    }
    let n = f.rows;
    // Augment [f | I] and row-reduce.
    let mut aug = LinearMap::zeros(n, 2 * n, f.field);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, f.get(r, c).clone());
        }
        aug.set(r, n + r, f.field.one());
    }
    let rref = aug.rref();
    // f is invertible iff the left block reduced to the identity, i.e. the
    // pivots are exactly the first n columns.
    if rref.pivots.len() != n || rref.pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(HopfError::Singular);
    }
    let mut inv = LinearMap::zeros(n, n, f.field);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, rref.matrix.get(r, n + c).clone());
        }
    }
    Ok(inv)
}

/// Result of row reduction: the reduced matrix and its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    /// The matrix in reduced row echelon form.
    pub matrix: LinearMap,
    /// Pivot column indices, strictly increasing.
    pub pivots: Vec<usize>,
}

/// A certified splitting of an idempotent e = i ∘ p with p ∘ i = id.
#[derive(Debug, Clone)]
pub struct Splitting {
    /// Rank of the idempotent (dimension of its image).
    pub rank: usize,
    /// Section: an n×rank map whose columns are a basis of the image.
    pub i: LinearMap,
    /// Retraction: a rank×n map with `p ∘ i = id` and `i ∘ p = e`.
    pub p: LinearMap,
}

/// Split an idempotent `e` into `i ∘ p` with `p ∘ i = id`, exactly.
///
/// The image basis is taken from the pivot columns of `e` (in column order)
/// and the retraction from the nonzero rows of the reduced row echelon form
/// of `e`; both factorization identities are certified before returning.
pub fn split_idempotent(e: &LinearMap) -> Result<Splitting> {
    if e.rows != e.cols {
        return Err(HopfError::Dim {
            context: "split_idempotent".into(),
            detail: format!("matrix is {}x{}, not square", e.rows, e.cols),
        });
    }
    let ee = compose(e, e)?;
    if let Some((_, c)) = ee.first_difference(e) {
        return Err(HopfError::NotIdempotent { witness: c });
    }
    let n = e.rows;
    let rref = e.rref();
    let rank = rref.pivots.len();
    // Section: the pivot columns of e itself form a basis of im(e).
    let i = LinearMap::from_fn(n, rank, e.field, |r, c| e.get(r, rref.pivots[c]).clone());
    // Retraction: the nonzero rows of rref(e). Row space of e equals row
    // space of rref(e); because e is idempotent, p∘i = id and i∘p = e.
    let p = LinearMap::from_fn(rank, n, e.field, |r, c| rref.matrix.get(r, c).clone());
    let pi = compose(&p, &i)?;
    if pi != LinearMap::identity(rank, e.field) {
        return Err(HopfError::Invalid("split_idempotent: p∘i is not the identity".into()));
    }
    let ip = compose(&i, &p)?;
    if &ip != e {
        return Err(HopfError::Invalid("split_idempotent: i∘p does not recover e".into()));
    }
    Ok(Splitting { rank, i, p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn rref_pivots_are_deterministic() {
        // [[0,1],[0,2]] reduces to [[0,1],[0,0]] with pivot column 1.
        let m = LinearMap::from_fn(2, 2, Field::Rational, |r, c| {
            if c == 1 { q((r + 1) as i64) } else { q(0) }
        });
        let r = m.rref();
        assert_eq!(r.pivots, vec![1]);
        assert_eq!(*r.matrix.get(0, 1), q(1));
        assert!(r.matrix.get(1, 1).is_zero());
    }

    #[test]
    fn kernel_basis_spans_the_kernel() {
        // x + y + z = 0 has a 2-dimensional kernel.
        let m = LinearMap::from_fn(1, 3, Field::Rational, |_, _| q(1));
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        for c in 0..2 {
            let img = m.apply(&k.col(c)).unwrap();
            assert!(img.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn invert_rejects_singular() {
        let m = LinearMap::from_fn(2, 2, Field::Rational, |_, _| q(1));
        assert!(matches!(invert_map(&m), Err(HopfError::Singular)));
    }

    #[test]
    fn flip_map_swaps_factors() {
        let f = flip_map(2, 3, Field::Rational);
        // e_1 ⊗ e_2 (index 1*3+2=5) maps to e_2 ⊗ e_1 (index 2*2+1=5)... and
        // e_0 ⊗ e_2 (index 2) maps to e_2 ⊗ e_0 (index 4).
        assert!(f.get(4, 2).is_one());
        assert!(f.get(2, 4).is_zero());
        let g = flip_map(3, 2, Field::Rational);
        assert_eq!(compose(&g, &f).unwrap(), LinearMap::identity(6, Field::Rational));
    }

    #[test]
    fn split_idempotent_rejects_non_idempotent_with_witness() {
        let m = LinearMap::from_fn(2, 2, Field::Rational, |r, c| if r == c { q(2) } else { q(0) });
        match split_idempotent(&m) {
            Err(HopfError::NotIdempotent { witness }) => assert_eq!(witness, 0),
            other => panic!("expected NotIdempotent, got {other:?}"),
        }
    }

    #[test]
    fn from_tensor_uses_inputs_first_convention() {
        // mul[i][j][k] for a 2-dim algebra: as a map it is 2 x 4.
        let t = Tensor::from_fn(&[2, 2, 2], Field::Rational, |idx| {
            if idx == [1, 1, 0] { q(7) } else { q(0) }
        });
        let m = LinearMap::from_tensor(&t, 2);
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 4);
        assert_eq!(*m.get(0, 3), q(7));
        let back = m.to_tensor(&[2, 2], &[2]).unwrap();
        assert_eq!(back, t);
    }
}
