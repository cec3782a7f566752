//! Dense multi-axis arrays of exact scalars.
//!
//! A `Tensor` stores structure constants in row-major order: the last axis
//! varies fastest. Structure tensors follow an inputs-first convention, e.g.
//! a multiplication on a d-dimensional algebra is a `[d, d, d]` tensor whose
//! `[i][j][k]` entry is the coefficient of basis vector `k` in the product
//! `e_i · e_j`.

use crate::error::{HopfError, Result};
use crate::scalar::{require_same_field, Field, Scalar};

/// A dense tensor with exact entries over a single base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Scalar>,
    field: Field,
}

impl Tensor {
    /// The all-zero tensor of the given shape.
    pub fn zeros(shape: &[usize], field: Field) -> Tensor {
        let len = shape.iter().product();
        Tensor { shape: shape.to_vec(), data: vec![field.zero(); len], field }
    }

    /// Build a tensor by evaluating `f` at every multi-index.
    pub fn from_fn(shape: &[usize], field: Field, mut f: impl FnMut(&[usize]) -> Scalar) -> Tensor {
        let mut t = Tensor::zeros(shape, field);
        let len = t.data.len();
        for flat in 0..len {
            let idx = t.unflatten(flat);
            let v = f(&idx);
            debug_assert_eq!(v.field(), field, "from_fn produced a scalar in the wrong field");
            t.data[flat] = v;
        }
        t
    }

    /// Shape (length per axis).
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// Base field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of axes.
    pub fn arity(&self) -> usize {
        self.shape.len()
    }

    /// Total number of entries.
    pub fn len(&self) -> usize {
        self.data.len()
    }

    /// Whether the tensor has no entries.
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Row-major flat offset of a multi-index.
    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut flat = 0;
        for (i, d) in idx.iter().zip(&self.shape) {
            debug_assert!(i < d, "index {i} out of bounds for axis of length {d}");
            flat = flat * d + i;
        }
        flat
    }

    /// Multi-index of a row-major flat offset.
    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.shape.len()];
        for ax in (0..self.shape.len()).rev() {
            idx[ax] = flat % self.shape[ax];
            flat /= self.shape[ax];
        }
        idx
    }

    /// Entry at a multi-index.
    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.flat_index(idx)]
    }

    /// Entry at a flat offset.
    pub fn get_flat(&self, flat: usize) -> &Scalar {
        &self.data[flat]
    }

    /// Set the entry at a multi-index.
    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        let flat = self.flat_index(idx);
        self.data[flat] = v;
    }

    /// Set the entry at a flat offset.
    pub fn set_flat(&mut self, flat: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[flat] = v;
    }

    /// Iterate `(multi-index, entry)` over all entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        (0..self.data.len()).map(|flat| (self.unflatten(flat), &self.data[flat]))
    }

    /// Iterate only the nonzero entries.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.iter().filter(|(_, v)| !v.is_zero())
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reinterpret the shape without moving data. Valid whenever the new
    /// shape has the same total length; because storage is row-major this is
    /// exactly the flattening/unflattening of groups of adjacent axes.
    pub fn reshape(&self, new_shape: &[usize]) -> Result<Tensor> {
        let new_len: usize = new_shape.iter().product();
        if new_len != self.data.len() {
            return Err(HopfError::Dim {
                context: "reshape".into(),
                detail: format!("cannot reshape {:?} into {:?}", self.shape, new_shape),
            });
        }
        Ok(Tensor { shape: new_shape.to_vec(), data: self.data.clone(), field: self.field })
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        require_same_field(self.field, other.field)?;
        if self.shape != other.shape {
            return Err(HopfError::Dim {
                context: "tensor add".into(),
                detail: format!("{:?} vs {:?}", self.shape, other.shape),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Tensor { shape: self.shape.clone(), data, field: self.field })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        require_same_field(self.field, other.field)?;
        if self.shape != other.shape {
            return Err(HopfError::Dim {
                context: "tensor sub".into(),
                detail: format!("{:?} vs {:?}", self.shape, other.shape),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Tensor { shape: self.shape.clone(), data, field: self.field })
    }

    /// Multiply every entry by a scalar.
    pub fn scale(&self, c: &Scalar) -> Tensor {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        Tensor { shape: self.shape.clone(), data, field: self.field }
    }

    /// Outer (tensor) product: axes of `self` followed by axes of `other`.
    pub fn outer(&self, other: &Tensor) -> Result<Tensor> {
        require_same_field(self.field, other.field)?;
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        let mut data = Vec::with_capacity(self.data.len() * other.data.len());
        for a in &self.data {
            for b in &other.data {
                data.push(a.mul(b));
            }
        }
        Ok(Tensor { shape, data, field: self.field })
    }
}

/// Contract `a` with `b` along the axis pairs `(axis_of_a, axis_of_b)`.
///
/// The result carries the uncontracted axes of `a` (in their original order)
/// followed by the uncontracted axes of `b`.
pub fn tensor_contract(a: &Tensor, b: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
    require_same_field(a.field, b.field)?;
    let mut a_contracted = vec![false; a.arity()];
    let mut b_contracted = vec![false; b.arity()];
    for &(ai, bi) in pairs {
        if ai >= a.arity() || bi >= b.arity() {
            return Err(HopfError::Dim {
                context: "tensor_contract".into(),
                detail: format!("axis pair ({ai},{bi}) out of range for shapes {:?}, {:?}", a.shape, b.shape),
            });
        }
        if a_contracted[ai] || b_contracted[bi] {
            return Err(HopfError::Dim {
                context: "tensor_contract".into(),
                detail: format!("axis repeated in contraction pairs {pairs:?}"),
            });
        }
        if a.shape[ai] != b.shape[bi] {
            return Err(HopfError::Dim {
                context: "tensor_contract".into(),
                detail: format!(
                    "contracted axes disagree: a axis {ai} has length {}, b axis {bi} has length {}",
                    a.shape[ai], b.shape[bi]
                ),
            });
        }
        a_contracted[ai] = true;
        b_contracted[bi] = true;
    }

    let a_keep: Vec<usize> = (0..a.arity()).filter(|&i| !a_contracted[i]).collect();
    let b_keep: Vec<usize> = (0..b.arity()).filter(|&i| !b_contracted[i]).collect();
    let mut out_shape: Vec<usize> = a_keep.iter().map(|&i| a.shape[i]).collect();
    out_shape.extend(b_keep.iter().map(|&i| b.shape[i]));
    let sum_dims: Vec<usize> = pairs.iter().map(|&(ai, _)| a.shape[ai]).collect();

    let mut out = Tensor::zeros(&out_shape, a.field);
    let out_len = out.data.len();
    let sum_total: usize = sum_dims.iter().product::<usize>().max(1);

    let mut a_idx = vec![0usize; a.arity()];
    let mut b_idx = vec![0usize; b.arity()];
    for flat in 0..out_len {
        let out_idx = out.unflatten(flat);
        for (pos, &ax) in a_keep.iter().enumerate() {
            a_idx[ax] = out_idx[pos];
        }
        for (pos, &ax) in b_keep.iter().enumerate() {
            b_idx[ax] = out_idx[a_keep.len() + pos];
        }
        let mut acc = a.field.zero();
        for s in 0..sum_total {
            let mut rem = s;
            // Row-major over the summation axes, last pair fastest.
            for (k, &(ai, bi)) in pairs.iter().enumerate().rev() {
                let v = rem % sum_dims[k];
                rem /= sum_dims[k];
                a_idx[ai] = v;
                b_idx[bi] = v;
            }
            let term = a.get(&a_idx).mul(b.get(&b_idx));
            if !term.is_zero() {
                acc = acc.add(&term);
            }
        }
        out.data[flat] = acc;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn flat_index_is_row_major() {
        let t = Tensor::zeros(&[2, 3, 4], Field::Rational);
        assert_eq!(t.flat_index(&[0, 0, 0]), 0);
        assert_eq!(t.flat_index(&[0, 0, 1]), 1);
        assert_eq!(t.flat_index(&[0, 1, 0]), 4);
        assert_eq!(t.flat_index(&[1, 0, 0]), 12);
        assert_eq!(t.unflatten(17), vec![1, 1, 1]);
    }

    #[test]
    fn reshape_groups_adjacent_axes() {
        let t = Tensor::from_fn(&[2, 3], Field::Rational, |idx| q((idx[0] * 3 + idx[1]) as i64));
        let r = t.reshape(&[6]).unwrap();
        for i in 0..6 {
            assert_eq!(*r.get(&[i]), q(i as i64));
        }
        assert!(t.reshape(&[4]).is_err());
    }

    #[test]
    fn contraction_rejects_mismatched_axes() {
        let a = Tensor::zeros(&[2, 3], Field::Rational);
        let b = Tensor::zeros(&[4], Field::Rational);
        assert!(tensor_contract(&a, &b, &[(1, 0)]).is_err());
        assert!(tensor_contract(&a, &b, &[(5, 0)]).is_err());
    }

    #[test]
    fn matrix_product_via_contraction() {
        // [[1,2],[3,4]] · [[5,6],[7,8]] = [[19,22],[43,50]]
        let a = Tensor::from_fn(&[2, 2], Field::Rational, |i| q([[1, 2], [3, 4]][i[0]][i[1]]));
        let b = Tensor::from_fn(&[2, 2], Field::Rational, |i| q([[5, 6], [7, 8]][i[0]][i[1]]));
        let c = tensor_contract(&a, &b, &[(1, 0)]).unwrap();
        assert_eq!(*c.get(&[0, 0]), q(19));
        assert_eq!(*c.get(&[0, 1]), q(22));
        assert_eq!(*c.get(&[1, 0]), q(43));
        assert_eq!(*c.get(&[1, 1]), q(50));
    }
}
