//! Sparse elements of iterated tensor products, with structure-map scripting.
//!
//! An `Elem` is a finite linear combination of basis tuples of a product
//! space V₁⊗…⊗Vₖ. Identities such as the pentagon equation are verified by
//! scripting both sides as sequences of slot operations — comultiplication,
//! multiplication, actions, counits, linear maps, slot moves — and comparing
//! the resulting elements exactly. Keeping elements sparse avoids
//! materializing dense tensors on spaces like H⊗H⊗H⊗H.

use crate::linmap::LinearMap;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;
use std::collections::BTreeMap;

/// A sparse element of a tensor product of based spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem {
    shape: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
    field: Field,
}

/// How two elements are combined slotwise in [`Elem::pointwise`].
pub enum SlotOp<'a> {
    /// Both slots carry algebra elements; multiply with this `[d,d,d]`
    /// structure tensor (left factor from `self`).
    Mul(&'a Tensor),
    /// `self` carries an acting algebra element, `other` a module element;
    /// combine with this `[d_H, d_M, d_M]` action tensor.
    LAct(&'a Tensor),
    /// `self` carries a module element, `other` an algebra element acting on
    /// the right; combine with this `[d_M, d_H, d_M]` action tensor.
    RAct(&'a Tensor),
}

impl Elem {
    /// The zero element of the given product space.
    pub fn zero(shape: &[usize], field: Field) -> Elem {
        Elem { shape: shape.to_vec(), terms: BTreeMap::new(), field }
    }

    /// The scalar `1` viewed as an element of the empty product.
    pub fn scalar_one(field: Field) -> Elem {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), field.one());
        Elem { shape: Vec::new(), terms, field }
    }

    /// The basis element `e_i` of a single d-dimensional slot.
    pub fn basis(d: usize, i: usize, field: Field) -> Elem {
        debug_assert!(i < d);
        let mut terms = BTreeMap::new();
        terms.insert(vec![i], field.one());
        Elem { shape: vec![d], terms, field }
    }

    /// The basis tuple `e_{i₁}⊗…⊗e_{iₖ}`.
    pub fn basis_tuple(dims: &[usize], idx: &[usize], field: Field) -> Elem {
        debug_assert_eq!(dims.len(), idx.len());
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), field.one());
        Elem { shape: dims.to_vec(), terms, field }
    }

    /// Import a dense tensor (e.g. an associator or a unit vector) as an
    /// element whose slots are the tensor's axes.
    pub fn from_tensor(t: &Tensor) -> Elem {
        let mut terms = BTreeMap::new();
        for (idx, v) in t.iter_nonzero() {
            terms.insert(idx, v.clone());
        }
        Elem { shape: t.shape().to_vec(), terms, field: t.field() }
    }

    /// Import a coordinate vector on a single d-dimensional slot.
    pub fn from_vec(coords: &[Scalar], field: Field) -> Elem {
        let mut terms = BTreeMap::new();
        for (i, v) in coords.iter().enumerate() {
            if !v.is_zero() {
                terms.insert(vec![i], v.clone());
            }
        }
        Elem { shape: vec![coords.len()], terms, field }
    }

    /// Densify into a tensor of the same shape.
    pub fn to_tensor(&self) -> Tensor {
        let mut t = Tensor::zeros(&self.shape, self.field);
        for (idx, v) in &self.terms {
            t.set(idx, v.clone());
        }
        t
    }

    /// Slot dimensions.
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// Base field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(terms: &mut BTreeMap<Vec<usize>, Scalar>, idx: Vec<usize>, v: Scalar) {
        if v.is_zero() {
            return;
        }
        match terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&v);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Tensor product: slots of `self` followed by slots of `other`.
    pub fn tensor(&self, other: &Elem) -> Elem {
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        let mut terms = BTreeMap::new();
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                let mut idx = ia.clone();
                idx.extend_from_slice(ib);
                Self::insert_term(&mut terms, idx, ca.mul(cb));
            }
        }
        Elem { shape, terms, field: self.field }
    }

    /// Apply a comultiplication `[d, d, d]` tensor (`comul[h][i][j]` = the
    /// coefficient of `e_i ⊗ e_j` in Δ(e_h)) at `slot`, which splits into two
    /// adjacent slots.
    pub fn coprod(&self, comul: &Tensor, slot: usize) -> Elem {
        let d = self.shape[slot];
        debug_assert_eq!(comul.shape(), [d, d, d]);
        let mut shape = self.shape.clone();
        shape[slot] = d;
        shape.insert(slot + 1, d);
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let h = idx[slot];
            for i in 0..d {
                for j in 0..d {
                    let w = comul.get(&[h, i, j]);
                    if w.is_zero() {
                        continue;
                    }
                    let mut out = idx.clone();
                    out[slot] = i;
                    out.insert(slot + 1, j);
                    Self::insert_term(&mut terms, out, c.mul(w));
                }
            }
        }
        Elem { shape, terms, field: self.field }
    }

    /// Multiply adjacent slots `slot` and `slot+1` with a `[d,d,d]`
    /// multiplication tensor, merging them into one slot.
    pub fn mul(&self, mul: &Tensor, slot: usize) -> Elem {
        let d = self.shape[slot];
        debug_assert_eq!(self.shape[slot + 1], d);
        debug_assert_eq!(mul.shape(), [d, d, d]);
        let mut shape = self.shape.clone();
        shape.remove(slot + 1);
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let (i, j) = (idx[slot], idx[slot + 1]);
            for k in 0..d {
                let w = mul.get(&[i, j, k]);
                if w.is_zero() {
                    continue;
                }
                let mut out = idx.clone();
                out.remove(slot + 1);
                out[slot] = k;
                Self::insert_term(&mut terms, out, c.mul(w));
            }
        }
        Elem { shape, terms, field: self.field }
    }

    /// Act with the algebra slot `slot` on the module slot `slot+1` using a
    /// `[d_H, d_M, d_M]` action tensor; the algebra slot is consumed.
    pub fn act(&self, action: &Tensor, slot: usize) -> Elem {
        let dh = self.shape[slot];
        let dm = self.shape[slot + 1];
        debug_assert_eq!(action.shape(), [dh, dm, dm]);
        let mut shape = self.shape.clone();
        shape.remove(slot);
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let (h, m) = (idx[slot], idx[slot + 1]);
            for m2 in 0..dm {
                let w = action.get(&[h, m, m2]);
                if w.is_zero() {
                    continue;
                }
                let mut out = idx.clone();
                out.remove(slot);
                out[slot] = m2;
                Self::insert_term(&mut terms, out, c.mul(w));
            }
        }
        Elem { shape, terms, field: self.field }
    }

    /// Act on the right: module slot `slot`, algebra slot `slot+1`, with a
    /// `[d_M, d_H, d_M]` action tensor; the algebra slot is consumed.
    pub fn ract(&self, action: &Tensor, slot: usize) -> Elem {
        let dm = self.shape[slot];
        let dh = self.shape[slot + 1];
        debug_assert_eq!(action.shape(), [dm, dh, dm]);
        let mut shape = self.shape.clone();
        shape.remove(slot + 1);
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let (m, h) = (idx[slot], idx[slot + 1]);
            for m2 in 0..dm {
                let w = action.get(&[m, h, m2]);
                if w.is_zero() {
                    continue;
                }
                let mut out = idx.clone();
                out.remove(slot + 1);
                out[slot] = m2;
                Self::insert_term(&mut terms, out, c.mul(w));
            }
        }
        Elem { shape, terms, field: self.field }
    }

    /// Contract `slot` with a counit/functional `[d]` tensor, removing it.
    pub fn counit(&self, eps: &Tensor, slot: usize) -> Elem {
        let d = self.shape[slot];
        debug_assert_eq!(eps.shape(), [d]);
        let mut shape = self.shape.clone();
        shape.remove(slot);
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let w = eps.get(&[idx[slot]]);
            if w.is_zero() {
                continue;
            }
            let mut out = idx.clone();
            out.remove(slot);
            Self::insert_term(&mut terms, out, c.mul(w));
        }
        Elem { shape, terms, field: self.field }
    }

    /// Apply a linear map to a single slot (domain = slot dimension).
    pub fn map1(&self, f: &LinearMap, slot: usize) -> Elem {
        debug_assert_eq!(f.cols(), self.shape[slot]);
        let mut shape = self.shape.clone();
        shape[slot] = f.rows();
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let j = idx[slot];
            for i in 0..f.rows() {
                let w = f.get(i, j);
                if w.is_zero() {
                    continue;
                }
                let mut out = idx.clone();
                out[slot] = i;
                Self::insert_term(&mut terms, out, c.mul(w));
            }
        }
        Elem { shape, terms, field: self.field }
    }

    /// Apply a linear map whose codomain is a product space; the slot is
    /// replaced by `out_dims.len()` adjacent slots.
    pub fn map_multi(&self, f: &LinearMap, slot: usize, out_dims: &[usize]) -> Elem {
        debug_assert_eq!(f.cols(), self.shape[slot]);
        debug_assert_eq!(f.rows(), out_dims.iter().product::<usize>());
        let mut shape = self.shape.clone();
        shape.splice(slot..=slot, out_dims.iter().copied());
        let scratch = Tensor::zeros(out_dims, self.field);
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let j = idx[slot];
            for r in 0..f.rows() {
                let w = f.get(r, j);
                if w.is_zero() {
                    continue;
                }
                let parts = scratch.unflatten(r);
                let mut out = idx.clone();
                out.splice(slot..=slot, parts);
                Self::insert_term(&mut terms, out, c.mul(w));
            }
        }
        Elem { shape, terms, field: self.field }
    }

    /// Move the slot at position `from` to position `to` (positions after
    /// removal, i.e. `Vec::remove` followed by `Vec::insert`).
    pub fn move_slot(&self, from: usize, to: usize) -> Elem {
        let mut shape = self.shape.clone();
        let d = shape.remove(from);
        shape.insert(to, d);
        let mut terms = BTreeMap::new();
        for (idx, c) in &self.terms {
            let mut out = idx.clone();
            let v = out.remove(from);
            out.insert(to, v);
            Self::insert_term(&mut terms, out, c.clone());
        }
        Elem { shape, terms, field: self.field }
    }

    /// Sum of two elements of the same shape.
    pub fn add(&self, other: &Elem) -> Elem {
        debug_assert_eq!(self.shape, other.shape);
        let mut terms = self.terms.clone();
        for (idx, c) in &other.terms {
            Self::insert_term(&mut terms, idx.clone(), c.clone());
        }
        Elem { shape: self.shape.clone(), terms, field: self.field }
    }

    /// Difference of two elements of the same shape.
    pub fn sub(&self, other: &Elem) -> Elem {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Scalar) -> Elem {
        if c.is_zero() {
            return Elem::zero(&self.shape, self.field);
        }
        let terms = self.terms.iter().map(|(i, v)| (i.clone(), v.mul(c))).collect();
        Elem { shape: self.shape.clone(), terms, field: self.field }
    }

    /// Whether the element is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Slotwise product of two elements of the same shape: slot k of the
    /// result combines slot k of `self` with slot k of `other` according to
    /// `ops[k]`. This implements products such as Φ · (Δ⊗id)(Δ(h)) inside
    /// H⊗H⊗H, including mixed module/algebra slots.
    pub fn pointwise(&self, other: &Elem, ops: &[SlotOp<'_>]) -> Elem {
        debug_assert_eq!(self.shape.len(), other.shape.len());
        debug_assert_eq!(ops.len(), self.shape.len());
        let out_shape: Vec<usize> = ops
            .iter()
            .enumerate()
            .map(|(k, op)| match op {
                SlotOp::Mul(t) | SlotOp::LAct(t) | SlotOp::RAct(t) => t.shape()[2],
                #[allow(unreachable_patterns)]
                _ => self.shape[k],
            })
            .collect();
        let mut terms = BTreeMap::new();
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                // Expand the per-slot structure sums, accumulating partial
                // output indices with coefficients.
                let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), ca.mul(cb))];
                for (k, op) in ops.iter().enumerate() {
                    let (x, y) = (ia[k], ib[k]);
                    let table: &Tensor = match op {
                        SlotOp::Mul(t) => t,
                        SlotOp::LAct(t) => t,
                        SlotOp::RAct(t) => t,
                    };
                    let dout = table.shape()[2];
                    let mut next = Vec::new();
                    for z in 0..dout {
                        let w = table.get(&[x, y, z]);
                        if w.is_zero() {
                            continue;
                        }
                        for (pidx, pc) in &partial {
                            let mut out = pidx.clone();
                            out.push(z);
                            next.push((out, pc.mul(w)));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (idx, c) in partial {
                    Self::insert_term(&mut terms, idx, c);
                }
            }
        }
        Elem { shape: out_shape, terms, field: self.field }
    }

    /// Render the element for witnesses: `(basis tuple, coefficient)` pairs
    /// in lexicographic order of the tuple.
    pub fn render(&self) -> Vec<(String, String)> {
        self.terms
            .iter()
            .map(|(idx, c)| {
                let tuple = idx.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                (format!("({tuple})"), c.canonical_string())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    /// Group algebra of Z_2: mul[i][j][(i+j) mod 2] = 1, Δ(g) = g⊗g.
    fn z2_mul() -> Tensor {
        Tensor::from_fn(&[2, 2, 2], Field::Rational, |i| {
            if (i[0] + i[1]) % 2 == i[2] { q(1) } else { q(0) }
        })
    }

    fn z2_comul() -> Tensor {
        Tensor::from_fn(&[2, 2, 2], Field::Rational, |i| {
            if i[0] == i[1] && i[1] == i[2] { q(1) } else { q(0) }
        })
    }

    #[test]
    fn coprod_then_mul_round_trips_grouplike() {
        let e = Elem::basis(2, 1, Field::Rational);
        let split = e.coprod(&z2_comul(), 0);
        assert_eq!(split.shape(), &[2, 2]);
        let back = split.mul(&z2_mul(), 0);
        // g·g = e, the identity element of Z_2.
        assert_eq!(back, Elem::basis(2, 0, Field::Rational));
    }

    #[test]
    fn move_slot_uses_remove_insert_semantics() {
        let e = Elem::basis_tuple(&[2, 3, 4], &[1, 2, 3], Field::Rational);
        let m = e.move_slot(2, 0);
        assert_eq!(m.shape(), &[4, 2, 3]);
        assert_eq!(m, Elem::basis_tuple(&[4, 2, 3], &[3, 1, 2], Field::Rational));
    }

    #[test]
    fn pointwise_multiplies_slotwise() {
        // (g⊗g)·(g⊗e) = e⊗g in kZ_2 ⊗ kZ_2.
        let mul = z2_mul();
        let a = Elem::basis_tuple(&[2, 2], &[1, 1], Field::Rational);
        let b = Elem::basis_tuple(&[2, 2], &[1, 0], Field::Rational);
        let p = a.pointwise(&b, &[SlotOp::Mul(&mul), SlotOp::Mul(&mul)]);
        assert_eq!(p, Elem::basis_tuple(&[2, 2], &[0, 1], Field::Rational));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = Elem::basis(3, 1, Field::Rational);
        let b = Elem::basis(3, 1, Field::Rational);
        assert!(a.sub(&b).is_zero());
        let c = a.add(&b.scale(&q(-1)));
        assert_eq!(c.term_count(), 0);
    }

    #[test]
    fn map_multi_splits_a_slot() {
        // A map k² → k²⊗k² sending e_j to e_j⊗e_j.
        let f = LinearMap::from_fn(4, 2, Field::Rational, |r, c| {
            if r == c * 2 + c { q(1) } else { q(0) }
        });
        let e = Elem::basis_tuple(&[3, 2], &[2, 1], Field::Rational);
        let out = e.map_multi(&f, 1, &[2, 2]);
        assert_eq!(out, Elem::basis_tuple(&[3, 2, 2], &[2, 1, 1], Field::Rational));
    }
}
