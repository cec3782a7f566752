//! Deterministic single-entry mutations of serialized structures, used to
//! measure how sensitive each verification op is to corrupted structure
//! constants.
//!
//! A mutation adds 1 to one scalar entry of the file's own structure
//! tensors (in fixed serialization order), leaving the embedded base, the
//! context block, and any comparison map `v` untouched: those are either a
//! separate structure with its own verification or a morphism certified by
//! the structure-theorem ops rather than by the kind's verification op.
//! Over GF(2) adding 1 flips the entry; over the rationals it always
//! changes it. No randomness is involved, so a battery is reproducible
//! byte-for-byte.

use crate::error::{HopfError, Result};
use crate::format::{AlgebraFile, TensorData, TensorSet};
use crate::scalar::Field;

fn own_tensors(t: &TensorSet) -> Vec<&TensorData> {
    [
        &t.mul, &t.unit, &t.comul, &t.counit, &t.phi, &t.phi_inv, &t.alpha, &t.beta, &t.s,
        &t.s_inv, &t.action, &t.coaction, &t.rho, &t.lambda, &t.phi_r, &t.phi_r_inv, &t.phi_l,
        &t.phi_l_inv, &t.phi_lr, &t.phi_lr_inv,
    ]
    .into_iter()
    .flatten()
    .collect()
}

fn own_tensors_mut(t: &mut TensorSet) -> Vec<&mut TensorData> {
    [
        &mut t.mul, &mut t.unit, &mut t.comul, &mut t.counit, &mut t.phi, &mut t.phi_inv,
        &mut t.alpha, &mut t.beta, &mut t.s, &mut t.s_inv, &mut t.action, &mut t.coaction,
        &mut t.rho, &mut t.lambda, &mut t.phi_r, &mut t.phi_r_inv, &mut t.phi_l,
        &mut t.phi_l_inv, &mut t.phi_lr, &mut t.phi_lr_inv,
    ]
    .into_iter()
    .flatten()
    .collect()
}

fn count_entries(td: &TensorData) -> usize {
    match td {
        TensorData::Entry(_) => 1,
        TensorData::Row(rows) => rows.iter().map(count_entries).sum(),
    }
}

fn bump_entry(td: &mut TensorData, field: Field, remaining: &mut usize) -> Result<bool> {
    match td {
        TensorData::Entry(s) => {
            if *remaining == 0 {
                let bumped = field.parse(s)?.add(&field.one());
                *s = bumped.canonical_string();
                Ok(true)
            } else {
                *remaining -= 1;
                Ok(false)
            }
        }
        TensorData::Row(rows) => {
            for row in rows {
                if bump_entry(row, field, remaining)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// The number of mutable scalar positions in the file: all entries of its
/// own structure tensors, excluding `v`, the base, and the context.
pub fn entry_count(file: &AlgebraFile) -> usize {
    own_tensors(&file.tensors).into_iter().map(count_entries).sum()
}

/// Add 1 to the scalar at `pos` (serialization order over the file's own
/// structure tensors). Fails if `pos` is out of range.
pub fn mutate_entry(file: &AlgebraFile, pos: usize) -> Result<AlgebraFile> {
    let total = entry_count(file);
    if pos >= total {
        return Err(HopfError::Invalid(format!(
            "mutation position {pos} out of range (file has {total} entries)"
        )));
    }
    let field = file.field.to_field()?;
    let mut out = file.clone();
    let mut remaining = pos;
    for td in own_tensors_mut(&mut out.tensors) {
        if bump_entry(td, field, &mut remaining)? {
            return Ok(out);
        }
    }
    unreachable!("position checked against entry count")
}

/// The standard battery: `count` single-entry mutations at the evenly
/// spread positions ⌊i·T/count⌋ for i = 0, …, count−1, where T is the
/// number of mutable entries. Positions repeat when T < count.
pub fn mutation_battery(file: &AlgebraFile, count: usize) -> Result<Vec<AlgebraFile>> {
    let total = entry_count(file);
    if total == 0 {
        return Err(HopfError::Invalid("file has no mutable entries".into()));
    }
    (0..count).map(|i| mutate_entry(file, i * total / count)).collect()
}
