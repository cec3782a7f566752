//! Exhaustive verification sweeps over basis tuples.
//!
//! Identity checks quantify over all basis tuples of their free variables.
//! Each tuple is independent, so the sweep is data-parallel: with the
//! `parallel` feature (on by default) tuples are checked with rayon and the
//! lexicographically first failure is reported, bit-identical to the
//! sequential fallback.

/// Total number of tuples in a sweep space (1 for the empty space).
pub fn total(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Row-major tuple of a flat offset (last axis fastest).
pub fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for ax in (0..dims.len()).rev() {
        idx[ax] = flat % dims[ax];
        flat /= dims[ax];
    }
    idx
}

/// Sequential sweep: the lexicographically first tuple where `check` is
/// false, or `None` if every tuple passes.
pub fn first_failure_seq(dims: &[usize], check: impl Fn(&[usize]) -> bool + Sync) -> Option<Vec<usize>> {
    let n = total(dims);
    for flat in 0..n {
        let idx = unflatten(flat, dims);
        if !check(&idx) {
            return Some(idx);
        }
    }
    None
}

/// Parallel sweep with the same contract as [`first_failure_seq`]: the
/// minimum flat index of a failing tuple is returned, so the witness is
/// identical to the sequential one.
#[cfg(feature = "parallel")]
pub fn first_failure_par(dims: &[usize], check: impl Fn(&[usize]) -> bool + Sync) -> Option<Vec<usize>> {
    use rayon::prelude::*;
    let n = total(dims);
    (0..n)
        .into_par_iter()
        .filter(|&flat| !check(&unflatten(flat, dims)))
        .min()
        .map(|flat| unflatten(flat, dims))
}

/// Dispatching sweep: parallel when the feature is enabled and the space is
/// large enough for the fork overhead to pay off, sequential otherwise. Both
/// paths return the same witness.
pub fn first_failure(dims: &[usize], check: impl Fn(&[usize]) -> bool + Sync) -> Option<Vec<usize>> {
    #[cfg(feature = "parallel")]
    {
        if total(dims) >= 64 {
            return first_failure_par(dims, check);
        }
    }
    first_failure_seq(dims, check)
}
