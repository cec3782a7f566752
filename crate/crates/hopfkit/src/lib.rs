//! hopfkit: exact computer algebra for quasi-Hopf, weak Hopf, and braided
//! Hopf algebras given by structure constants.
//!
//! The crate verifies the defining axiom systems of the three flavors,
//! builds their smash products, computes coinvariants by splitting the
//! canonical projector, and mechanically certifies the structure theorems
//! that decompose a bicomodule algebra as a smash product of its
//! coinvariants with the acting algebra. All arithmetic is exact (ℚ or
//! GF(p)); every verification returns a [`report::Report`] with one entry
//! per identity and an exact witness for the first failing basis tuple.

pub mod algebra;
pub mod braided;
pub mod format;
pub mod mutate;
pub mod elem;
pub mod error;
pub mod examples;
pub mod linmap;
pub mod quasi;
pub mod report;
pub mod scalar;
pub mod sweep;
pub mod tensor;
pub mod weak;

pub use algebra::AlgebraData;
pub use elem::{Elem, SlotOp};
pub use error::{HopfError, Result};
pub use linmap::{compose, compose_chain, flip_map, invert_map, kron, kron_chain, split_idempotent, LinearMap, Splitting};
pub use report::{IdentityCheck, Report, Runner, Witness};
pub use scalar::{Field, Scalar};
pub use tensor::{tensor_contract, Tensor};

/// The carrier-dimension cap, read from `HOPFKIT_MAX_DIM` (default 64).
/// Input files whose carrier dimension exceeds the cap are rejected before
/// any exhaustive verification starts.
pub fn max_dim() -> usize {
    std::env::var("HOPFKIT_MAX_DIM")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(64)
}
