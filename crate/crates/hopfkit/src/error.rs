//! Error type shared by the whole crate.
//!
//! Axiom failures are *not* errors — they are recorded in a [`Report`].
//! Errors are reserved for malformed inputs (shape/field mismatches),
//! genuine mathematical obstructions (singular matrix where an isomorphism
//! was claimed, non-idempotent projector), and failed preconditions or
//! certifications of the structure-theorem pipelines, which carry the
//! offending report.

use crate::report::Report;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    /// Two operands live over different base fields.
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    /// A tensor/map had the wrong shape for the requested operation.
    #[error("dimension mismatch in {context}: {detail}")]
    Dim { context: String, detail: String },

    /// Requested prime modulus is not a prime in the supported range.
    #[error("{0} is not a prime in the supported range 2..2^31")]
    NotPrime(u64),

    /// Division by zero in the base field.
    #[error("division by zero")]
    DivisionByZero,

    /// A matrix claimed to be invertible is singular.
    #[error("singular matrix: claimed isomorphism fails")]
    Singular,

    /// `split_idempotent` was handed a non-idempotent map; `witness` is the
    /// first basis column where e² and e differ.
    #[error("map is not idempotent; witness basis column {witness}")]
    NotIdempotent { witness: usize },

    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Carrier dimension exceeds the configured cap (HOPFKIT_MAX_DIM).
    #[error("carrier dimension {dim} exceeds cap {cap} (set HOPFKIT_MAX_DIM to raise)")]
    DimensionCap { dim: usize, cap: usize },

    /// A verified precondition of an operation does not hold; the report
    /// contains the failing identity and its witness.
    #[error("precondition of {op} failed at identity `{id}`")]
    Precondition {
        op: String,
        id: String,
        report: Box<Report>,
    },

    /// A certification step of a constructive operation failed; the report
    /// contains the failing identity and its witness.
    #[error("certification in {op} failed at identity `{id}`")]
    Certification {
        op: String,
        id: String,
        report: Box<Report>,
    },

    /// Malformed input data (catch-all with description).
    #[error("{0}")]
    Invalid(String),

    /// JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// Filesystem failure.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl HopfError {
    /// The embedded report, when this error carries one.
    pub fn report(&self) -> Option<&Report> {
        match self {
            HopfError::Precondition { report, .. } | HopfError::Certification { report, .. } => {
                Some(report)
            }
            _ => None,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, HopfError>;
