//! Error type shared across the crate.
//!
//! Contract violations (bad ranks, non-dominant inputs, ambient mismatches)
//! are reported through [`Error`]. Violations of proven identities are bugs
//! and panic instead.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed type label, e.g. B1 or D2.
    #[error("invalid type: {0}")]
    InvalidType(String),

    /// A weight or root was used with a root system of a different type.
    #[error("ambient mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: String, got: String },

    /// Node index outside 0..rank.
    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    /// Operation requires a dominant weight.
    #[error("weight {0} is not dominant")]
    NotDominant(String),

    /// Operation requires a minuscule weight (or zero).
    #[error("weight {0} is not minuscule")]
    NotMinuscule(String),

    /// A product of (1 - q^a) factors does not divide out to a polynomial.
    #[error("not a polynomial")]
    NotAPolynomial,

    /// A node permutation does not preserve the Cartan matrix.
    #[error("permutation does not preserve the Cartan matrix")]
    NotCartanPreserving,

    /// Satake diagram construction or node deletion precondition failed.
    #[error("node painted or arrowed")]
    NodePaintedOrArrowed,

    /// Satake diagram data violates its invariants.
    #[error("invalid Satake diagram: {0}")]
    InvalidSatake(String),
}

pub type Result<T> = std::result::Result<T, Error>;
