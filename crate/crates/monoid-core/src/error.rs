//! Error type and resource caps shared by every operation in the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    /// A bounded search hit its configured cap. Distinct from a negative
    /// answer: the caller learns "unknown at this budget", never a guess.
    #[error("resource cap exceeded in {operation}: {detail} (cap {cap})")]
    ResourceCap {
        operation: &'static str,
        detail: String,
        cap: u64,
    },

    /// Structural precondition violated (wrong arity, incompatible ambient
    /// groups, map not defined on torsion, generator image outside target).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, MonoidError>;

/// Explicit bounds for the searches that are finite but potentially large.
/// Defaults are sized for desk-scale inputs (lattice rank up to ~6, torsion
/// orders up to a few hundred) and finish in well under a second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Max number of Hilbert-basis candidate points collected across all
    /// simplicial pieces of one cone.
    pub hilbert_candidates: u64,
    /// Max search nodes when deciding monoid membership.
    pub membership_nodes: u64,
    /// Largest Kummer exponent tried before answering "unknown".
    pub kummer_exponent: u32,
    /// Max order of a torsion group that may be enumerated element by
    /// element (canonical coset representatives, unit-group walks).
    pub torsion_enumeration: u64,
    /// Max backtracking nodes in the isomorphism search.
    pub iso_nodes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            hilbert_candidates: 200_000,
            membership_nodes: 1_000_000,
            kummer_exponent: 64,
            torsion_enumeration: 65_536,
            iso_nodes: 1_000_000,
        }
    }
}
