use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A nilpotency precondition failed; the message names the offending
    /// power.
    #[error("nilpotency precondition failed: {0}")]
    Nilpotency(String),

    /// Scalar rejected by a torus action (not a unit or not a root of
    /// unity of the required order).
    #[error("bad scalar: {0}")]
    BadScalar(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, CurveError>;
