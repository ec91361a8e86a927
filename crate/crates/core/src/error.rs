use alloc::string::String;

/// Errors produced by the computational core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("form has no symplectic basis: gram matrix is degenerate or not alternating")]
    NoSymplecticBasis,
    #[error("vectors do not form a hyperbolic pair (pairing is 0)")]
    NotHyperbolicPair,
    #[error("class is not a curve class: {0}")]
    NotACurveClass(String),
    #[error("degenerate lattice: gram matrix is singular")]
    DegenerateLattice,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("non-standard Nikulin data requires odd genus, got h = {0}")]
    NonStandardForcesOdd(i64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
