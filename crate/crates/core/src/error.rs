use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Long division left a nonzero remainder.
    #[error("polynomial division is not exact: ({dividend}) / ({divisor})")]
    NotDivisible { dividend: String, divisor: String },

    /// Two independently computed sides of an identity disagree.
    #[error("identity {identity} violated at {at}: {lhs} != {rhs}")]
    IdentityViolation {
        identity: &'static str,
        at: String,
        lhs: String,
        rhs: String,
    },

    #[error("invalid path step {0:?} (expected U or D)")]
    InvalidStep(char),

    #[error("golden file not found: {}", .0.display())]
    MissingGoldenFile(PathBuf),

    #[error("malformed golden file {}: {reason}", path.display())]
    MalformedGoldenFile { path: PathBuf, reason: String },

    #[error("n = {n} exceeds the exhaustive enumeration guard {cap}; pass --force to override")]
    GuardExceeded { n: u64, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
