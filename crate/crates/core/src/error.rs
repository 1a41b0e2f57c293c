use thiserror::Error;

use crate::exactlin::RingSpec;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported ring {0}: elimination needs Z, Q or Z/p with p prime")]
    UnsupportedRing(RingSpec),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("image is not contained in the span of the kernel generators")]
    NotASubmodule,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a differential: {0}")]
    NotADifferential(String),

    #[error("not a bimodule map: {0}")]
    NotABimoduleMap(String),

    #[error("the dialgebra has no basis containing the bar-unit")]
    NoBarUnitBasis,

    #[error("size guard exceeded: {required} tensor basis elements needed, guard is {guard}")]
    SizeGuardExceeded { required: u128, guard: u128 },

    #[error("Leibniz superalgebra is not perfect")]
    NotPerfect,

    #[error("unsupported case (m, n) = ({m}, {n}): {reason}")]
    UnsupportedCase { m: usize, n: usize, reason: String },

    #[error("(m, n) = ({m}, {n}) is not covered by the classification")]
    UnclassifiedCase { m: usize, n: usize },

    #[error("check inapplicable: {0}")]
    Inapplicable(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
