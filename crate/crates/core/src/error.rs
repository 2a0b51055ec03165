use thiserror::Error;

use crate::root_data::{AlgebraKind, RootVector};
use crate::transition::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("operation not defined for {0}")]
    UnsupportedKind(AlgebraKind),

    #[error("partition has no part of size {0}")]
    PartAbsent(u32),

    #[error("malformed document: {0}")]
    Parse(String),

    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    #[error("left and right data have different weights ({left} vs {right})")]
    WeightMismatch { left: RootVector, right: RootVector },

    #[error("mixed algebra kinds ({0} and {1})")]
    KindMismatch(AlgebraKind, AlgebraKind),

    /// No MV completion exists. Uniqueness rules this out, so it
    /// is always an implementation bug.
    #[error("internal error: no MV completion of {side:?} datum {datum}")]
    InternalNoSolution { side: Side, datum: String },

    /// More than one MV completion exists. Always an implementation bug.
    #[error("internal error: {count} MV completions of {side:?} datum {datum}")]
    InternalMultipleSolutions {
        side: Side,
        datum: String,
        count: usize,
    },
}

impl Error {
    /// True for the solver invariant breaches that must never be swallowed.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalNoSolution { .. } | Error::InternalMultipleSolutions { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
