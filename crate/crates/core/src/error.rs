use thiserror::Error;

/// Errors raised by the polynomial generators, the oracle and the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order n = 0 is not represented (d_0 has no q-coefficients)")]
    ZeroOrder,

    #[error("order n = {n} is below the minimum of {min} for {what}")]
    OrderTooSmall {
        n: u32,
        min: u32,
        what: &'static str,
    },

    #[error("order n = {n} is outside the scope of {what}: {reason}")]
    OutOfScope {
        n: u32,
        what: &'static str,
        reason: &'static str,
    },

    #[error(
        "order n = {n} exceeds the enumeration cap of {cap} ({n}! permutations); \
         raise the cap explicitly to proceed"
    )]
    OracleCap { n: u32, cap: u32 },

    #[error("coefficient sequence for n = {n}: {reason}")]
    InvalidSequence { n: u32, reason: String },

    #[error("not a permutation of 1..={len}: {reason}")]
    InvalidPermutation { len: usize, reason: String },

    #[error("unknown method tag {0:?} (expected recursive, wachs, oracle or coeff-recurrence)")]
    UnknownMethod(String),
}

pub type Result<T> = std::result::Result<T, Error>;
