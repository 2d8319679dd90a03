//! Exact q-derangement polynomials `d_n(q)` and mechanical checks of the
//! structure of their coefficients.
//!
//! * [`qpoly`]: the coefficient type and three non-enumerative generators.
//! * [`oracle`]: ground truth by enumerating derangements and major indices.
//! * [`verify`]: ratio monotonicity, spiral, unimodality, log-concavity and
//!   the two auxiliary lemmas, all with exact integer comparisons.

pub mod error;
pub mod oracle;
pub mod qpoly;
pub mod verify;

pub use error::{Error, Result};
pub use oracle::{oracle_dn, oracle_dn_with_cap, Permutation, DEFAULT_ORACLE_CAP};
pub use qpoly::{
    coeff_recurrence_step, compute_coeff_recurrence, compute_recursive, compute_wachs,
    degree_bound, derangement_count, mul_by_qint, CoeffSeq, MethodTag,
};

/// Computes `d_n(q)` with the chosen method. `oracle_cap` only applies to
/// [`MethodTag::Oracle`].
pub fn generate(n: u32, method: MethodTag, oracle_cap: u32) -> Result<CoeffSeq> {
    match method {
        MethodTag::Recursive => compute_recursive(n),
        MethodTag::Wachs => compute_wachs(n),
        MethodTag::Oracle => oracle_dn_with_cap(n, oracle_cap),
        MethodTag::CoeffRecurrence => compute_coeff_recurrence(n),
    }
}
