//! Mechanical checks of the coefficient structure of `d_n(q)`.
//!
//! The `verify_*` functions take a [`CoeffSeq`] and refuse orders below 6,
//! where the ratio-monotone theorem makes no claim (`d_4` already has a
//! plateau). The sequence-level checks in [`chains`] accept any positive
//! integer sequence and are what the implication tests run on.

pub mod chains;
mod layout;
mod lemmas;
mod report;

pub use layout::{RatioLayout, MIN_THEOREM_ORDER};
pub use lemmas::{check_lemma1, lemma2, lemma2_closed_forms, Lemma1InputError, Lemma1Outcome};
pub use report::{Comparison, Property, PropertyReport, Relation};

use crate::error::{Error, Result};
use crate::qpoly::CoeffSeq;

/// The midpoint layout of `d_n(q)`, `n >= 6`.
pub fn ratio_layout(n: u32) -> Result<RatioLayout> {
    RatioLayout::for_order(n)
}

fn layout_of(seq: &CoeffSeq) -> Result<RatioLayout> {
    let layout = RatioLayout::for_order(seq.n())?;
    debug_assert_eq!(layout.len(), seq.degree());
    Ok(layout)
}

/// Both ratio chains of `d_n(q)` strictly increase and end below 1.
pub fn verify_ratio_monotone(seq: &CoeffSeq) -> Result<PropertyReport> {
    let layout = layout_of(seq)?;
    Ok(chains::ratio_monotone(seq.coeffs(), &layout))
}

/// `A(1) < A(partner(1)) < A(2) < A(partner(2)) < ...` over the paired part.
pub fn verify_spiral(seq: &CoeffSeq) -> Result<PropertyReport> {
    let layout = layout_of(seq)?;
    Ok(chains::spiral(seq.coeffs(), &layout))
}

/// Unimodality with the unique maximum at the layout's peak index: `r` for
/// `n ≡ 0, 1 (mod 4)` and `r + 1` for `n ≡ 2, 3 (mod 4)`.
pub fn verify_unimodal_peak(seq: &CoeffSeq) -> Result<PropertyReport> {
    let layout = layout_of(seq)?;
    let report = chains::unimodal_at(seq.coeffs(), layout.peak());
    Ok(report.with_note(format!(
        "n = {} (mod 4 = {}), r = {}",
        seq.n(),
        seq.n() % 4,
        layout.r()
    )))
}

/// Strict log-concavity over `A(1..=n(n-1)/2 - 1)`. For even `n` this leaves
/// out the final coefficient, and the final triple is additionally checked
/// to violate log-concavity.
pub fn verify_log_concave(seq: &CoeffSeq) -> Result<PropertyReport> {
    let layout = layout_of(seq)?;
    let values = seq.coeffs();
    let mut report = chains::log_concave_range(values, 1, layout.paired_len());
    if layout.excludes_last() {
        let beta = values.len();
        let last = &values[beta - 1];
        let before = &values[beta - 2];
        let before2 = &values[beta - 3];
        // A(β)/A(β-1) > A(β-1)/A(β-2), written as A(β-1)² < A(β-2)·A(β).
        report.comparisons.push(Comparison::less(
            "tail violation",
            beta - 1,
            before * before,
            before2 * last,
        ));
        report = PropertyReport::from_comparisons(report.property, report.comparisons).with_note(
            "tail violation is expected: A(β)/A(β-1) > A(β-1)/A(β-2), \
             checked as A(β-1)^2 < A(β-2)*A(β)",
        );
    }
    Ok(report)
}

/// Closed forms for the first and last four coefficients of `d_m`, even `m >= 6`.
pub fn verify_lemma2(seq: &CoeffSeq) -> Result<PropertyReport> {
    let m = seq.n();
    if m < MIN_THEOREM_ORDER {
        return Err(Error::OrderTooSmall {
            n: m,
            min: MIN_THEOREM_ORDER,
            what: "the boundary closed forms",
        });
    }
    if m % 2 == 1 {
        return Err(Error::OutOfScope {
            n: m,
            what: "the boundary closed forms",
            reason: "they are stated for even orders only",
        });
    }
    Ok(lemma2(seq.coeffs(), m))
}
