//! Sequence-level checks over arbitrary positive integer sequences.
//!
//! Indices are 1-based to match `A(k)`. Every check reduces to a list of
//! exact integer comparisons; ratios are compared by cross-multiplication.

use num_bigint::BigUint;

use super::layout::RatioLayout;
use super::report::{Comparison, Property, PropertyReport};

fn at(values: &[BigUint], k: usize) -> &BigUint {
    &values[k - 1]
}

/// `p/q < s/t` as `p*t < s*q`.
fn ratio_less(
    label: &'static str,
    index: usize,
    values: &[BigUint],
    (p, q): (usize, usize),
    (s, t): (usize, usize),
) -> Comparison {
    Comparison::less(
        label,
        index,
        at(values, p) * at(values, t),
        at(values, s) * at(values, q),
    )
}

fn chain(
    label: &'static str,
    values: &[BigUint],
    terms: &[(usize, usize)],
    out: &mut Vec<Comparison>,
) {
    for (step, pair) in terms.windows(2).enumerate() {
        out.push(ratio_less(label, step + 1, values, pair[0], pair[1]));
    }
    if let Some(&(p, q)) = terms.last() {
        // Final term below 1.
        out.push(Comparison::less(
            label,
            terms.len(),
            at(values, p).clone(),
            at(values, q).clone(),
        ));
    }
}

/// Both ratio chains strictly increasing and ending below 1.
///
/// Comparisons are labelled `"chain A"` / `"chain B"`; comparison `i` of a
/// chain is term `i` against term `i + 1`, and the last one is the final term
/// against 1.
pub fn ratio_monotone(values: &[BigUint], layout: &RatioLayout) -> PropertyReport {
    assert_eq!(
        values.len(),
        layout.len(),
        "layout does not match sequence length"
    );
    let a: Vec<_> = layout.chain_a().collect();
    let b: Vec<_> = layout.chain_b().collect();
    let mut comparisons = Vec::with_capacity(a.len() + b.len());
    chain("chain A", values, &a, &mut comparisons);
    chain("chain B", values, &b, &mut comparisons);
    PropertyReport::from_comparisons(Property::RatioMonotone, comparisons)
}

/// Strict increase along `A(1), A(partner(1)), A(2), A(partner(2)), ...`.
pub fn spiral(values: &[BigUint], layout: &RatioLayout) -> PropertyReport {
    assert_eq!(
        values.len(),
        layout.len(),
        "layout does not match sequence length"
    );
    let order = layout.spiral_order();
    let comparisons = order
        .windows(2)
        .map(|w| {
            Comparison::less(
                "spiral",
                w[1],
                at(values, w[0]).clone(),
                at(values, w[1]).clone(),
            )
        })
        .collect();
    PropertyReport::from_comparisons(Property::Spiral, comparisons)
}

/// Strict rise up to `peak`, then a non-increasing tail whose first step is
/// strict, so `peak` is the unique maximum.
pub fn unimodal_at(values: &[BigUint], peak: usize) -> PropertyReport {
    assert!(
        (1..=values.len()).contains(&peak),
        "peak index out of range"
    );
    let mut comparisons = Vec::with_capacity(values.len());
    for k in 1..peak {
        comparisons.push(Comparison::less(
            "rise",
            k + 1,
            at(values, k).clone(),
            at(values, k + 1).clone(),
        ));
    }
    for k in peak..values.len() {
        let (next, cur) = (at(values, k + 1).clone(), at(values, k).clone());
        comparisons.push(if k == peak {
            Comparison::less("fall", k + 1, next, cur)
        } else {
            Comparison::less_eq("fall", k + 1, next, cur)
        });
    }
    PropertyReport::from_comparisons(Property::Unimodal, comparisons)
        .with_note(format!("expected unique maximum at index {peak}"))
}

/// Strict log-concavity `A(k-1) A(k+1) < A(k)^2` for `lo < k < hi`, i.e.
/// the ratio chain `A(lo)/A(lo+1) < ... < A(hi-1)/A(hi)`.
pub fn log_concave_range(values: &[BigUint], lo: usize, hi: usize) -> PropertyReport {
    assert!(lo >= 1 && hi <= values.len(), "range out of bounds");
    let comparisons = (lo + 1..hi)
        .map(|k| {
            let c = at(values, k);
            Comparison::less(
                "log-concave",
                k,
                at(values, k - 1) * at(values, k + 1),
                c * c,
            )
        })
        .collect();
    PropertyReport::from_comparisons(Property::LogConcave, comparisons)
}
