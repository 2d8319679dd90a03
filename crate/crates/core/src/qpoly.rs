//! Exact q-derangement polynomials.
//!
//! `d_n(q)` is stored densely from exponent 1 upward: entry `k` (1-based) is
//! the coefficient `A_n(k)` of `q^k`. The constant term is always zero and is
//! not stored, and `d_1(q) = 0` is the empty sequence.
//!
//! Three generators are provided, all built on [`mul_by_qint`]:
//!
//! * [`compute_recursive`] iterates `d_k = [k] d_{k-1} + (-1)^k q^{C(k,2)}`.
//! * [`compute_wachs`] expands `sum_k (-1)^k q^{C(k,2)} [k+1][k+2]...[n]`.
//! * [`coeff_recurrence_step`] applies the five-branch coefficient recurrence
//!   for `A_{n+1}(k)` in terms of `A_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which generator produced a [`CoeffSeq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodTag {
    Recursive,
    Wachs,
    Oracle,
    CoeffRecurrence,
}

impl MethodTag {
    pub const ALL: [MethodTag; 4] = [
        MethodTag::Recursive,
        MethodTag::Wachs,
        MethodTag::Oracle,
        MethodTag::CoeffRecurrence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MethodTag::Recursive => "recursive",
            MethodTag::Wachs => "wachs",
            MethodTag::Oracle => "oracle",
            MethodTag::CoeffRecurrence => "coeff-recurrence",
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MethodTag::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_owned()))
    }
}

/// Coefficients `A_n(1), ..., A_n(β_n)` of `d_n(q)`.
///
/// Construction through [`CoeffSeq::new`] checks the structural invariants:
/// the length is `β_n` (zero for `n = 1`), `A_n(1) = 1`, every entry is
/// positive, and the entries sum to the derangement number `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffSeq {
    n: u32,
    coeffs: Vec<BigUint>,
}

impl CoeffSeq {
    pub fn new(n: u32, coeffs: Vec<BigUint>) -> Result<Self> {
        let seq = CoeffSeq { n, coeffs };
        seq.check_invariants()?;
        Ok(seq)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.n;
        let invalid = |reason: String| Error::InvalidSequence { n, reason };
        match n {
            0 => return Err(Error::ZeroOrder),
            1 => {
                if !self.coeffs.is_empty() {
                    return Err(invalid("d_1 must be the empty sequence".into()));
                }
                return Ok(());
            }
            _ => {}
        }
        let expected = degree_bound(n)?;
        if self.coeffs.len() != expected {
            return Err(invalid(format!(
                "length {} differs from the degree {expected}",
                self.coeffs.len()
            )));
        }
        if !self.coeffs[0].is_one() {
            return Err(invalid(format!("A(1) = {}, expected 1", self.coeffs[0])));
        }
        if let Some(k) = self.coeffs.iter().position(Zero::is_zero) {
            return Err(invalid(format!("A({}) is zero", k + 1)));
        }
        let total: BigUint = self.coeffs.iter().sum();
        let count = derangement_count(n);
        if total != count {
            return Err(invalid(format!(
                "coefficients sum to {total}, expected D_{n} = {count}"
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The degree `β_n`, equal to the number of stored coefficients.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    /// `A_n(k)` for `1 <= k <= β_n`.
    pub fn coeff(&self, k: usize) -> Option<&BigUint> {
        k.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    /// `d_n(1)`, the number of derangements of `{1..n}`.
    pub fn value_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Smallest 1-based index holding the largest coefficient.
    pub fn peak(&self) -> Option<(usize, &BigUint)> {
        let mut best: Option<(usize, &BigUint)> = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if best.is_none_or(|(_, b)| c > b) {
                best = Some((i + 1, c));
            }
        }
        best
    }
}

fn choose2(n: u32) -> usize {
    let n = n as usize;
    n * n.saturating_sub(1) / 2
}

/// Degree `β_n` of `d_n(q)`: `C(n,2)` for even `n`, `C(n,2) - 1` for odd `n`.
pub fn degree_bound(n: u32) -> Result<usize> {
    if n < 2 {
        return Err(Error::OrderTooSmall {
            n,
            min: 2,
            what: "the degree of d_n(q) (d_1 = 0 has no degree)",
        });
    }
    let c = choose2(n);
    Ok(if n.is_multiple_of(2) { c } else { c - 1 })
}

/// Classical derangement number `D_n`, via `D_n = n D_{n-1} + (-1)^n`.
pub fn derangement_count(n: u32) -> BigUint {
    let mut d = BigUint::one();
    for k in 1..=n {
        d *= k;
        if k % 2 == 0 {
            d += 1u32;
        } else {
            d -= 1u32;
        }
    }
    d
}

/// Multiplies a polynomial by the q-integer `[n] = 1 + q + ... + q^{n-1}`.
///
/// `coeffs[j]` is the coefficient of `q^{e+j}` for some fixed minimum exponent
/// `e`; the product keeps the same minimum exponent and has
/// `coeffs.len() + n - 1` entries, entry `k` being the sum of the inputs with
/// index in `[k-n+1, k]`. A running window sum keeps the cost linear in the
/// output length.
pub fn mul_by_qint(coeffs: &[BigUint], n: usize) -> Vec<BigUint> {
    assert!(n >= 1, "[0] is the zero polynomial");
    if coeffs.is_empty() {
        return Vec::new();
    }
    let len = coeffs.len() + n - 1;
    let mut out = Vec::with_capacity(len);
    let mut window = BigUint::zero();
    for k in 0..len {
        if let Some(c) = coeffs.get(k) {
            window += c;
        }
        if k >= n {
            window -= &coeffs[k - n];
        }
        out.push(window.clone());
    }
    out
}

/// `d_n(q)` by the recursion `d_k = [k] d_{k-1} + (-1)^k q^{C(k,2)}`, `d_1 = 0`.
///
/// For even `k` the monomial lands one past the product's degree. For odd `k`
/// it must cancel the product's leading coefficient, which has to be exactly 1.
pub fn compute_recursive(n: u32) -> Result<CoeffSeq> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut d: Vec<BigUint> = Vec::new();
    for k in 2..=n {
        d = mul_by_qint(&d, k as usize);
        let top = choose2(k);
        if k % 2 == 0 {
            assert_eq!(d.len() + 1, top, "q^{top} must extend d_{k}");
            d.push(BigUint::one());
        } else {
            assert_eq!(
                d.len(),
                top,
                "q^{top} must be the leading term of [{k}] d_{}",
                k - 1
            );
            let lead = d.pop().expect("non-empty product");
            assert!(
                lead.is_one(),
                "leading coefficient {lead} of [{k}] d_{} must cancel against q^{top}",
                k - 1
            );
        }
    }
    CoeffSeq::new(n, d)
}

/// `d_n(q)` from the alternating sum
/// `sum_{k=0}^{n} (-1)^k q^{C(k,2)} [k+1][k+2]...[n]`.
///
/// The q-factorial quotient is expanded as a product of q-integers, so no
/// polynomial division is needed. The signed terms are accumulated exactly and
/// the total must come out non-negative with a vanishing constant term.
pub fn compute_wachs(n: u32) -> Result<CoeffSeq> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let top = choose2(n);
    // acc[e] is the coefficient of q^e, e in 0..=C(n,2).
    let mut acc = vec![BigInt::zero(); top + 1];
    // tail = [k+1][k+2]...[n], starting from the empty product at k = n.
    let mut tail = vec![BigUint::one()];
    for k in (0..=n).rev() {
        let shift = choose2(k);
        debug_assert_eq!(shift + tail.len() - 1, top);
        let sign = if k % 2 == 0 { Sign::Plus } else { Sign::Minus };
        for (slot, c) in acc[shift..].iter_mut().zip(&tail) {
            *slot += BigInt::from_biguint(sign, c.clone());
        }
        if k >= 1 {
            tail = mul_by_qint(&tail, k as usize);
        }
    }
    assert!(acc[0].is_zero(), "constant term of d_{n} must vanish");
    while acc.last().is_some_and(Zero::is_zero) {
        acc.pop();
    }
    let coeffs = acc
        .into_iter()
        .skip(1)
        .map(|c| {
            c.to_biguint()
                .unwrap_or_else(|| panic!("negative coefficient {c} in d_{n}"))
        })
        .collect();
    CoeffSeq::new(n, coeffs)
}

/// Advances `d_n` to `d_{n+1}` with the coefficient recurrence
///
/// ```text
/// A_{n+1}(k) = sum_{i=1}^{k} A_n(i)              1 <= k <= n+1
///            = sum_{i=k-n}^{k} A_n(i)            n+1 <= k <= β_n
///            = sum_{i=k-n}^{β_n} A_n(i)          β_n <= k < β_{n+1}
///            = A_n(β_n - 1) + A_n(β_n)           k = β_{n+1}, n even
///            = 1                                 k = β_{n+1}, n odd
/// ```
///
/// with `A_n(i) = 0` outside `1..=β_n`. Debug builds evaluate every branch
/// whose range contains `k` and assert that they agree; release builds take
/// the first applicable one.
pub fn coeff_recurrence_step(prev: &CoeffSeq) -> Result<CoeffSeq> {
    let n = prev.n();
    if n < 2 {
        return Err(Error::OrderTooSmall {
            n,
            min: 2,
            what: "the coefficient recurrence",
        });
    }
    let a = prev.coeffs();
    let beta = a.len();
    let next_beta = degree_bound(n + 1)?;
    let n = n as usize;

    // prefix[j] = A_n(1) + ... + A_n(j), j in 0..=β_n.
    let mut prefix = Vec::with_capacity(beta + 1);
    prefix.push(BigUint::zero());
    for c in a {
        let s = prefix.last().expect("non-empty") + c;
        prefix.push(s);
    }
    let lower = |k: usize| (k.saturating_sub(n + 1)).min(beta);

    let prefix_branch = |k: usize| prefix[k.min(beta)].clone();
    let window_branch = |k: usize| &prefix[k] - &prefix[k - n - 1];
    let suffix_branch = |k: usize| &prefix[beta] - &prefix[lower(k)];

    let check = cfg!(debug_assertions);
    let mut out = Vec::with_capacity(next_beta);
    for k in 1..next_beta {
        let mut value: Option<BigUint> = None;
        if k <= n + 1 {
            merge_branch(&mut value, prefix_branch(k), "prefix", k);
        }
        if (n + 1..=beta).contains(&k) && (check || value.is_none()) {
            merge_branch(&mut value, window_branch(k), "window", k);
        }
        if k >= beta && (check || value.is_none()) {
            merge_branch(&mut value, suffix_branch(k), "suffix", k);
        }
        out.push(value.expect("branches cover 1..β_{n+1}"));
    }
    let boundary = if n.is_multiple_of(2) {
        let below = if beta >= 2 {
            a[beta - 2].clone()
        } else {
            BigUint::zero()
        };
        below + &a[beta - 1]
    } else {
        BigUint::one()
    };
    if check && n.is_multiple_of(2) {
        // The cancelled q^{C(n+1,2)} sits one above β_{n+1}, so the plain
        // window sum still applies at the boundary.
        assert_eq!(
            boundary,
            suffix_branch(next_beta),
            "boundary branch disagrees"
        );
    }
    out.push(boundary);
    CoeffSeq::new(n as u32 + 1, out)
}

fn merge_branch(slot: &mut Option<BigUint>, v: BigUint, branch: &str, k: usize) {
    match slot {
        Some(first) => assert_eq!(*first, v, "{branch} branch disagrees at index {k}"),
        None => *slot = Some(v),
    }
}

/// `d_n(q)` by iterating [`coeff_recurrence_step`] from `d_2 = q`.
pub fn compute_coeff_recurrence(n: u32) -> Result<CoeffSeq> {
    match n {
        0 => Err(Error::ZeroOrder),
        1 => CoeffSeq::new(1, Vec::new()),
        _ => {
            let mut d = CoeffSeq::new(2, vec![BigUint::one()])?;
            while d.n() < n {
                d = coeff_recurrence_step(&d)?;
            }
            Ok(d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    const D6: [u64; 15] = [1, 4, 9, 16, 24, 32, 37, 38, 35, 28, 20, 12, 6, 2, 1];

    #[test]
    fn degree_examples() {
        assert_eq!(degree_bound(8).unwrap(), 28);
        assert_eq!(degree_bound(9).unwrap(), 35);
        assert_eq!(degree_bound(2).unwrap(), 1);
        assert!(degree_bound(1).is_err());
        assert!(degree_bound(0).is_err());
    }

    #[test]
    fn derangement_numbers() {
        let expected = [1u64, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961];
        for (n, &d) in expected.iter().enumerate() {
            assert_eq!(derangement_count(n as u32), BigUint::from(d), "D_{n}");
        }
    }

    #[test]
    fn qint_product_examples() {
        assert_eq!(mul_by_qint(&big(&[1]), 2), big(&[1, 1]));
        // (q + q^2)(1 + q + q^2 + q^3); d_4 then adds q^6 on top.
        assert_eq!(mul_by_qint(&big(&[1, 1]), 4), big(&[1, 2, 2, 2, 1]));
        assert_eq!(
            mul_by_qint(&big(&[1, 3, 5, 7, 8, 8, 6, 4, 2]), 6),
            big(&[1, 4, 9, 16, 24, 32, 37, 38, 35, 28, 20, 12, 6, 2])
        );
        assert_eq!(mul_by_qint(&big(&[3, 5]), 1), big(&[3, 5]));
        assert!(mul_by_qint(&[], 7).is_empty());
    }

    #[test]
    fn recursive_small_orders() {
        assert!(compute_recursive(1).unwrap().coeffs().is_empty());
        assert_eq!(compute_recursive(2).unwrap().coeffs(), big(&[1]));
        assert_eq!(compute_recursive(3).unwrap().coeffs(), big(&[1, 1]));
        assert_eq!(
            compute_recursive(4).unwrap().coeffs(),
            big(&[1, 2, 2, 2, 1, 1])
        );
        assert_eq!(compute_recursive(6).unwrap().coeffs(), big(&D6));
        assert_eq!(compute_recursive(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn wachs_small_orders() {
        assert!(compute_wachs(1).unwrap().coeffs().is_empty());
        assert_eq!(compute_wachs(2).unwrap().coeffs(), big(&[1]));
        assert_eq!(compute_wachs(3).unwrap().coeffs(), big(&[1, 1]));
        assert_eq!(compute_wachs(6).unwrap().coeffs(), big(&D6));
        assert_eq!(compute_wachs(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn recurrence_step_small_orders() {
        let d2 = CoeffSeq::new(2, big(&[1])).unwrap();
        let d3 = coeff_recurrence_step(&d2).unwrap();
        assert_eq!(d3.coeffs(), big(&[1, 1]));
        let d4 = coeff_recurrence_step(&d3).unwrap();
        assert_eq!(d4.coeffs(), big(&[1, 2, 2, 2, 1, 1]));
        assert_eq!(compute_coeff_recurrence(6).unwrap().coeffs(), big(&D6));
        let d1 = CoeffSeq::new(1, vec![]).unwrap();
        assert!(matches!(
            coeff_recurrence_step(&d1),
            Err(Error::OrderTooSmall { n: 1, .. })
        ));
    }

    #[test]
    fn invariants_rejected() {
        assert!(CoeffSeq::new(3, big(&[1, 2])).is_err(), "sum is not D_3");
        assert!(CoeffSeq::new(3, big(&[1])).is_err(), "wrong length");
        assert!(CoeffSeq::new(3, big(&[2, 0])).is_err());
        assert!(CoeffSeq::new(1, big(&[1])).is_err());
        assert!(CoeffSeq::new(0, vec![]).is_err());
    }

    #[test]
    fn method_tags_parse() {
        for m in MethodTag::ALL {
            assert_eq!(m.as_str().parse::<MethodTag>().unwrap(), m);
        }
        assert!("naive".parse::<MethodTag>().is_err());
    }

    #[test]
    fn peak_of_d6() {
        let d6 = compute_recursive(6).unwrap();
        assert_eq!(d6.peak(), Some((8, &BigUint::from(38u32))));
        assert_eq!(d6.coeff(0), None);
        assert_eq!(d6.coeff(15), Some(&BigUint::one()));
        assert_eq!(d6.coeff(16), None);
    }
}
