//! The two auxiliary statements behind the ratio-monotone theorem: closed
//! forms for boundary coefficients of `d_m` (even `m`) and the sum-ratio
//! inequalities used to carry the chains from `d_m` to `d_{m+1}`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::report::{Comparison, Property, PropertyReport};

/// Closed forms at both ends of `d_m` for even `m >= 6`, as
/// `(label, index, value)`:
///
/// ```text
/// A(β-1) = m/2 - 1             A(2) = m - 2
/// A(3)   = m(m-3)/2            A(β-2) = m²/4 - m/2
/// A(4)   = (m-2)(m+2)(m-3)/6   A(β-3) = m³/12 - m²/8 - m/12 - 1
/// ```
///
/// together with `A(1) = A(β) = 1`.
pub fn lemma2_closed_forms(m: u32, beta: usize) -> Vec<(&'static str, usize, BigUint)> {
    assert!(
        m.is_multiple_of(2) && m >= 6,
        "closed forms are stated for even m >= 6"
    );
    let m = BigUint::from(m);
    let exact = |num: BigUint, den: u32| {
        let den = BigUint::from(den);
        assert!((&num % &den).is_zero(), "closed form must be integral");
        num / den
    };
    let one = BigUint::one();
    let m2 = &m * &m;
    let m3 = &m2 * &m;
    vec![
        ("A(β-1)", beta - 1, &m / 2u32 - 1u32),
        ("A(2)", 2, &m - 2u32),
        ("A(3)", 3, exact(&m * (&m - 3u32), 2)),
        ("A(β-2)", beta - 2, exact(&m2 - 2u32 * &m, 4)),
        ("A(4)", 4, exact((&m - 2u32) * (&m + 2u32) * (&m - 3u32), 6)),
        // m³/12 - m²/8 - m/12 - 1 = (2m³ - 3m² - 2m - 24) / 24
        (
            "A(β-3)",
            beta - 3,
            exact(2u32 * m3 - 3u32 * m2 - 2u32 * &m - 24u32, 24),
        ),
        ("A(1)", 1, one.clone()),
        ("A(β)", beta, one),
    ]
}

/// Compares the closed forms against `values = A(1..=β)`.
pub fn lemma2(values: &[BigUint], m: u32) -> PropertyReport {
    let comparisons = lemma2_closed_forms(m, values.len())
        .into_iter()
        .map(|(label, k, expected)| Comparison::equal(label, k, values[k - 1].clone(), expected))
        .collect();
    PropertyReport::from_comparisons(Property::Lemma2, comparisons)
}

/// Result of [`check_lemma1`]: either the conclusions were checked, or the
/// inputs do not satisfy the premise and the lemma says nothing about them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma1Outcome {
    Checked(PropertyReport),
    /// `b_i/a_i < b_{i+1}/a_{i+1}` fails at this 1-based `i`.
    PremiseViolated {
        index: usize,
    },
}

/// Invalid input to [`check_lemma1`] (as opposed to a failed premise).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Lemma1InputError {
    #[error("sequences have different lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("need at least two terms, got {0}")]
    TooShort(usize),
    #[error("entry {0} is not positive")]
    NotPositive(usize),
}

fn cross_less(label: &'static str, x: &BigRational, y: &BigRational) -> Comparison {
    // Both sides positive, so the cross-products are natural numbers.
    let to_nat = |v: BigInt| v.to_biguint().expect("positive cross-product");
    Comparison::less(
        label,
        0,
        to_nat(x.numer() * y.denom()),
        to_nat(y.numer() * x.denom()),
    )
}

/// Given positive `a_1..a_{k+1}`, `b_1..b_{k+1}` with `b_i/a_i` strictly
/// increasing, checks
///
/// ```text
/// (ineq1)  Σ_{1..k} b / (Σ_{1..k} a + 1)  <  Σ_{1..k+1} b / (Σ_{1..k+1} a + 1)
/// (ineq2)  Σ_{1..k} b /  Σ_{1..k} a       <  Σ_{1..k+1} b /  Σ_{1..k+1} a
/// (ineq3)  Σ_{1..k} b /  Σ_{1..k} a       <  Σ_{2..k+1} b /  Σ_{2..k+1} a
/// ```
pub fn check_lemma1(
    a: &[BigRational],
    b: &[BigRational],
) -> Result<Lemma1Outcome, Lemma1InputError> {
    if a.len() != b.len() {
        return Err(Lemma1InputError::LengthMismatch(a.len(), b.len()));
    }
    if a.len() < 2 {
        return Err(Lemma1InputError::TooShort(a.len()));
    }
    if let Some(i) = a.iter().chain(b).position(|x| !x.is_positive()) {
        return Err(Lemma1InputError::NotPositive(i % a.len() + 1));
    }
    let ratios: Vec<BigRational> = b.iter().zip(a).map(|(b, a)| b / a).collect();
    if let Some(i) = ratios.windows(2).position(|w| w[0] >= w[1]) {
        return Ok(Lemma1Outcome::PremiseViolated { index: i + 1 });
    }

    let k = a.len() - 1;
    let sum = |v: &[BigRational]| v.iter().fold(BigRational::zero(), |acc, x| acc + x);
    let one = BigRational::one();
    let (sa_k, sb_k) = (sum(&a[..k]), sum(&b[..k]));
    let (sa_all, sb_all) = (sum(a), sum(b));
    let (sa_tail, sb_tail) = (sum(&a[1..]), sum(&b[1..]));

    let comparisons = vec![
        cross_less(
            "ineq1",
            &(&sb_k / (&sa_k + &one)),
            &(&sb_all / (&sa_all + &one)),
        ),
        cross_less("ineq2", &(&sb_k / &sa_k), &(&sb_all / &sa_all)),
        cross_less("ineq3", &(&sb_k / &sa_k), &(&sb_tail / &sa_tail)),
    ];
    Ok(Lemma1Outcome::Checked(PropertyReport::from_comparisons(
        Property::Lemma1,
        comparisons,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    }

    fn checked(a: &[i64], b: &[i64]) -> PropertyReport {
        match check_lemma1(&rats(a), &rats(b)).unwrap() {
            Lemma1Outcome::Checked(r) => r,
            other => panic!("unexpected {other:?}"),
        }
    }

    fn pair(c: &Comparison) -> (u64, u64) {
        ((&c.lhs).try_into().unwrap(), (&c.rhs).try_into().unwrap())
    }

    #[test]
    fn two_term_example() {
        // ineq1: 1/2 < 4/4 (= 1/1), ineq2: 1/1 < 4/3, ineq3: 1/1 < 3/2
        let r = checked(&[1, 2], &[1, 3]);
        assert!(r.pass);
        let got: Vec<_> = r.comparisons.iter().map(pair).collect();
        assert_eq!(got, [(1, 2), (3, 4), (2, 3)]);
    }

    #[test]
    fn three_term_example() {
        assert!(checked(&[1, 1, 1], &[1, 2, 3]).pass);
    }

    #[test]
    fn unequal_weights_example() {
        // ineq2: 1/2 < 4/3
        let r = checked(&[2, 1], &[1, 3]);
        assert!(r.pass);
        assert_eq!(pair(&r.comparisons[1]), (3, 8));
    }

    #[test]
    fn premise_and_input_errors() {
        assert_eq!(
            check_lemma1(&rats(&[1, 1]), &rats(&[2, 2])).unwrap(),
            Lemma1Outcome::PremiseViolated { index: 1 }
        );
        assert_eq!(
            check_lemma1(&rats(&[1, 1, 1]), &rats(&[1, 3, 2])).unwrap(),
            Lemma1Outcome::PremiseViolated { index: 2 }
        );
        assert_eq!(
            check_lemma1(&rats(&[1]), &rats(&[1, 2])),
            Err(Lemma1InputError::LengthMismatch(1, 2))
        );
        assert_eq!(
            check_lemma1(&rats(&[1]), &rats(&[1])),
            Err(Lemma1InputError::TooShort(1))
        );
        assert_eq!(
            check_lemma1(&rats(&[1, 0]), &rats(&[1, 2])),
            Err(Lemma1InputError::NotPositive(2))
        );
    }

    #[test]
    fn closed_forms_for_small_orders() {
        let values = |m, beta| -> Vec<u64> {
            lemma2_closed_forms(m, beta)
                .into_iter()
                .take(6)
                .map(|(_, _, v)| (&v).try_into().unwrap())
                .collect()
        };
        assert_eq!(values(6, 15), [2, 4, 9, 6, 16, 12]);
        assert_eq!(values(8, 28), [3, 6, 20, 12, 50, 33]);
        assert_eq!(values(10, 45), [4, 8, 35, 20, 112, 69]);
    }
}
