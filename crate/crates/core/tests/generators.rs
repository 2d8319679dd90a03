mod common;

use common::{big, D8, D9};
use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;
use qderange_core::{
    coeff_recurrence_step, compute_coeff_recurrence, compute_recursive, compute_wachs,
    degree_bound, derangement_count, generate, mul_by_qint, oracle_dn, CoeffSeq, MethodTag,
};

/// Schoolbook product with `1 + q + ... + q^{n-1}`.
fn naive_qint_product(coeffs: &[u64], n: usize) -> Vec<BigUint> {
    if coeffs.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::default(); coeffs.len() + n - 1];
    for (i, &c) in coeffs.iter().enumerate() {
        for j in 0..n {
            out[i + j] += c;
        }
    }
    out
}

proptest! {
    #[test]
    fn window_kernel_matches_schoolbook(
        coeffs in prop::collection::vec(0u64..1_000_000_000_000, 0..60),
        n in 1usize..40,
    ) {
        prop_assert_eq!(mul_by_qint(&big(&coeffs), n), naive_qint_product(&coeffs, n));
    }
}

#[test]
fn paper_tables() {
    assert_eq!(compute_recursive(8).unwrap().coeffs(), big(&D8));
    assert_eq!(compute_recursive(9).unwrap().coeffs(), big(&D9));
    assert_eq!(compute_wachs(9).unwrap().coeffs(), big(&D9));
    assert_eq!(oracle_dn(8).unwrap().coeffs(), big(&D8));
}

#[test]
fn d5_window_sums() {
    let d5 = compute_recursive(5).unwrap();
    assert_eq!(d5.coeffs(), big(&[1, 3, 5, 7, 8, 8, 6, 4, 2]));
    let d6 = compute_recursive(6).unwrap();
    let mut product = mul_by_qint(d5.coeffs(), 6);
    product.push(BigUint::one());
    assert_eq!(product, d6.coeffs());
}

#[test]
fn recurrence_boundaries_from_d8() {
    let d8 = CoeffSeq::new(8, big(&D8)).unwrap();
    let d9 = coeff_recurrence_step(&d8).unwrap();
    assert_eq!(d9.coeff(2), Some(&BigUint::from(7u32)));
    assert_eq!(d9.coeff(35), Some(&BigUint::from(4u32)));
    assert_eq!(d9.coeffs(), big(&D9));
}

#[test]
fn methods_agree_beyond_the_oracle() {
    for n in 1..=40 {
        let rec = compute_recursive(n).unwrap();
        assert_eq!(compute_wachs(n).unwrap(), rec, "wachs, n = {n}");
        assert_eq!(
            compute_coeff_recurrence(n).unwrap(),
            rec,
            "coeff-recurrence, n = {n}"
        );
    }
}

#[test]
fn generate_dispatches_and_respects_the_cap() {
    for method in MethodTag::ALL {
        assert_eq!(
            generate(7, method, 10).unwrap(),
            compute_recursive(7).unwrap(),
            "{method}"
        );
    }
    assert!(generate(9, MethodTag::Oracle, 8).is_err());
}

#[test]
fn leading_behaviour_and_evaluation_at_one() {
    for n in 2..=60u32 {
        let d = compute_recursive(n).unwrap();
        assert_eq!(d.degree(), degree_bound(n).unwrap());
        assert_eq!(d.value_at_one(), derangement_count(n));
        assert!(d.coeff(1).unwrap().is_one());
        if n % 2 == 0 {
            assert!(d.coeff(d.degree()).unwrap().is_one(), "n = {n}");
        }
        // D_n = n D_{n-1} + (-1)^n, with the sign moved to whichever side keeps it unsigned.
        let (mut lhs, mut rhs) = (derangement_count(n), &derangement_count(n - 1) * n);
        if n % 2 == 0 {
            rhs += 1u32;
        } else {
            lhs += 1u32;
        }
        assert_eq!(lhs, rhs, "n = {n}");
    }
}
