#![allow(dead_code)]

use num_bigint::BigUint;
use qderange_core::verify::RatioLayout;
use rand::Rng;

/// Random strictly ratio-monotone sequence of length `2 <= len <= 40`, built from
/// the middle outward. Each new value is drawn from the upper part of the
/// interval allowed by the already-fixed chain terms.
pub fn random_ratio_monotone<R: Rng>(rng: &mut R, len: usize) -> Vec<BigUint> {
    assert!(len <= 40, "values decay too fast for u128 beyond length 40");
    let layout = RatioLayout::for_length(len).unwrap();
    'retry: loop {
        let mut a = vec![0u128; len + 1];
        let r = layout.r();
        let mut start = r - 1;
        if layout.partner(r) == r {
            a[r] = rng.gen_range(CENTER_LO..CENTER_HI);
        } else {
            a[r + 1] = rng.gen_range(CENTER_LO..CENTER_HI);
            // A(r)/A(r+1) < 1
            match below(rng, a[r + 1], 1) {
                Some(v) => a[r] = v,
                None => continue 'retry,
            }
            start = r - 1;
        }
        for i in (1..=start).rev() {
            let p = layout.partner(i);
            // A(p(i))/A(i+1) < A(p(i+1))/A(i+2), or < 1 at the top of chain B.
            let (num, den) = if i == layout.chain_b_end() {
                (a[i + 1], 1)
            } else {
                (a[i + 1] * a[layout.partner(i + 1)], a[i + 2])
            };
            match below(rng, num, den) {
                Some(v) => a[p] = v,
                None => continue 'retry,
            }
            // A(i)/A(p(i)) < A(i+1)/A(p(i+1)), or < 1 at the top of chain A.
            let (num, den) = if i == layout.chain_a_end() {
                (a[p], 1)
            } else {
                (a[p] * a[i + 1], a[layout.partner(i + 1)])
            };
            match below(rng, num, den) {
                Some(v) => a[i] = v,
                None => continue 'retry,
            }
        }
        return a[1..].iter().map(|&v| BigUint::from(v)).collect();
    }
}

const CENTER_LO: u128 = 100_000_000_000_000_000;
const CENTER_HI: u128 = 1_000_000_000_000_000_000;

/// Uniform integer in `[0.9 x', x']` where `x'` is the largest integer
/// strictly below `num/den`; `None` if that is below 1.
fn below<R: Rng>(rng: &mut R, num: u128, den: u128) -> Option<u128> {
    let hi = (num - 1) / den;
    if hi < 1 {
        return None;
    }
    let lo = (hi / 10 * 9).max(1);
    Some(rng.gen_range(lo..=hi))
}

/// Random positive pairs `(a, b)` of length `len` with `b_i/a_i` strictly
/// increasing, entries in `1..=max`.
pub fn random_lemma1_premise<R: Rng>(rng: &mut R, len: usize, max: u64) -> (Vec<u64>, Vec<u64>) {
    loop {
        let mut pairs: Vec<(u64, u64)> = (0..len)
            .map(|_| (rng.gen_range(1..=max), rng.gen_range(1..=max)))
            .collect();
        // b1/a1 vs b2/a2 as b1*a2 vs b2*a1
        pairs.sort_by(|x, y| (x.1 as u128 * y.0 as u128).cmp(&(y.1 as u128 * x.0 as u128)));
        let strict = pairs
            .windows(2)
            .all(|w| (w[0].1 as u128 * w[1].0 as u128) < (w[1].1 as u128 * w[0].0 as u128));
        if strict {
            return pairs.into_iter().unzip();
        }
    }
}

pub fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

pub const D8: [u64; 28] = [
    1, 6, 20, 50, 104, 190, 313, 473, 663, 868, 1068, 1240, 1362, 1417, 1398, 1307, 1157, 968, 763,
    564, 388, 247, 143, 74, 33, 12, 3, 1,
];

pub const D9: [u64; 35] = [
    1, 7, 27, 77, 181, 371, 684, 1157, 1820, 2687, 3749, 4969, 6281, 7594, 8802, 9796, 10480,
    10785, 10680, 10176, 9324, 8209, 6935, 5611, 4337, 3192, 2227, 1465, 901, 513, 266, 123, 49,
    16, 4,
];
