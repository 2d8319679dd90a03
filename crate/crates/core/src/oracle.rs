//! Ground truth for `d_n(q)` straight from its definition: the sum of
//! `q^maj(π)` over all derangements `π` of `{1..n}`.
//!
//! Enumeration is a backtracking search that never places a fixed point, with
//! the major index carried incrementally. The tree is split by the first
//! entry and the subtrees are counted in parallel.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qpoly::CoeffSeq;

/// Default upper bound on `n` for [`oracle_dn`]. `D_10` is about 1.3 million.
pub const DEFAULT_ORACLE_CAP: u32 = 10;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let len = one_line.len();
        let mut seen = vec![false; len];
        for &v in &one_line {
            let slot = (v as usize)
                .checked_sub(1)
                .and_then(|i| seen.get_mut(i))
                .ok_or_else(|| Error::InvalidPermutation {
                    len,
                    reason: format!("entry {v} out of range"),
                })?;
            if *slot {
                return Err(Error::InvalidPermutation {
                    len,
                    reason: format!("entry {v} repeated"),
                });
            }
            *slot = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff `π(i) != i` for every `i`.
    pub fn is_derangement(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize != i + 1)
    }

    /// Sum of the (1-based) descent positions `i` with `π(i) > π(i+1)`.
    pub fn major_index(&self) -> usize {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .sum()
    }
}

/// `d_n(q)` by enumeration, refusing `n` above [`DEFAULT_ORACLE_CAP`].
pub fn oracle_dn(n: u32) -> Result<CoeffSeq> {
    oracle_dn_with_cap(n, DEFAULT_ORACLE_CAP)
}

/// `d_n(q)` by enumeration with an explicit cap on `n`.
pub fn oracle_dn_with_cap(n: u32, cap: u32) -> Result<CoeffSeq> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    let counts = maj_counts(n as usize);
    let coeffs = match counts.iter().rposition(|&c| c != 0) {
        // Derangements have at least one descent, so index 0 stays empty.
        Some(top) => counts[1..=top].iter().map(|&c| BigUint::from(c)).collect(),
        None => Vec::new(),
    };
    CoeffSeq::new(n, coeffs)
}

/// `counts[m]` = number of derangements of `{1..n}` with major index `m`.
fn maj_counts(n: usize) -> Vec<u64> {
    let max_maj = n * n.saturating_sub(1) / 2;
    (2..=n)
        .into_par_iter()
        .map(|first| {
            let mut search = Search {
                n,
                used: vec![false; n + 1],
                counts: vec![0; max_maj + 1],
            };
            search.used[first] = true;
            search.extend(2, first, 0);
            search.counts
        })
        .reduce(
            || vec![0; max_maj + 1],
            |mut acc, part| {
                acc.iter_mut().zip(part).for_each(|(a, p)| *a += p);
                acc
            },
        )
}

struct Search {
    n: usize,
    used: Vec<bool>,
    counts: Vec<u64>,
}

impl Search {
    /// Fills position `pos` (1-based) given the previous entry and the major
    /// index accumulated so far.
    fn extend(&mut self, pos: usize, prev: usize, maj: usize) {
        if pos > self.n {
            self.counts[maj] += 1;
            return;
        }
        for v in 1..=self.n {
            if v == pos || self.used[v] {
                continue;
            }
            let maj = if prev > v { maj + pos - 1 } else { maj };
            self.used[v] = true;
            self.extend(pos + 1, v, maj);
            self.used[v] = false;
        }
    }
}
