//! Pairing scheme for the two ratio chains.
//!
//! The paired part of a sequence is `A(1..=m)`, where `m = β_n` for odd `n`
//! and `m = β_n - 1` for even `n` (the trailing `A(β_n) = 1` is left out).
//! Index `i` is paired with `partner(i) = m + 1 - i`. Chain A runs over
//! `A(i) / A(partner(i))` and chain B over `A(partner(i)) / A(i+1)`.

use crate::error::{Error, Result};
use crate::qpoly::degree_bound;

/// Smallest order covered by the ratio-monotone theorem.
pub const MIN_THEOREM_ORDER: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RatioLayout {
    order: Option<u32>,
    len: usize,
    paired_len: usize,
    r: usize,
}

impl RatioLayout {
    /// Layout of `d_n(q)` for `n >= 6`, with midpoint `r = n(n-1)/4` when
    /// `n ≡ 0, 1 (mod 4)` and `r = (n(n-1)-2)/4` when `n ≡ 2, 3 (mod 4)`.
    pub fn for_order(n: u32) -> Result<Self> {
        if n < MIN_THEOREM_ORDER {
            return Err(Error::OrderTooSmall {
                n,
                min: MIN_THEOREM_ORDER,
                what: "the ratio-monotone layout",
            });
        }
        let len = degree_bound(n)?;
        let paired_len = if n.is_multiple_of(2) { len - 1 } else { len };
        let product = n as usize * (n as usize - 1);
        let r = match n % 4 {
            0 | 1 => product / 4,
            _ => (product - 2) / 4,
        };
        let layout = RatioLayout {
            order: Some(n),
            len,
            paired_len,
            r,
        };
        debug_assert_eq!(layout, RatioLayout::midpoint_for(paired_len, len, Some(n)));
        Ok(layout)
    }

    /// Layout pairing every entry of a sequence of length `len >= 2`, as in
    /// the ratio-monotone definition for arbitrary positive sequences.
    pub fn for_length(len: usize) -> Result<Self> {
        if len < 2 {
            return Err(Error::InvalidSequence {
                n: 0,
                reason: format!("ratio chains need at least two terms, got {len}"),
            });
        }
        Ok(RatioLayout::midpoint_for(len, len, None))
    }

    fn midpoint_for(paired_len: usize, len: usize, order: Option<u32>) -> Self {
        let r = if paired_len % 2 == 1 {
            paired_len.div_ceil(2)
        } else {
            paired_len / 2
        };
        RatioLayout {
            order,
            len,
            paired_len,
            r,
        }
    }

    pub fn order(&self) -> Option<u32> {
        self.order
    }

    /// `n mod 4`, for layouts built from an order.
    pub fn residue(&self) -> Option<u32> {
        self.order.map(|n| n % 4)
    }

    /// Full sequence length (`β_n` for an order).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn paired_len(&self) -> usize {
        self.paired_len
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// True iff the last entry takes part in no pair (even `n`).
    pub fn excludes_last(&self) -> bool {
        self.paired_len < self.len
    }

    pub fn partner_offset(&self) -> usize {
        self.paired_len + 1
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner_offset() - i
    }

    /// Last index of chain A: `r - 1` when `partner(r) = r`, otherwise `r`.
    pub fn chain_a_end(&self) -> usize {
        if self.partner(self.r) == self.r {
            self.r - 1
        } else {
            self.r
        }
    }

    /// Last index of chain B, always `r - 1`.
    pub fn chain_b_end(&self) -> usize {
        self.r - 1
    }

    /// Index where both chains close, i.e. where the maximum must sit:
    /// `r` when `partner(r) = r`, `r + 1` when `partner(r) = r + 1`.
    pub fn peak(&self) -> usize {
        if self.partner(self.r) == self.r {
            self.r
        } else {
            self.r + 1
        }
    }

    /// `(numerator, denominator)` indices of chain A.
    pub fn chain_a(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.chain_a_end()).map(|i| (i, self.partner(i)))
    }

    /// `(numerator, denominator)` indices of chain B.
    pub fn chain_b(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.chain_b_end()).map(|i| (self.partner(i), i + 1))
    }

    /// Indices of the paired part in spiral order:
    /// `1, partner(1), 2, partner(2), ...`, ending at the peak.
    pub fn spiral_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.paired_len);
        for i in 1..=self.chain_a_end() {
            order.push(i);
            order.push(self.partner(i));
        }
        if self.paired_len % 2 == 1 {
            order.push(self.r);
        }
        order
    }
}
