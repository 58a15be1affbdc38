use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset `I` of `{±1, ..., ±n}` in which no index occurs with both signs.
///
/// Stored as two disjoint bit masks; bit `k - 1` stands for the index `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SignedSubset {
    pos: u32,
    neg: u32,
}

impl SignedSubset {
    pub const EMPTY: SignedSubset = SignedSubset { pos: 0, neg: 0 };

    pub fn from_masks(pos: u32, neg: u32) -> Result<Self> {
        if pos & neg != 0 {
            return Err(Error::InvalidInput(format!(
                "signed subset masks overlap: +{pos:#b} -{neg:#b}"
            )));
        }
        Ok(SignedSubset { pos, neg })
    }

    /// Builds from signed indices, e.g. `[1, -2]` for `{1, -2}`.
    pub fn from_elements(elements: &[i32]) -> Result<Self> {
        let (mut pos, mut neg) = (0u32, 0u32);
        for &e in elements {
            if e == 0 || e.unsigned_abs() > 32 {
                return Err(Error::InvalidInput(format!("bad signed index {e}")));
            }
            let bit = 1u32 << (e.unsigned_abs() - 1);
            if e > 0 {
                pos |= bit;
            } else {
                neg |= bit;
            }
        }
        Self::from_masks(pos, neg)
    }

    /// Positive part `I⁺`.
    pub fn pos_mask(self) -> u32 {
        self.pos
    }

    /// Negative part `I⁻` (as absolute values).
    pub fn neg_mask(self) -> u32 {
        self.neg
    }

    /// Underlying support `I^± = I⁺ ∪ I⁻`.
    pub fn support(self) -> u32 {
        self.pos | self.neg
    }

    pub fn len(self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.support() == 0
    }

    pub fn contains(self, e: i32) -> bool {
        if e == 0 {
            return false;
        }
        let bit = 1u32 << (e.unsigned_abs() - 1);
        if e > 0 {
            self.pos & bit != 0
        } else {
            self.neg & bit != 0
        }
    }

    pub fn is_subset(self, other: SignedSubset) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    pub fn is_proper_subset(self, other: SignedSubset) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersection(self, other: SignedSubset) -> SignedSubset {
        SignedSubset {
            pos: self.pos & other.pos,
            neg: self.neg & other.neg,
        }
    }

    /// `I^{-x}`: reverse the sign of `±x` if present.
    pub fn flip(self, x: usize) -> SignedSubset {
        let bit = 1u32 << (x - 1);
        let p = self.pos & bit;
        let q = self.neg & bit;
        SignedSubset {
            pos: (self.pos & !bit) | q,
            neg: (self.neg & !bit) | p,
        }
    }

    /// Exchange the roles of `±a` and `±b`.
    pub fn swap(self, a: usize, b: usize) -> SignedSubset {
        fn swap_bits(mask: u32, a: usize, b: usize) -> u32 {
            let (ba, bb) = (1u32 << (a - 1), 1u32 << (b - 1));
            let mut out = mask & !(ba | bb);
            if mask & ba != 0 {
                out |= bb;
            }
            if mask & bb != 0 {
                out |= ba;
            }
            out
        }
        SignedSubset {
            pos: swap_bits(self.pos, a, b),
            neg: swap_bits(self.neg, a, b),
        }
    }

    /// Base-3 code: digit `k - 1` is 0 (absent), 1 (`+k`) or 2 (`-k`).
    pub fn code(self) -> u64 {
        let mut code = 0u64;
        let mut place = 1u64;
        let top = 32 - self.support().leading_zeros();
        for k in 0..top {
            let bit = 1u32 << k;
            if self.pos & bit != 0 {
                code += place;
            } else if self.neg & bit != 0 {
                code += 2 * place;
            }
            place *= 3;
        }
        code
    }

    pub fn from_code(mut code: u64) -> Self {
        let (mut pos, mut neg) = (0u32, 0u32);
        let mut k = 0;
        while code > 0 {
            match code % 3 {
                1 => pos |= 1 << k,
                2 => neg |= 1 << k,
                _ => {}
            }
            code /= 3;
            k += 1;
        }
        SignedSubset { pos, neg }
    }

    /// Signed elements ordered by absolute value.
    pub fn elements(self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.len());
        for k in 0..32 {
            let bit = 1u32 << k;
            if self.pos & bit != 0 {
                out.push(k + 1);
            } else if self.neg & bit != 0 {
                out.push(-(k + 1));
            }
        }
        out
    }

    /// All signed subsets of `[±n]`, including the empty one, in code order.
    pub fn all(n: usize) -> impl Iterator<Item = SignedSubset> {
        (0..3u64.pow(n as u32)).map(SignedSubset::from_code)
    }
}

impl Ord for SignedSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for SignedSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn overlapping_masks_rejected() {
        assert!(SignedSubset::from_elements(&[1, -1]).is_err());
        assert!(SignedSubset::from_masks(0b11, 0b10).is_err());
    }

    #[test]
    fn flip_and_swap() {
        let i = SignedSubset::from_elements(&[1, -3]).unwrap();
        assert_eq!(i.flip(3), SignedSubset::from_elements(&[1, 3]).unwrap());
        assert_eq!(i.flip(2), i);
        assert_eq!(i.swap(1, 3), SignedSubset::from_elements(&[-1, 3]).unwrap());
        assert_eq!(i.to_string(), "{1,-3}");
    }

    #[test]
    fn code_layout() {
        assert_eq!(SignedSubset::from_elements(&[1]).unwrap().code(), 1);
        assert_eq!(SignedSubset::from_elements(&[-1]).unwrap().code(), 2);
        assert_eq!(SignedSubset::from_elements(&[2]).unwrap().code(), 3);
        assert_eq!(SignedSubset::from_elements(&[-1, 2]).unwrap().code(), 5);
        assert_eq!(SignedSubset::all(3).count(), 27);
    }

    proptest! {
        #[test]
        fn code_round_trips(code in 0u64..3u64.pow(12)) {
            let s = SignedSubset::from_code(code);
            prop_assert_eq!(s.code(), code);
            prop_assert_eq!(s.pos_mask() & s.neg_mask(), 0);
        }
    }
}
