//! Bit-packed vectors over GF(2).
//!
//! A `BitVec` is a fixed-length vector with one bit per coordinate, packed
//! into `u64` words. Addition is word-level XOR; that is what makes the
//! brute-force oracles elsewhere in the crate affordable.

use std::cmp::Ordering;
use std::fmt;

/// Number of `u64` words needed to hold `len` bits.
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

/// A fixed-length vector over GF(2), packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// The zero vector of the given length.
    pub fn zero(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Build from a slice of 0/1 integers, as used by the file formats.
    pub fn from_ints(bits: &[u8]) -> Self {
        let mut v = Self::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b != 0);
        }
        v
    }

    pub fn to_ints(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let w = &mut self.words[i / 64];
        if b {
            *w |= 1 << (i % 64);
        } else {
            *w &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the first (lowest-index) set bit.
    pub fn first_set(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Parity of the AND with `other` (the standard GF(2) dot product).
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Concatenate two vectors.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut v = BitVec::zero(self.len + other.len);
        for i in self.iter_ones() {
            v.set(i, true);
        }
        for i in other.iter_ones() {
            v.set(self.len + i, true);
        }
        v
    }

    /// The sub-vector of the coordinates in `range`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        debug_assert!(start + len <= self.len);
        let mut v = BitVec::zero(len);
        for i in 0..len {
            if self.get(start + i) {
                v.set(i, true);
            }
        }
        v
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        BitVec { len, words }
    }
}

/// Left-to-right lexicographic order on coordinates: the first differing
/// coordinate decides, a 0 there sorting before a 1. Used for canonical
/// tie-breaks so search results are order-independent.
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                let diff = a ^ b;
                let first = diff.trailing_zeros();
                let a_bit = (a >> first) & 1;
                return a_bit.cmp(&((b >> first) & 1));
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut v = BitVec::zero(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert!(v.get(0) && v.get(64) && v.get(129));
        assert!(!v.get(1));
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.first_set(), Some(0));
    }

    #[test]
    fn xor_is_addition() {
        let a = BitVec::from_ints(&[1, 0, 1, 1]);
        let b = BitVec::from_ints(&[1, 1, 0, 1]);
        let mut c = a.clone();
        c.xor_assign(&b);
        assert_eq!(c.to_ints(), vec![0, 1, 1, 0]);
    }

    #[test]
    fn lex_order_reads_left_to_right() {
        let a = BitVec::from_ints(&[0, 1, 1]);
        let b = BitVec::from_ints(&[1, 0, 1]);
        let c = BitVec::from_ints(&[1, 1, 0]);
        assert!(a < b && b < c);
    }

    #[test]
    fn dot_parity() {
        let a = BitVec::from_ints(&[1, 1, 0, 1]);
        let b = BitVec::from_ints(&[1, 1, 1, 0]);
        assert!(!a.dot(&b));
        let c = BitVec::from_ints(&[1, 0, 0, 0]);
        assert!(a.dot(&c));
    }
}
