//! The rings F2[u]/(u^k).
//!
//! Elements are polynomials in `u` truncated at degree `k`, with GF(2)
//! coefficients packed into a `u32`. For k = 2 this is the smallest local
//! ring with a nonzero nilpotent; `frobenius_lambda` is the top-coefficient
//! projection, which induces a nondegenerate pairing `(a, b) -> lambda(ab)`.

use std::fmt;

/// An element of F2[u]/(u^k). Bit `i` of `bits` is the coefficient of u^i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NilRingElem {
    k: u8,
    bits: u32,
}

impl NilRingElem {
    /// Build from a coefficient mask; bits at degree >= k are truncated.
    pub fn new(k: u8, bits: u32) -> Self {
        assert!(k >= 1, "nilpotency order must be at least 1");
        assert!(k <= 32, "nilpotency order out of range");
        let mask = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        NilRingElem {
            k,
            bits: bits & mask,
        }
    }

    pub fn zero(k: u8) -> Self {
        Self::new(k, 0)
    }

    pub fn one(k: u8) -> Self {
        Self::new(k, 1)
    }

    /// The generator u. Zero when k = 1, since u = 0 in F2[u]/(u).
    pub fn u(k: u8) -> Self {
        if k == 1 {
            Self::zero(k)
        } else {
            Self::new(k, 2)
        }
    }

    pub fn order(&self) -> u8 {
        self.k
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coefficient of u^i.
    pub fn coeff(&self, i: u8) -> bool {
        i < self.k && (self.bits >> i) & 1 == 1
    }

    pub fn add(&self, other: &NilRingElem) -> NilRingElem {
        assert_eq!(self.k, other.k, "ring mismatch");
        NilRingElem {
            k: self.k,
            bits: self.bits ^ other.bits,
        }
    }

    /// Polynomial product truncated at u^k, coefficients mod 2.
    pub fn mul(&self, other: &NilRingElem) -> NilRingElem {
        assert_eq!(self.k, other.k, "ring mismatch");
        let mut acc = 0u64;
        let mut b = other.bits as u64;
        let a = self.bits as u64;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let mask = if self.k == 32 {
            u32::MAX as u64
        } else {
            (1u64 << self.k) - 1
        };
        NilRingElem {
            k: self.k,
            bits: (acc & mask) as u32,
        }
    }

    /// The Frobenius functional: coefficient of u^(k-1). For k = 2 this is
    /// the u-coefficient; for k = 1 it is the identity on F2.
    pub fn frobenius_lambda(&self) -> bool {
        self.coeff(self.k - 1)
    }
}

impl fmt::Debug for NilRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NilRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "0");
        }
        let mut first = true;
        for i in 0..self.k {
            if (self.bits >> i) & 1 == 1 {
                if !first {
                    write!(f, "+")?;
                }
                match i {
                    0 => write!(f, "1")?,
                    1 => write!(f, "u")?,
                    _ => write!(f, "u^{i}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

/// All elements of F2[u]/(u^k), in coefficient-bit order.
pub fn all_ring_elems(k: u8) -> impl Iterator<Item = NilRingElem> {
    (0u32..(1 << k)).map(move |b| NilRingElem::new(k, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_squares_to_zero_at_k2() {
        let u = NilRingElem::u(2);
        assert!(u.mul(&u).is_zero());
    }

    #[test]
    fn one_is_identity() {
        for k in 1..=4 {
            let one = NilRingElem::one(k);
            for x in all_ring_elems(k) {
                assert_eq!(one.mul(&x), x);
                assert_eq!(x.mul(&one), x);
            }
        }
    }

    #[test]
    fn one_plus_u_squares_to_one_at_k2() {
        // (1+u)^2 = 1 + 2u + u^2 = 1
        let x = NilRingElem::new(2, 0b11);
        assert_eq!(x.mul(&x), NilRingElem::one(2));
    }

    #[test]
    fn lambda_examples() {
        assert!(NilRingElem::u(2).frobenius_lambda());
        assert!(!NilRingElem::zero(2).frobenius_lambda());
        assert!(NilRingElem::new(2, 0b11).frobenius_lambda());
        // k = 1: identity on F2
        assert!(NilRingElem::one(1).frobenius_lambda());
        assert!(!NilRingElem::zero(1).frobenius_lambda());
    }

    #[test]
    fn u_to_the_k_vanishes_exactly() {
        for k in 1..=4u8 {
            let u = NilRingElem::u(k);
            let mut p = NilRingElem::one(k);
            for step in 1..=k {
                p = p.mul(&u);
                if step < k && k > 1 {
                    assert!(!p.is_zero(), "u^{step} should survive at k={k}");
                }
            }
            assert!(p.is_zero(), "u^{k} should vanish at k={k}");
        }
    }

    #[test]
    fn ring_laws_exhaustive_small_k() {
        for k in 1..=4u8 {
            let elems: Vec<_> = all_ring_elems(k).collect();
            for a in &elems {
                for b in &elems {
                    assert_eq!(a.mul(b), b.mul(a), "commutativity at k={k}");
                    for c in &elems {
                        assert_eq!(
                            a.mul(b).mul(c),
                            a.mul(&b.mul(c)),
                            "associativity at k={k}"
                        );
                        // distributivity over XOR-addition
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_pairing_nondegenerate() {
        // for every a != 0 there is b with lambda(ab) = 1; exhaustive k <= 4
        for k in 1..=4u8 {
            for a in all_ring_elems(k) {
                if a.is_zero() {
                    continue;
                }
                assert!(
                    all_ring_elems(k).any(|b| a.mul(&b).frobenius_lambda()),
                    "degenerate direction {a} at k={k}"
                );
            }
        }
    }

    #[test]
    fn lambda_is_linear() {
        for k in 1..=4u8 {
            for a in all_ring_elems(k) {
                for b in all_ring_elems(k) {
                    assert_eq!(
                        a.add(&b).frobenius_lambda(),
                        a.frobenius_lambda() ^ b.frobenius_lambda()
                    );
                }
            }
        }
    }
}
