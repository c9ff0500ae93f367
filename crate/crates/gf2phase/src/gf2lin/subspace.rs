//! Canonical subspaces of F2^n.
//!
//! A subspace is stored as its reduced row-echelon basis with zero rows
//! dropped, so two subspaces are equal exactly when their stored bases are
//! bit-equal. Every ideal and filtration layer in the crate is carried in
//! this form.

use super::bits::BitVec;
use super::matrix::GF2Matrix;

/// A subspace of F2^ambient in canonical (RREF) form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GF2Subspace {
    ambient: usize,
    basis: Vec<BitVec>,
}

impl GF2Subspace {
    /// The zero subspace of F2^n.
    pub fn zero(ambient: usize) -> Self {
        GF2Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    /// All of F2^n.
    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| BitVec::unit(ambient, i)).collect();
        GF2Subspace { ambient, basis }
    }

    /// Canonical span of the given vectors.
    pub fn from_rows(ambient: usize, rows: Vec<BitVec>) -> Self {
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        for r in &rows {
            assert_eq!(r.len(), ambient, "ambient dimension mismatch");
        }
        let m = GF2Matrix::from_rows(&rows);
        let (r, rank) = m.rref();
        let basis = (0..rank).map(|i| r.row(i)).collect();
        GF2Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    /// Reduce `v` against the basis; the result is zero iff `v` lies in the
    /// subspace, and in general has zeros in every pivot column.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut r = v.clone();
        for b in &self.basis {
            let lead = b.first_set().expect("canonical basis has no zero rows");
            if r.get(lead) {
                r.xor_assign(b);
            }
        }
        r
    }

    /// Membership test: true iff `v` reduces to zero against the basis.
    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// True iff every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &GF2Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` is a member.
    /// Because the basis is in RREF, the coordinate on basis row `i` is
    /// just the entry of `v` in that row's pivot column.
    pub fn coords_of(&self, v: &BitVec) -> Option<BitVec> {
        if !self.contains(v) {
            return None;
        }
        let mut c = BitVec::zero(self.dim());
        for (i, b) in self.basis.iter().enumerate() {
            let lead = b.first_set().unwrap();
            if v.get(lead) {
                c.set(i, true);
            }
        }
        Some(c)
    }

    /// The member with the given coordinates in the canonical basis.
    pub fn from_coords(&self, c: &BitVec) -> BitVec {
        assert_eq!(c.len(), self.dim());
        let mut v = BitVec::zero(self.ambient);
        for i in c.iter_ones() {
            v.xor_assign(&self.basis[i]);
        }
        v
    }

    /// Pivot columns of the canonical basis, ascending.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|b| b.first_set().expect("no zero rows in canonical basis"))
            .collect()
    }

    /// Standard basis vectors at the non-pivot columns. These are canonical
    /// lifts of a basis of the quotient F2^ambient / self.
    pub fn complement_lifts(&self) -> Vec<BitVec> {
        let pivots = self.pivot_cols();
        let mut pi = 0;
        let mut lifts = Vec::with_capacity(self.ambient - self.dim());
        for c in 0..self.ambient {
            if pi < pivots.len() && pivots[pi] == c {
                pi += 1;
            } else {
                lifts.push(BitVec::unit(self.ambient, c));
            }
        }
        lifts
    }

    /// Express `v` in the quotient modulo `self`, in the coordinates of
    /// `complement_lifts()`: reduce, then read off the non-pivot columns.
    pub fn quotient_coords(&self, v: &BitVec) -> BitVec {
        let r = self.reduce(v);
        let pivots = self.pivot_cols();
        let mut pi = 0;
        let mut out = BitVec::zero(self.ambient - self.dim());
        let mut k = 0;
        for c in 0..self.ambient {
            if pi < pivots.len() && pivots[pi] == c {
                pi += 1;
            } else {
                if r.get(c) {
                    out.set(k, true);
                }
                k += 1;
            }
        }
        out
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &GF2Subspace) -> GF2Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        GF2Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection via the Zassenhaus double-width trick.
    pub fn intersect(&self, other: &GF2Subspace) -> GF2Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return GF2Subspace::zero(n);
        }
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for b in &self.basis {
            rows.push(b.concat(b));
        }
        for b in &other.basis {
            rows.push(b.concat(&BitVec::zero(n)));
        }
        let m = GF2Matrix::from_rows(&rows);
        let (r, rank) = m.rref();
        let mut inter = Vec::new();
        for i in 0..rank {
            let row = r.row(i);
            if row.slice(0, n).is_zero() {
                let right = row.slice(n, n);
                if !right.is_zero() {
                    inter.push(right);
                }
            }
        }
        GF2Subspace::from_rows(n, inter)
    }
}

/// Canonical span of `{ x * y : x in basis(s), y in basis(t) }` under the
/// given bilinear product. By bilinearity this is the span of all products
/// of members.
pub fn subspace_mul<F>(s: &GF2Subspace, t: &GF2Subspace, mul: F) -> GF2Subspace
where
    F: Fn(&BitVec, &BitVec) -> BitVec,
{
    assert_eq!(
        s.ambient_dim(),
        t.ambient_dim(),
        "ambient dimension mismatch"
    );
    let mut rows = Vec::with_capacity(s.dim() * t.dim());
    for x in s.basis() {
        for y in t.basis() {
            rows.push(mul(x, y));
        }
    }
    GF2Subspace::from_rows(s.ambient_dim(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_contains_everything() {
        let s = GF2Subspace::full(4);
        assert!(s.contains(&BitVec::from_ints(&[1, 0, 1, 1])));
        assert!(s.is_full());
    }

    #[test]
    fn zero_contains_only_zero() {
        let s = GF2Subspace::zero(3);
        assert!(s.contains(&BitVec::zero(3)));
        assert!(!s.contains(&BitVec::from_ints(&[0, 1, 0])));
    }

    #[test]
    fn span_membership() {
        let s = GF2Subspace::from_rows(3, vec![BitVec::from_ints(&[1, 1, 0])]);
        assert!(s.contains(&BitVec::from_ints(&[1, 1, 0])));
        assert!(!s.contains(&BitVec::from_ints(&[1, 0, 0])));
    }

    #[test]
    fn canonical_equality() {
        // two spanning sets of the same plane give bit-equal bases
        let a = GF2Subspace::from_rows(
            3,
            vec![BitVec::from_ints(&[1, 1, 0]), BitVec::from_ints(&[0, 1, 1])],
        );
        let b = GF2Subspace::from_rows(
            3,
            vec![BitVec::from_ints(&[1, 0, 1]), BitVec::from_ints(&[1, 1, 0])],
        );
        assert_eq!(a, b);
    }

    #[test]
    fn dim_formula() {
        let a = GF2Subspace::from_rows(
            4,
            vec![BitVec::from_ints(&[1, 0, 0, 0]), BitVec::from_ints(&[0, 1, 0, 0])],
        );
        let b = GF2Subspace::from_rows(
            4,
            vec![BitVec::from_ints(&[0, 1, 0, 0]), BitVec::from_ints(&[0, 0, 1, 0])],
        );
        let s = a.sum(&b);
        let i = a.intersect(&b);
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&BitVec::from_ints(&[0, 1, 0, 0])));
    }

    #[test]
    fn quotient_coords_read_nonpivots() {
        let s = GF2Subspace::from_rows(3, vec![BitVec::from_ints(&[1, 1, 0])]);
        // pivots = {0}; lifts are e1, e2
        let lifts = s.complement_lifts();
        assert_eq!(lifts.len(), 2);
        let q = s.quotient_coords(&BitVec::from_ints(&[1, 0, 1]));
        // (1,0,1) reduces to (0,1,1); non-pivot columns 1,2 give (1,1)
        assert_eq!(q.to_ints(), vec![1, 1]);
    }
}
