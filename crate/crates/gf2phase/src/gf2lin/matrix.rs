//! Dense bit matrices over GF(2) with word-level row reduction.

use std::fmt;

use super::bits::{words_for, BitVec};
use super::subspace::GF2Subspace;

/// A dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl GF2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        GF2Matrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVec]) -> Self {
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let cols = rows[0].len();
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            m.set_row(i, r);
        }
        m
    }

    /// Build from nested 0/1 integers (row-major), as used by the file formats.
    pub fn from_ints(rows: usize, cols: usize, bits: &[Vec<u8>]) -> Self {
        assert_eq!(bits.len(), rows);
        let mut m = Self::zero(rows, cols);
        for (i, r) in bits.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b != 0);
            }
        }
        m
    }

    pub fn to_ints(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_ints()).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.wpr + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.wpr + j / 64];
        if b {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec::from_words(
            self.cols,
            self.data[i * self.wpr..(i + 1) * self.wpr].to_vec(),
        )
    }

    pub fn set_row(&mut self, i: usize, v: &BitVec) {
        debug_assert_eq!(v.len(), self.cols);
        self.data[i * self.wpr..(i + 1) * self.wpr].copy_from_slice(v.words());
    }

    #[inline]
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * self.wpr);
            (&lo[src * self.wpr..src * self.wpr + self.wpr], &mut hi[..self.wpr])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * self.wpr);
            (&hi[..self.wpr], &mut lo[dst * self.wpr..dst * self.wpr + self.wpr])
        };
        for (d, s) in b.iter_mut().zip(a) {
            *d ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.wpr {
            self.data.swap(a * self.wpr + w, b * self.wpr + w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Reduced row-echelon form over GF(2), in place. Returns the rank.
    /// Deterministic: pivots are chosen top-down, columns left-to-right,
    /// and every off-pivot entry in a pivot column is cleared.
    pub fn rref_in_place(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            for r in 0..self.rows {
                if r != rank && self.get(r, col) {
                    self.xor_row_into(rank, r);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Reduced row-echelon form, returning the reduced matrix and its rank.
    pub fn rref(&self) -> (GF2Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Matrix product over GF(2): `self * rhs`.
    pub fn mul(&self, rhs: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = GF2Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; rhs.wpr];
            for k in 0..self.cols {
                if self.get(i, k) {
                    let src = &rhs.data[k * rhs.wpr..(k + 1) * rhs.wpr];
                    for (a, s) in acc.iter_mut().zip(src) {
                        *a ^= s;
                    }
                }
            }
            out.data[i * out.wpr..(i + 1) * out.wpr].copy_from_slice(&acc);
        }
        out
    }

    /// Apply to a column vector: `(self * v)_i = <row_i, v>`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = BitVec::zero(self.rows);
        for i in 0..self.rows {
            if self.row(i).dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut out = GF2Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    /// Null space `{x : self * x = 0}` as a canonical subspace of F2^cols.
    pub fn kernel(&self) -> GF2Subspace {
        let (r, rank) = self.rref();
        let mut pivot_cols = Vec::with_capacity(rank);
        for row in 0..rank {
            if let Some(c) = r.row(row).first_set() {
                pivot_cols.push(c);
            }
        }
        let mut basis = Vec::new();
        let mut pi = 0usize;
        for c in 0..self.cols {
            if pi < pivot_cols.len() && pivot_cols[pi] == c {
                pi += 1;
                continue;
            }
            // free column c: x_c = 1, pivot entries read off the reduced rows
            let mut v = BitVec::unit(self.cols, c);
            for (row, &pc) in pivot_cols.iter().enumerate() {
                if r.get(row, c) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        GF2Subspace::from_rows(self.cols, basis)
    }

    /// Flatten row-major into a single bit vector of length rows*cols.
    pub fn vectorize(&self) -> BitVec {
        let mut v = BitVec::zero(self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    v.set(i * self.cols + j, true);
                }
            }
        }
        v
    }

    /// Inverse of `vectorize` for a square or rectangular shape.
    pub fn from_vectorized(rows: usize, cols: usize, v: &BitVec) -> GF2Matrix {
        assert_eq!(v.len(), rows * cols);
        let mut m = GF2Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if v.get(i * cols + j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Solve `self * x = b`; returns a particular solution if one exists.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows);
        // augmented reduction
        let mut aug = GF2Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            if b.get(i) {
                aug.set(i, self.cols, true);
            }
        }
        let rank = aug.rref_in_place();
        let mut x = BitVec::zero(self.cols);
        for row in 0..rank {
            let lead = aug.row(row).first_set().unwrap();
            if lead == self.cols {
                return None; // inconsistent row 0 .. 0 | 1
            }
            if aug.get(row, self.cols) {
                x.set(lead, true);
            }
        }
        Some(x)
    }

    /// Inverse of a square invertible matrix, if it exists.
    pub fn inverse(&self) -> Option<GF2Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = GF2Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, n + i, true);
        }
        let rank = aug.rref_in_place();
        if rank != n {
            return None;
        }
        let mut inv = GF2Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                if aug.get(i, n + j) {
                    inv.set(i, j, true);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
