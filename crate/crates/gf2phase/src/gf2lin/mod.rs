//! Bit-exact linear algebra over GF(2) and the coefficient rings F2[u]/(u^k).

mod bits;
mod matrix;
mod nilring;
mod subspace;

pub use bits::BitVec;
pub use matrix::GF2Matrix;
pub use nilring::{all_ring_elems, NilRingElem};
pub use subspace::{subspace_mul, GF2Subspace};
