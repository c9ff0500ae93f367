//! Search and enumeration budgets.
//!
//! Searches that can be expensive (isomorphism, islands, representation
//! enumeration, submodule lattices) are budgeted in candidate steps and
//! answer three-valued: exhausting a budget yields an explicit "unknown" or
//! a refusal, never a silent fallback.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Budget {
    /// Candidate steps for isomorphism search.
    pub iso_steps: u64,
    /// Candidate steps for island and subgroup searches.
    pub search_steps: u64,
    /// Candidate steps for representation enumeration; enumeration refuses
    /// up front when the projected search bound exceeds this.
    pub enum_steps: u64,
    /// Maximum number of invariant subspaces a lattice computation may keep.
    pub lattice_cap: usize,
    /// Largest module dimension probed by representation enumeration.
    pub mdim_max: usize,
    /// Pairwise products allowed while closing an operator algebra.
    pub closure_products: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            iso_steps: 1_000_000,
            search_steps: 1_000_000,
            enum_steps: 10_000_000,
            lattice_cap: 10_000,
            mdim_max: 2,
            closure_products: 1_000_000,
        }
    }
}

impl Budget {
    /// An exhausted budget: every budgeted search reports unknown/refused.
    pub fn zero() -> Self {
        Budget {
            iso_steps: 0,
            search_steps: 0,
            enum_steps: 0,
            lattice_cap: 0,
            mdim_max: 0,
            closure_products: 0,
        }
    }
}
