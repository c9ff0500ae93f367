//! Invariant subspaces of a filtered representation, and the sub- and
//! quotient representations they induce.
//!
//! Every submodule is a sum of cyclic submodules, so closing the set of
//! cyclic submodules of all nonzero vectors under sum (and intersection)
//! yields the complete lattice. Exhaustive, hence capped by module
//! dimension and a subspace budget.

use std::collections::BTreeSet;

use super::{FilteredRep, FiltrepError};
use crate::budget::Budget;
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};

/// The smallest action-invariant subspace containing `v`.
pub fn cyclic_submodule(rep: &FilteredRep, v: &BitVec) -> GF2Subspace {
    let m = rep.mdim;
    let mut span = GF2Subspace::from_rows(m, vec![v.clone()]);
    loop {
        let mut rows = span.basis().to_vec();
        for w in span.basis() {
            for a in &rep.action {
                rows.push(a.mul_vec(w));
            }
        }
        let next = GF2Subspace::from_rows(m, rows);
        if next.dim() == span.dim() {
            return next;
        }
        span = next;
    }
}

/// All action-invariant subspaces, in canonical order. Generated by closing
/// the cyclic submodules of every nonzero vector under sum and intersection.
pub fn subrep_lattice(
    rep: &FilteredRep,
    budget: &Budget,
) -> Result<Vec<GF2Subspace>, FiltrepError> {
    let m = rep.mdim;
    if m > 8 {
        return Err(FiltrepError::ModuleTooLarge { mdim: m });
    }
    let mut set: BTreeSet<GF2Subspace> = BTreeSet::new();
    set.insert(GF2Subspace::zero(m));
    set.insert(GF2Subspace::full(m));
    for bits in 1u64..(1 << m) {
        let mut v = BitVec::zero(m);
        for i in 0..m {
            if (bits >> i) & 1 == 1 {
                v.set(i, true);
            }
        }
        set.insert(cyclic_submodule(rep, &v));
        if set.len() > budget.lattice_cap {
            return Err(FiltrepError::LatticeBudget {
                cap: budget.lattice_cap,
            });
        }
    }
    // close under sum and intersection
    let mut worklist: Vec<GF2Subspace> = set.iter().cloned().collect();
    while let Some(s) = worklist.pop() {
        let snapshot: Vec<GF2Subspace> = set.iter().cloned().collect();
        for t in snapshot {
            for candidate in [s.sum(&t), s.intersect(&t)] {
                if set.insert(candidate.clone()) {
                    if set.len() > budget.lattice_cap {
                        return Err(FiltrepError::LatticeBudget {
                            cap: budget.lattice_cap,
                        });
                    }
                    worklist.push(candidate);
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Restrict a representation to an invariant subspace, in the coordinates
/// of its canonical basis. The module filtration restricts layerwise.
pub fn sub_rep(rep: &FilteredRep, invariant: &GF2Subspace) -> FilteredRep {
    let c = invariant.dim();
    let action = rep
        .action
        .iter()
        .map(|a| {
            let mut out = GF2Matrix::zero(c, c);
            for (j, b) in invariant.basis().iter().enumerate() {
                let image = a.mul_vec(b);
                let coords = invariant
                    .coords_of(&image)
                    .expect("subspace is not action-invariant");
                for i in coords.iter_ones() {
                    out.set(i, j, true);
                }
            }
            out
        })
        .collect();
    let vfilt = rep
        .vfilt
        .iter()
        .map(|g| {
            let inter = g.intersect(invariant);
            GF2Subspace::from_rows(
                c,
                inter
                    .basis()
                    .iter()
                    .map(|v| invariant.coords_of(v).unwrap())
                    .collect(),
            )
        })
        .collect();
    FilteredRep {
        phase_dim: rep.phase_dim,
        mdim: c,
        action,
        vfilt,
        level: rep.level,
    }
}

/// The quotient representation by an invariant subspace, in the canonical
/// lift coordinates. The module filtration maps layerwise.
pub fn quotient_rep(rep: &FilteredRep, invariant: &GF2Subspace) -> FilteredRep {
    let lifts = invariant.complement_lifts();
    let c = lifts.len();
    let action = rep
        .action
        .iter()
        .map(|a| {
            let mut out = GF2Matrix::zero(c, c);
            for (j, l) in lifts.iter().enumerate() {
                let coords = invariant.quotient_coords(&a.mul_vec(l));
                for i in coords.iter_ones() {
                    out.set(i, j, true);
                }
            }
            out
        })
        .collect();
    let vfilt = rep
        .vfilt
        .iter()
        .map(|g| {
            GF2Subspace::from_rows(
                c,
                g.basis()
                    .iter()
                    .map(|v| invariant.quotient_coords(v))
                    .collect(),
            )
        })
        .collect();
    FilteredRep {
        phase_dim: rep.phase_dim,
        mdim: c,
        action,
        vfilt,
        level: rep.level,
    }
}
