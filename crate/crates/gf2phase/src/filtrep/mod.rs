//! Filtered representations of phases.
//!
//! A filtered representation is a GF(2) module with one action matrix per
//! phase basis element and a descending module filtration
//! `V = G[0] ⊇ G[1] ⊇ … ⊇ G[N+1] = 0`. Compatibility requires an element of
//! defect degree `k` to shift the module filtration by at least `k`; the
//! *terminating* level additionally forces the boundary ideal to act as
//! zero, which is what every reconstruction statement needs. The *weak*
//! level keeps compatibility only, and exists to show that compatibility
//! alone does not collapse the boundary.

mod enumerate;
mod lattice;
mod phi;
mod testing;

pub use enumerate::{enumerate_reps, rep_counts_by_mdim, restrict_rep_along_quotient};
pub use lattice::{cyclic_submodule, quotient_rep, sub_rep, subrep_lattice};
pub use phi::{image_algebra, phi_assemble, ImageAlgebra, PhiMap};
pub use testing::{testing_object_search, MinimalityCertificate, SubrepCheck, TestingObject};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};
use crate::phase::{boundary_quotient, CheckResult, Phase, ValidationReport};

/// Admissibility level of a filtered representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RepLevel {
    /// Compatible with the defect filtration.
    Weak,
    /// Compatible, and the boundary ideal acts as zero.
    Terminating,
}

/// A filtered representation of a phase.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FilteredRep {
    /// Dimension of the phase being acted on.
    pub phase_dim: usize,
    /// Module dimension.
    pub mdim: usize,
    /// One mdim×mdim matrix per phase basis element, extended linearly.
    pub action: Vec<GF2Matrix>,
    /// Descending module filtration, full space first, zero last.
    pub vfilt: Vec<GF2Subspace>,
    pub level: RepLevel,
}

impl FilteredRep {
    /// The action of an arbitrary element, by linear extension.
    pub fn action_of(&self, x: &BitVec) -> GF2Matrix {
        assert_eq!(x.len(), self.phase_dim, "element dimension mismatch");
        let mut acc = GF2Matrix::zero(self.mdim, self.mdim);
        for i in x.iter_ones() {
            acc = acc.add(&self.action[i]);
        }
        acc
    }

    /// The index N with `G[N+1] = 0`.
    pub fn top_index(&self) -> usize {
        self.vfilt.len().saturating_sub(2)
    }

    /// Module layer `G[i]`, indices past the chain meaning zero.
    pub fn module_layer(&self, i: usize) -> GF2Subspace {
        if i < self.vfilt.len() {
            self.vfilt[i].clone()
        } else {
            GF2Subspace::zero(self.mdim)
        }
    }
}

/// Validate a filtered representation against its phase: shapes, the unital
/// homomorphism property, filtration compatibility per (defect layer, module
/// layer) pair, and the terminating rule when claimed. Counterexamples are
/// cited in the report.
pub fn rep_validate(p: &Phase, r: &FilteredRep) -> ValidationReport {
    let mut checks = Vec::new();
    let n = p.dim();
    let m = r.mdim;

    // shapes
    let mut shape_witness = None;
    if r.phase_dim != n {
        shape_witness = Some(format!("rep is over dimension {}, phase has {n}", r.phase_dim));
    } else if r.action.len() != n {
        shape_witness = Some(format!("{} action matrices for {n} basis elements", r.action.len()));
    } else if r.action.iter().any(|a| a.rows() != m || a.cols() != m) {
        shape_witness = Some("action matrix with wrong shape".to_string());
    } else if r.vfilt.is_empty() {
        shape_witness = Some("empty module filtration".to_string());
    } else if r.vfilt.iter().any(|g| g.ambient_dim() != m) {
        shape_witness = Some("module layer with wrong ambient dimension".to_string());
    } else if !r.vfilt[0].is_full() {
        shape_witness = Some("G[0] is not the full module".to_string());
    } else if !r.vfilt.last().unwrap().is_zero() {
        shape_witness = Some("module filtration does not terminate at zero".to_string());
    } else {
        for i in 0..r.vfilt.len() - 1 {
            if !r.vfilt[i].contains_subspace(&r.vfilt[i + 1]) {
                shape_witness = Some(format!("G[{}] not contained in G[{}]", i + 1, i));
                break;
            }
        }
    }
    let shapes_ok = shape_witness.is_none();
    checks.push(match shape_witness {
        None => CheckResult {
            name: "shape".to_string(),
            passed: true,
            witness: None,
        },
        Some(w) => CheckResult {
            name: "shape".to_string(),
            passed: false,
            witness: Some(w),
        },
    });
    if !shapes_ok {
        return ValidationReport { checks };
    }

    // unital algebra map
    let mut hom_witness = None;
    if r.action_of(p.unit()) != GF2Matrix::identity(m) {
        hom_witness = Some("action(unit) is not the identity".to_string());
    } else {
        'hom: for i in 0..n {
            for j in 0..n {
                let lhs = r.action[i].mul(&r.action[j]);
                let rhs = r.action_of(p.mul_basis(i, j));
                if lhs != rhs {
                    hom_witness = Some(format!("basis pair ({i},{j})"));
                    break 'hom;
                }
            }
        }
    }
    checks.push(CheckResult {
        name: "unital_hom".to_string(),
        passed: hom_witness.is_none(),
        witness: hom_witness,
    });

    // filtration compatibility: for each defect layer k and each basis
    // vector x of F[k], action(x) G[i] ⊆ G[i+k]
    let mut compat_witness = None;
    let last = r.vfilt.len() - 1;
    'compat: for k in 0..p.filtration().len() {
        for x in p.layer(k).basis() {
            let a = r.action_of(x);
            for i in 0..r.vfilt.len() {
                let target = &r.vfilt[(i + k).min(last)];
                for v in r.vfilt[i].basis() {
                    if !target.contains(&a.mul_vec(v)) {
                        compat_witness = Some(format!(
                            "defect layer {k}, module layer {i}: action shifts too little"
                        ));
                        break 'compat;
                    }
                }
            }
        }
    }
    checks.push(CheckResult {
        name: "w_compatibility".to_string(),
        passed: compat_witness.is_none(),
        witness: compat_witness,
    });

    // terminating rule: boundary ideal acts as zero
    if r.level == RepLevel::Terminating {
        let mut t_witness = None;
        for (bi, x) in p.boundary_ideal().basis().iter().enumerate() {
            if !r.action_of(x).is_zero() {
                t_witness = Some(format!("boundary basis vector {bi} acts nonzero"));
                break;
            }
        }
        checks.push(CheckResult {
            name: "t_admissibility".to_string(),
            passed: t_witness.is_none(),
            witness: t_witness,
        });
    }

    ValidationReport { checks }
}

/// The canonical terminating representation: the left regular representation
/// of the boundary quotient, precomposed with the projection. Faithful
/// exactly modulo the boundary ideal.
pub fn regular_rep(p: &Phase) -> FilteredRep {
    let (q, proj) = boundary_quotient(p);
    let m = q.dim();
    let action = (0..p.dim())
        .map(|i| {
            let image = proj.apply(&BitVec::unit(p.dim(), i));
            q.table().left_mul_matrix(&image)
        })
        .collect();
    FilteredRep {
        phase_dim: p.dim(),
        mdim: m,
        action,
        vfilt: vec![GF2Subspace::full(m), GF2Subspace::zero(m)],
        level: RepLevel::Terminating,
    }
}

/// The honest left regular representation of the phase on itself, filtered
/// by the defect chain. Weak-level unless the phase is strong: boundary
/// elements act nilpotently but not by zero.
pub fn weak_regular_rep(p: &Phase) -> FilteredRep {
    let n = p.dim();
    let action = (0..n)
        .map(|i| p.table().left_mul_matrix(&BitVec::unit(n, i)))
        .collect();
    FilteredRep {
        phase_dim: n,
        mdim: n,
        action,
        vfilt: p.filtration().to_vec(),
        level: if p.is_strong() {
            RepLevel::Terminating
        } else {
            RepLevel::Weak
        },
    }
}

/// Errors raised by representation-level operations.
#[derive(Debug, Error)]
pub enum FiltrepError {
    #[error("representation {index} failed validation at check '{check}'")]
    RepInvalid { index: usize, check: String },
    #[error("representation {index} is not terminating-level")]
    RepNotTerminating { index: usize },
    #[error("image closure violated on product of image basis ({i},{j})")]
    ImageClosure { i: usize, j: usize },
    #[error("enumeration refused: projected bound {bound} exceeds budget {budget}")]
    EnumerationRefused { bound: u128, budget: u64 },
    #[error("lattice budget exceeded: more than {cap} invariant subspaces")]
    LatticeBudget { cap: usize },
    #[error("module dimension {mdim} too large for exhaustive lattice search")]
    ModuleTooLarge { mdim: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{heisenberg_phase, HeisenbergSpec};
    use crate::phase::dual_numbers;

    #[test]
    fn regular_rep_of_dual_numbers_kills_eps() {
        let d = dual_numbers();
        let r = regular_rep(&d);
        assert_eq!(r.mdim, 1);
        assert!(r.action[1].is_zero());
        assert!(rep_validate(&d, &r).is_valid());
    }

    #[test]
    fn regular_rep_of_flagship_has_mdim_8() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let r = regular_rep(&p);
        assert_eq!(r.mdim, 8);
        let report = rep_validate(&p, &r);
        assert!(report.is_valid(), "{}", report.summary());
    }

    #[test]
    fn weak_regular_rep_validates() {
        let d = dual_numbers();
        let r = weak_regular_rep(&d);
        assert_eq!(r.level, RepLevel::Weak);
        let report = rep_validate(&d, &r);
        assert!(report.is_valid(), "{}", report.summary());
        // eps acts nonzero but nilpotently
        assert!(!r.action[1].is_zero());
        assert!(r.action[1].mul(&r.action[1]).is_zero());
    }

    #[test]
    fn mislabeled_terminating_rep_is_caught() {
        let d = dual_numbers();
        let mut r = weak_regular_rep(&d);
        r.level = RepLevel::Terminating;
        let report = rep_validate(&d, &r);
        assert!(!report.is_valid());
        assert_eq!(report.first_failure().unwrap().name, "t_admissibility");
    }

    #[test]
    fn trivial_rep_of_strong_phase_passes() {
        // everything acts by its augmentation scalar on a 1-dim module
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 1));
        let one = GF2Matrix::identity(1);
        let rep = FilteredRep {
            phase_dim: p.dim(),
            mdim: 1,
            action: (0..p.dim()).map(|_| one.clone()).collect(),
            vfilt: vec![GF2Subspace::full(1), GF2Subspace::zero(1)],
            level: RepLevel::Terminating,
        };
        let report = rep_validate(&p, &rep);
        assert!(report.is_valid(), "{}", report.summary());
    }
}
