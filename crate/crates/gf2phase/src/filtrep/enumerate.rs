//! Exhaustive enumeration of terminating representations.
//!
//! Terminating reps factor through the boundary quotient, so the search
//! space is the set of unital algebra maps from the quotient into m×m
//! matrices over GF(2). The backtracking assigns an image to each quotient
//! basis element in order; an element that is a product of two earlier
//! basis elements has a forced image, so for a monomial quotient only the
//! group generators branch. Relations are checked as soon as all of their
//! participants are assigned, and every result is lifted back to the phase
//! along the projection.

use super::{FilteredRep, FiltrepError, RepLevel};
use crate::budget::Budget;
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};
use crate::phase::{boundary_quotient, Phase, PhaseMap};

/// All m×m matrices over GF(2), in numeric order of their bit encoding.
fn all_matrices(m: usize) -> Vec<GF2Matrix> {
    let bits = m * m;
    assert!(bits <= 20, "matrix enumeration out of range");
    (0u64..(1 << bits))
        .map(|code| {
            let mut mat = GF2Matrix::zero(m, m);
            for b in 0..bits {
                if (code >> b) & 1 == 1 {
                    mat.set(b / m, b % m, true);
                }
            }
            mat
        })
        .collect()
}

struct Enumerator<'a> {
    q: &'a Phase,
    m: usize,
    /// For each basis index, a pair (j, k) of earlier indices with
    /// e_j e_k = e_i, when one exists.
    forced: Vec<Option<(usize, usize)>>,
    unit_index: Option<usize>,
    candidates: Vec<GF2Matrix>,
    budget: u64,
    steps: u64,
    out: Vec<Vec<GF2Matrix>>,
}

impl<'a> Enumerator<'a> {
    fn relations_hold(&self, images: &[Option<GF2Matrix>], newest: usize) -> bool {
        for j in 0..=newest {
            for k in 0..=newest {
                if images[j].is_none() || images[k].is_none() {
                    continue;
                }
                let prod = self.q.mul_basis(j, k);
                if prod.iter_ones().any(|t| t > newest || images[t].is_none()) {
                    continue;
                }
                // only re-check relations that involve the newest assignment
                if j != newest && k != newest && !prod.get(newest) {
                    continue;
                }
                let lhs = images[j].as_ref().unwrap().mul(images[k].as_ref().unwrap());
                let mut rhs = GF2Matrix::zero(self.m, self.m);
                for t in prod.iter_ones() {
                    rhs = rhs.add(images[t].as_ref().unwrap());
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        // unit constraint, once its whole support is assigned
        let unit = self.q.unit();
        if unit.get(newest) || unit.iter_ones().all(|t| t <= newest) {
            if unit.iter_ones().all(|t| images[t].is_some()) {
                let mut acc = GF2Matrix::zero(self.m, self.m);
                for t in unit.iter_ones() {
                    acc = acc.add(images[t].as_ref().unwrap());
                }
                if acc != GF2Matrix::identity(self.m) {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, images: &mut Vec<Option<GF2Matrix>>, i: usize) -> Result<(), FiltrepError> {
        let n = self.q.dim();
        if i == n {
            self.out.push(images.iter().map(|x| x.clone().unwrap()).collect());
            return Ok(());
        }
        // forced image: the unit basis vector maps to the identity, and a
        // product of two earlier elements maps to the product of images
        let forced_value: Option<GF2Matrix> = if self.unit_index == Some(i) {
            Some(GF2Matrix::identity(self.m))
        } else {
            self.forced[i].map(|(j, k)| {
                images[j]
                    .as_ref()
                    .unwrap()
                    .mul(images[k].as_ref().unwrap())
            })
        };
        match forced_value {
            Some(mat) => {
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(FiltrepError::EnumerationRefused {
                        bound: self.steps as u128,
                        budget: self.budget,
                    });
                }
                images[i] = Some(mat);
                if self.relations_hold(images, i) {
                    self.search(images, i + 1)?;
                }
                images[i] = None;
            }
            None => {
                let candidates = self.candidates.clone();
                for mat in candidates {
                    self.steps += 1;
                    if self.steps > self.budget {
                        return Err(FiltrepError::EnumerationRefused {
                            bound: self.steps as u128,
                            budget: self.budget,
                        });
                    }
                    images[i] = Some(mat);
                    if self.relations_hold(images, i) {
                        self.search(images, i + 1)?;
                    }
                    images[i] = None;
                }
            }
        }
        Ok(())
    }
}

/// Lift a quotient-level action to the phase along the projection.
pub fn restrict_rep_along_quotient(
    p: &Phase,
    proj: &PhaseMap,
    quotient_action: &[GF2Matrix],
    m: usize,
) -> FilteredRep {
    let action = (0..p.dim())
        .map(|j| {
            let image = proj.apply(&BitVec::unit(p.dim(), j));
            let mut acc = GF2Matrix::zero(m, m);
            for t in image.iter_ones() {
                acc = acc.add(&quotient_action[t]);
            }
            acc
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

/// Exhaustively enumerate the terminating representations of a phase with
/// module dimension from 1 to `mdim_max`, in deterministic order. Refuses
/// with the step bound when the budget is exceeded, or up front when the
/// free-level bound is absurd.
pub fn enumerate_reps(
    p: &Phase,
    mdim_max: usize,
    budget: &Budget,
) -> Result<Vec<FilteredRep>, FiltrepError> {
    let (q, proj) = boundary_quotient(p);
    let n = q.dim();

    // forced products: e_j e_k = e_i with j, k < i
    let mut forced: Vec<Option<(usize, usize)>> = vec![None; n];
    for i in 0..n {
        'find: for j in 0..i {
            for k in 0..i {
                let prod = q.mul_basis(j, k);
                if prod.count_ones() == 1 && prod.first_set() == Some(i) {
                    forced[i] = Some((j, k));
                    break 'find;
                }
            }
        }
    }
    let unit_index = if q.unit().count_ones() == 1 {
        q.unit().first_set()
    } else {
        None
    };
    let free_levels = (0..n)
        .filter(|&i| forced[i].is_none() && unit_index != Some(i))
        .count();

    let mut reps = Vec::new();
    for m in 1..=mdim_max {
        let per_level = 1u128 << (m * m);
        let bound = per_level.saturating_pow(free_levels as u32);
        if bound > (1u128 << 40) {
            return Err(FiltrepError::EnumerationRefused {
                bound,
                budget: budget.enum_steps,
            });
        }
        let mut enumerator = Enumerator {
            q: &q,
            m,
            forced: forced.clone(),
            unit_index,
            candidates: all_matrices(m),
            budget: budget.enum_steps,
            steps: 0,
            out: Vec::new(),
        };
        let mut images = vec![None; n];
        enumerator.search(&mut images, 0)?;
        for assignment in &enumerator.out {
            reps.push(restrict_rep_along_quotient(p, &proj, assignment, m));
        }
    }
    Ok(reps)
}

/// Group a rep list into counts per module dimension `1..=mdim_max`.
pub fn rep_counts_by_mdim(reps: &[FilteredRep], mdim_max: usize) -> Vec<usize> {
    (1..=mdim_max)
        .map(|m| reps.iter().filter(|r| r.mdim == m).count())
        .collect()
}
