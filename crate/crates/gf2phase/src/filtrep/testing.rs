//! Testing objects: representations that separate phase elements exactly
//! modulo the boundary ideal (T1), minimal in the sense that no proper
//! filtered subrepresentation still does (T2).
//!
//! The regular representation of the boundary quotient always satisfies
//! T1, so minimizing inside its subquotients is a complete strategy. The
//! minimality certificate only needs the maximal proper subrepresentations:
//! the detection kernel can only shrink as a subrepresentation grows, so if
//! every maximal one fails T1, every proper one does.

use serde::{Deserialize, Serialize};

use super::{phi_assemble, quotient_rep, regular_rep, sub_rep, subrep_lattice, FilteredRep};
use super::FiltrepError;
use crate::budget::Budget;
use crate::phase::Phase;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubrepCheck {
    pub dim: usize,
    pub kernel_dim: usize,
    pub fails_t1: bool,
}

/// Evidence that every maximal proper subrepresentation of the testing
/// object fails to separate modulo the boundary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MinimalityCertificate {
    pub boundary_dim: usize,
    pub maximal_proper_subreps: Vec<SubrepCheck>,
}

impl MinimalityCertificate {
    pub fn complete(&self) -> bool {
        self.maximal_proper_subreps.iter().all(|c| c.fails_t1)
    }
}

/// A testing object search result. `certified` is false when the budget ran
/// out before the minimality certificate was complete.
#[derive(Clone, Debug)]
pub struct TestingObject {
    pub rep: FilteredRep,
    pub kernel_dim: usize,
    pub certified: bool,
    pub certificate: Option<MinimalityCertificate>,
}

fn satisfies_t1(p: &Phase, rep: &FilteredRep) -> Result<(bool, usize), FiltrepError> {
    let phi = phi_assemble(p, std::slice::from_ref(rep))?;
    let boundary = p.boundary_ideal();
    Ok((phi.kernel == boundary, phi.kernel.dim()))
}

/// Search the subrepresentations and quotient representations of the
/// regular representation for a minimal T1 object, then certify T2 by
/// checking every maximal proper subrepresentation. Deterministic.
pub fn testing_object_search(p: &Phase, budget: &Budget) -> Result<TestingObject, FiltrepError> {
    let base = regular_rep(p);
    let (base_t1, base_kernel) = satisfies_t1(p, &base)?;
    assert!(
        base_t1,
        "regular representation must separate modulo the boundary"
    );

    let uncertified = |rep: FilteredRep, kernel_dim: usize| TestingObject {
        rep,
        kernel_dim,
        certified: false,
        certificate: None,
    };

    let lattice = match subrep_lattice(&base, budget) {
        Ok(l) => l,
        Err(FiltrepError::LatticeBudget { .. }) | Err(FiltrepError::ModuleTooLarge { .. }) => {
            return Ok(uncertified(base, base_kernel));
        }
        Err(e) => return Err(e),
    };

    // candidates satisfying T1, smallest module first; subreps win ties
    let mut best: Option<(usize, usize, FilteredRep, usize)> = None;
    let consider = |mdim: usize,
                        tie: usize,
                        rep: FilteredRep,
                        kernel_dim: usize,
                        best: &mut Option<(usize, usize, FilteredRep, usize)>| {
        let better = match best {
            None => true,
            Some((bm, bt, _, _)) => (mdim, tie) < (*bm, *bt),
        };
        if better {
            *best = Some((mdim, tie, rep, kernel_dim));
        }
    };
    for u in &lattice {
        if u.dim() >= 1 {
            let rep = sub_rep(&base, u);
            let (t1, kdim) = satisfies_t1(p, &rep)?;
            if t1 {
                consider(rep.mdim, 0, rep, kdim, &mut best);
            }
        }
        if u.dim() < base.mdim {
            let rep = quotient_rep(&base, u);
            let (t1, kdim) = satisfies_t1(p, &rep)?;
            if t1 {
                consider(rep.mdim, 1, rep, kdim, &mut best);
            }
        }
    }
    let (_, _, mut current, mut current_kernel) =
        best.expect("the full subrepresentation always satisfies T1");

    // descend while some proper subrepresentation still satisfies T1
    loop {
        let sublattice = match subrep_lattice(&current, budget) {
            Ok(l) => l,
            Err(FiltrepError::LatticeBudget { .. })
            | Err(FiltrepError::ModuleTooLarge { .. }) => {
                return Ok(uncertified(current, current_kernel));
            }
            Err(e) => return Err(e),
        };
        let mut descended = false;
        for u in &sublattice {
            if u.is_full() || u.is_zero() {
                continue;
            }
            let rep = sub_rep(&current, u);
            let (t1, kdim) = satisfies_t1(p, &rep)?;
            if t1 {
                current = rep;
                current_kernel = kdim;
                descended = true;
                break;
            }
        }
        if !descended {
            break;
        }
    }

    // T2 certificate over the maximal proper subrepresentations
    let sublattice = match subrep_lattice(&current, budget) {
        Ok(l) => l,
        Err(FiltrepError::LatticeBudget { .. }) | Err(FiltrepError::ModuleTooLarge { .. }) => {
            return Ok(uncertified(current, current_kernel));
        }
        Err(e) => return Err(e),
    };
    let proper: Vec<_> = sublattice.iter().filter(|s| !s.is_full()).collect();
    let maximal: Vec<_> = proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.dim() > s.dim() && t.contains_subspace(s))
        })
        .collect();
    let mut checks = Vec::new();
    for u in maximal {
        let (kernel_dim, fails) = if u.is_zero() {
            // the zero subrepresentation detects nothing
            (p.dim(), true)
        } else {
            let rep = sub_rep(&current, u);
            let (t1, kdim) = satisfies_t1(p, &rep)?;
            (kdim, !t1)
        };
        checks.push(SubrepCheck {
            dim: u.dim(),
            kernel_dim,
            fails_t1: fails,
        });
    }
    let certificate = MinimalityCertificate {
        boundary_dim: p.boundary_ideal().dim(),
        maximal_proper_subreps: checks,
    };
    let certified = certificate.complete();
    Ok(TestingObject {
        rep: current,
        kernel_dim: current_kernel,
        certified,
        certificate: Some(certificate),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{heisenberg_phase, HeisenbergSpec};
    use crate::phase::{dual_numbers, unit_phase};

    #[test]
    fn unit_algebra_testing_object_is_regular() {
        let p = unit_phase();
        let t = testing_object_search(&p, &Budget::default()).unwrap();
        assert_eq!(t.rep.mdim, 1);
        assert!(t.certified);
        assert_eq!(t.kernel_dim, 0);
    }

    #[test]
    fn dual_numbers_testing_object() {
        let d = dual_numbers();
        let t = testing_object_search(&d, &Budget::default()).unwrap();
        assert_eq!(t.rep.mdim, 1);
        assert!(t.certified);
        assert_eq!(t.kernel_dim, 1);
    }

    #[test]
    fn flagship_testing_object_is_full_regular_rep() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let t = testing_object_search(&p, &Budget::default()).unwrap();
        assert_eq!(t.rep.mdim, 8);
        assert!(t.certified);
        assert_eq!(t.kernel_dim, 24);
        let cert = t.certificate.unwrap();
        assert!(cert.complete());
        // the quotient is local: a unique maximal proper submodule of dim 7,
        // whose kernel strictly exceeds the boundary (by the socle preimage)
        assert_eq!(cert.maximal_proper_subreps.len(), 1);
        assert_eq!(cert.maximal_proper_subreps[0].dim, 7);
        assert_eq!(cert.maximal_proper_subreps[0].kernel_dim, 25);
    }

    #[test]
    fn dropping_the_testing_object_enlarges_the_kernel() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let t = testing_object_search(&p, &Budget::default()).unwrap();
        let boundary_dim = p.boundary_ideal().dim();

        // families: [T] alone, and [T, S] for each maximal failing subrep S
        let phi_t = phi_assemble(&p, &[t.rep.clone()]).unwrap();
        assert_eq!(phi_t.kernel.dim(), boundary_dim);
        let empty = phi_assemble(&p, &[]).unwrap();
        assert!(empty.kernel.dim() > boundary_dim);

        let lattice = subrep_lattice(&t.rep, &Budget::default()).unwrap();
        let radical = lattice
            .iter()
            .filter(|s| !s.is_full())
            .max_by_key(|s| s.dim())
            .unwrap();
        let s = sub_rep(&t.rep, radical);
        let family = phi_assemble(&p, &[t.rep.clone(), s.clone()]).unwrap();
        assert_eq!(family.kernel.dim(), boundary_dim);
        let reduced = phi_assemble(&p, &[s]).unwrap();
        assert!(reduced.kernel.dim() > boundary_dim);
    }
}
