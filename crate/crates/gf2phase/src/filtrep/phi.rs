//! The evaluation map Φ from a phase into the endomorphisms of a family of
//! terminating filtered representations, with its kernel and image algebra.
//!
//! The kernel always contains the boundary ideal, and equals it whenever
//! the family contains the regular representation; the image algebra is a
//! presentation of the boundary quotient.

use super::{rep_validate, FilteredRep, FiltrepError, RepLevel};
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};
use crate::phase::{boundary_quotient, iso_certify, AlgebraTable, Phase, PhaseMap};

/// The assembled evaluation map. Column `j` of `matrix` is the stacked
/// vectorization of the action of basis element `j` across all reps, so the
/// kernel is exactly the set of phase elements acting as zero everywhere.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub phase: Phase,
    pub reps: Vec<FilteredRep>,
    pub matrix: GF2Matrix,
    pub kernel: GF2Subspace,
}

/// Stack the evaluation of the phase on a family of terminating reps and
/// compute the kernel in canonical form. An empty family is allowed and has
/// full kernel. Each rep is validated first; weak-level reps are rejected.
pub fn phi_assemble(p: &Phase, reps: &[FilteredRep]) -> Result<PhiMap, FiltrepError> {
    for (index, r) in reps.iter().enumerate() {
        if r.level != RepLevel::Terminating {
            return Err(FiltrepError::RepNotTerminating { index });
        }
        let report = rep_validate(p, r);
        if !report.is_valid() {
            return Err(FiltrepError::RepInvalid {
                index,
                check: report.first_failure().unwrap().name.clone(),
            });
        }
    }

    let n = p.dim();
    let total_rows: usize = reps.iter().map(|r| r.mdim * r.mdim).sum();
    let mut matrix = GF2Matrix::zero(total_rows, n);
    for j in 0..n {
        let mut offset = 0;
        for r in reps {
            let v = r.action[j].vectorize();
            for i in v.iter_ones() {
                matrix.set(offset + i, j, true);
            }
            offset += r.mdim * r.mdim;
        }
    }
    let kernel = matrix.kernel();
    Ok(PhiMap {
        phase: p.clone(),
        reps: reps.to_vec(),
        matrix,
        kernel,
    })
}

impl PhiMap {
    /// The stacked operator vector of an arbitrary phase element.
    pub fn evaluate(&self, x: &BitVec) -> BitVec {
        self.matrix.mul_vec(x)
    }

    /// Blockwise product of two stacked operator vectors.
    fn block_mul(&self, a: &BitVec, b: &BitVec) -> BitVec {
        let mut out = BitVec::zero(a.len());
        let mut offset = 0;
        for r in &self.reps {
            let sz = r.mdim * r.mdim;
            let ma = GF2Matrix::from_vectorized(r.mdim, r.mdim, &a.slice(offset, sz));
            let mb = GF2Matrix::from_vectorized(r.mdim, r.mdim, &b.slice(offset, sz));
            let prod = ma.mul(&mb).vectorize();
            for i in prod.iter_ones() {
                out.set(offset + i, true);
            }
            offset += sz;
        }
        out
    }
}

/// The image of Φ as a phase, plus the induced map from the boundary
/// quotient. The image basis is Φ applied to the canonical lifts of the
/// kernel complement, so two phases with bit-equal quotients produce
/// bit-equal image algebras.
#[derive(Clone, Debug)]
pub struct ImageAlgebra {
    pub phase: Phase,
    pub from_quotient: PhaseMap,
    /// Whether `from_quotient` passed certification. This holds exactly
    /// when the family kernel equals the boundary ideal.
    pub certified: bool,
}

/// Extract the operator algebra spanned by Φ's image. Products of image
/// basis vectors must stay inside the image span; a violation signals a
/// homomorphism failure upstream and is reported as an error.
pub fn image_algebra(phi: &PhiMap) -> Result<ImageAlgebra, FiltrepError> {
    let p = &phi.phase;
    let lifts = phi.kernel.complement_lifts();
    let idim = lifts.len();

    let image_vectors: Vec<BitVec> = lifts.iter().map(|l| phi.evaluate(l)).collect();
    let total = phi.matrix.rows();
    let mut span_mat = GF2Matrix::zero(total.max(1), idim.max(1));
    for (j, v) in image_vectors.iter().enumerate() {
        for i in v.iter_ones() {
            span_mat.set(i, j, true);
        }
    }

    // express: solve span_mat * c = w
    let express = |w: &BitVec| -> Option<BitVec> {
        let c = span_mat.solve(w)?;
        let mut acc = BitVec::zero(total.max(1));
        for j in c.iter_ones() {
            acc.xor_assign(&image_vectors[j]);
        }
        let padded = if w.len() == acc.len() {
            w.clone()
        } else {
            let mut t = BitVec::zero(acc.len());
            for i in w.iter_ones() {
                t.set(i, true);
            }
            t
        };
        (acc == padded).then_some(c)
    };

    let labels: Vec<String> = lifts
        .iter()
        .map(|l| p.labels()[l.first_set().unwrap()].clone())
        .collect();
    let mut unit_vec = BitVec::zero(total.max(1));
    for i in phi.evaluate(p.unit()).iter_ones() {
        unit_vec.set(i, true);
    }
    let unit = express(&unit_vec).ok_or(FiltrepError::ImageClosure { i: 0, j: 0 })?;

    let mut mul = Vec::with_capacity(idim * idim);
    for (i, vi) in image_vectors.iter().enumerate() {
        for (j, vj) in image_vectors.iter().enumerate() {
            let prod = phi.block_mul(vi, vj);
            let coords = express(&prod).ok_or(FiltrepError::ImageClosure { i, j })?;
            mul.push(coords);
        }
    }
    let table = AlgebraTable::new(labels, unit, mul);
    let image = Phase::strong(table);

    // induced map from the boundary quotient: send each quotient basis
    // element (a canonical lift class) to the image coordinates of Φ(lift)
    let (quotient, _) = boundary_quotient(p);
    let q_lifts = p.boundary_ideal().complement_lifts();
    let mut map_matrix = GF2Matrix::zero(idim, quotient.dim());
    let mut well_defined = true;
    for (j, ql) in q_lifts.iter().enumerate() {
        match express(&{
            let w = phi.evaluate(ql);
            let mut t = BitVec::zero(total.max(1));
            for i in w.iter_ones() {
                t.set(i, true);
            }
            t
        }) {
            Some(coords) => {
                for i in coords.iter_ones() {
                    map_matrix.set(i, j, true);
                }
            }
            None => {
                well_defined = false;
                break;
            }
        }
    }
    let from_quotient = PhaseMap::new(quotient, image.clone(), map_matrix);
    let certified = well_defined && iso_certify(&from_quotient).is_ok();

    Ok(ImageAlgebra {
        phase: image,
        from_quotient,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtrep::regular_rep;
    use crate::heisenberg::{heisenberg_phase, HeisenbergSpec};
    use crate::phase::{dual_numbers, square_zero_extend, unit_phase};

    #[test]
    fn strong_phase_regular_rep_is_faithful() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 1));
        let phi = phi_assemble(&p, &[regular_rep(&p)]).unwrap();
        assert_eq!(phi.kernel.dim(), 0);
    }

    #[test]
    fn kernel_equals_boundary_for_flagship() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let phi = phi_assemble(&p, &[regular_rep(&p)]).unwrap();
        assert_eq!(phi.kernel.dim(), 24);
        assert_eq!(phi.kernel, p.boundary_ideal());
    }

    #[test]
    fn kernel_of_extension_gains_exactly_bdim() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let e = square_zero_extend(&p, 2, None).unwrap();
        let phi = phi_assemble(&e, &[regular_rep(&e)]).unwrap();
        assert_eq!(phi.kernel.dim(), 26);
        assert_eq!(phi.kernel, e.boundary_ideal());
    }

    #[test]
    fn empty_family_has_full_kernel() {
        let p = dual_numbers();
        let phi = phi_assemble(&p, &[]).unwrap();
        assert_eq!(phi.kernel.dim(), 2);
    }

    #[test]
    fn weak_rep_rejected() {
        let d = dual_numbers();
        let weak = crate::filtrep::weak_regular_rep(&d);
        assert!(matches!(
            phi_assemble(&d, &[weak]),
            Err(FiltrepError::RepNotTerminating { index: 0 })
        ));
    }

    #[test]
    fn rep_over_wrong_phase_rejected() {
        // a rep of the split pair handed to the dual numbers fails the
        // homomorphism check during validation
        let d = dual_numbers();
        let s = crate::phase::split_pair();
        let rep = regular_rep(&s);
        assert!(matches!(
            phi_assemble(&d, &[rep]),
            Err(FiltrepError::RepInvalid { index: 0, .. })
        ));
    }

    #[test]
    fn image_of_strong_phase_is_the_phase() {
        let p = unit_phase();
        let phi = phi_assemble(&p, &[regular_rep(&p)]).unwrap();
        let image = image_algebra(&phi).unwrap();
        assert!(image.certified);
        assert_eq!(image.phase.dim(), 1);
    }

    #[test]
    fn image_of_flagship_is_certified_quotient() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let phi = phi_assemble(&p, &[regular_rep(&p)]).unwrap();
        let image = image_algebra(&phi).unwrap();
        assert_eq!(image.phase.dim(), 8);
        assert!(image.certified);
    }

    #[test]
    fn extension_image_bit_equal_to_base_image() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let e = square_zero_extend(&p, 2, None).unwrap();
        let phi_p = phi_assemble(&p, &[regular_rep(&p)]).unwrap();
        let phi_e = phi_assemble(&e, &[regular_rep(&e)]).unwrap();
        let im_p = image_algebra(&phi_p).unwrap();
        let im_e = image_algebra(&phi_e).unwrap();
        assert_eq!(im_p.phase.table(), im_e.phase.table());
        assert!(im_p.certified && im_e.certified);
    }
}
