//! Rebuilding phases from action data, and the global structure checks:
//! the strong/weak dichotomy, exact reconstruction on rigidity islands, and
//! the complete-invariant comparison of two phases.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::Budget;
use crate::filtrep::{
    enumerate_reps, image_algebra, phi_assemble, regular_rep, rep_counts_by_mdim, FilteredRep,
    FiltrepError,
};
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};
use crate::phase::{
    boundary_quotient, ideal_power_filtration, iso_search, rigidity_island, validate_phase,
    AlgebraTable, Dichotomy, IslandOutcome, IsoOutcome, Phase, PhaseError,
};

/// Filtration shift of an operator relative to a descending module chain.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum DefectShift {
    /// The operator does not even preserve the chain.
    NotFiltered,
    /// Largest k with `op · G[i] ⊆ G[i+k]` for all i.
    Shift(usize),
    /// The zero operator shifts by any amount.
    Inf,
}

impl DefectShift {
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            DefectShift::NotFiltered => k == 0 && false,
            DefectShift::Shift(s) => *s >= k,
            DefectShift::Inf => true,
        }
    }

    pub fn saturating_add(self, other: DefectShift) -> DefectShift {
        match (self, other) {
            (DefectShift::Inf, _) | (_, DefectShift::Inf) => DefectShift::Inf,
            (DefectShift::NotFiltered, _) | (_, DefectShift::NotFiltered) => {
                DefectShift::NotFiltered
            }
            (DefectShift::Shift(a), DefectShift::Shift(b)) => DefectShift::Shift(a + b),
        }
    }
}

fn shift_holds(op: &GF2Matrix, vfilt: &[GF2Subspace], k: usize) -> bool {
    let last = vfilt.len() - 1;
    for (i, layer) in vfilt.iter().enumerate() {
        let target = &vfilt[(i + k).min(last)];
        for v in layer.basis() {
            if !target.contains(&op.mul_vec(v)) {
                return false;
            }
        }
    }
    true
}

/// The largest k with `op · G[i] ⊆ G[i+k]` for all i; `Inf` for the zero
/// operator, `NotFiltered` when the operator does not preserve the chain.
pub fn operator_defect_degree(op: &GF2Matrix, vfilt: &[GF2Subspace]) -> DefectShift {
    assert!(!vfilt.is_empty(), "empty module filtration");
    assert_eq!(op.rows(), op.cols(), "operator must be square");
    assert_eq!(op.rows(), vfilt[0].ambient_dim(), "shape mismatch");
    if op.is_zero() {
        return DefectShift::Inf;
    }
    if !shift_holds(op, vfilt, 0) {
        return DefectShift::NotFiltered;
    }
    let mut k = 0;
    while k + 1 <= vfilt.len() && shift_holds(op, vfilt, k + 1) {
        k += 1;
    }
    DefectShift::Shift(k)
}

/// Raw action data over an unknown phase: matrices (one per generator of
/// the unknown algebra) plus the module filtration they respect.
#[derive(Clone, Debug)]
pub struct RawRep {
    pub mats: Vec<GF2Matrix>,
    pub vfilt: Vec<GF2Subspace>,
}

impl RawRep {
    pub fn from_filtered(rep: &FilteredRep) -> Self {
        RawRep {
            mats: rep.action.clone(),
            vfilt: rep.vfilt.clone(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ReconstructError {
    #[error("bad input: {reason}")]
    BadInput { reason: String },
    #[error("operator closure did not stabilize within {products} products")]
    ClosureBudget { products: u64 },
    #[error("reconstructed algebra failed validation at '{check}'")]
    InvalidOutput { check: String },
    #[error(transparent)]
    Phase(#[from] PhaseError),
    #[error(transparent)]
    Filtrep(#[from] FiltrepError),
}

/// Result of rebuilding a phase from raw operators.
#[derive(Clone, Debug)]
pub struct ReconstructionOutcome {
    /// The reconstructed phase: the generated operator algebra modulo its
    /// ideal of filtration-raising operators, a strong phase.
    pub phase: Phase,
    /// Dimension of the generated operator algebra before collapsing.
    pub operator_algebra_dim: usize,
    /// Dimension of the ideal of degree-≥1 operators that was collapsed.
    pub degree_one_ideal_dim: usize,
}

/// Generate the operator algebra spanned by the inputs (and the identity),
/// stratify it by filtration shift, shrink the degree-≥1 stratum to the
/// largest two-sided ideal inside it, and collapse. With terminating inputs
/// the stratum is already zero and the collapse is a no-op.
pub fn reconstruct_phase(
    inputs: &[RawRep],
    budget: &Budget,
) -> Result<ReconstructionOutcome, ReconstructError> {
    if inputs.is_empty() {
        return Err(ReconstructError::BadInput {
            reason: "no representations supplied".to_string(),
        });
    }
    let gen_count = inputs[0].mats.len();
    for (ri, r) in inputs.iter().enumerate() {
        if r.mats.len() != gen_count {
            return Err(ReconstructError::BadInput {
                reason: format!("rep {ri} has a different generator count"),
            });
        }
        if r.vfilt.is_empty()
            || !r.vfilt[0].is_full()
            || !r.vfilt.last().unwrap().is_zero()
        {
            return Err(ReconstructError::BadInput {
                reason: format!("rep {ri} has a malformed module filtration"),
            });
        }
        let m = r.vfilt[0].ambient_dim();
        if r.mats.iter().any(|a| a.rows() != m || a.cols() != m) {
            return Err(ReconstructError::BadInput {
                reason: format!("rep {ri} has matrices of the wrong shape"),
            });
        }
    }

    let sizes: Vec<usize> = inputs.iter().map(|r| r.vfilt[0].ambient_dim()).collect();
    let total: usize = sizes.iter().map(|m| m * m).sum();

    let vectorize_tuple = |mats: &[GF2Matrix]| -> BitVec {
        let mut v = BitVec::zero(total);
        let mut offset = 0;
        for (r, m) in mats.iter().zip(&sizes) {
            for i in r.vectorize().iter_ones() {
                v.set(offset + i, true);
            }
            offset += m * m;
        }
        v
    };
    let devectorize = |v: &BitVec| -> Vec<GF2Matrix> {
        let mut out = Vec::with_capacity(sizes.len());
        let mut offset = 0;
        for m in &sizes {
            out.push(GF2Matrix::from_vectorized(*m, *m, &v.slice(offset, m * m)));
            offset += m * m;
        }
        out
    };
    let block_mul = |a: &BitVec, b: &BitVec| -> BitVec {
        let ma = devectorize(a);
        let mb = devectorize(b);
        let prods: Vec<GF2Matrix> = ma.iter().zip(&mb).map(|(x, y)| x.mul(y)).collect();
        vectorize_tuple(&prods)
    };

    // seed: identity plus the generator tuples
    let identity_vec = vectorize_tuple(
        &sizes.iter().map(|&m| GF2Matrix::identity(m)).collect::<Vec<_>>(),
    );
    let mut seed = vec![identity_vec.clone()];
    for g in 0..gen_count {
        let tuple: Vec<GF2Matrix> = inputs.iter().map(|r| r.mats[g].clone()).collect();
        seed.push(vectorize_tuple(&tuple));
    }

    // close under products
    let mut span = GF2Subspace::from_rows(total, seed);
    let mut products: u64 = 0;
    loop {
        let mut rows = span.basis().to_vec();
        for a in span.basis() {
            for b in span.basis() {
                products += 1;
                if products > budget.closure_products {
                    return Err(ReconstructError::ClosureBudget { products });
                }
                rows.push(block_mul(a, b));
            }
        }
        let next = GF2Subspace::from_rows(total, rows);
        if next.dim() == span.dim() {
            break;
        }
        span = next;
    }

    let s = span.dim();
    let basis_ops: Vec<BitVec> = span.basis().to_vec();

    // structure constants in the canonical operator basis
    let labels: Vec<String> = (0..s).map(|i| format!("op{i}")).collect();
    let unit = span
        .coords_of(&identity_vec)
        .expect("identity lies in the closed algebra");
    let mut mul = Vec::with_capacity(s * s);
    for a in &basis_ops {
        for b in &basis_ops {
            let prod = block_mul(a, b);
            mul.push(span.coords_of(&prod).expect("closure is product-closed"));
        }
    }
    let table = AlgebraTable::new(labels, unit, mul);

    // the stratum of operators shifting every module filtration by >= 1,
    // as a subspace of operator coordinates
    let constraint_rows: usize = inputs
        .iter()
        .map(|r| {
            r.vfilt
                .iter()
                .map(|g| g.dim() * g.ambient_dim())
                .sum::<usize>()
        })
        .sum();
    let mut constraints = GF2Matrix::zero(constraint_rows.max(1), s);
    let mut row_base = 0;
    for (ri, r) in inputs.iter().enumerate() {
        let m = sizes[ri];
        let last = r.vfilt.len() - 1;
        let offset: usize = sizes[..ri].iter().map(|x| x * x).sum();
        for (i, layer) in r.vfilt.iter().enumerate() {
            let target = &r.vfilt[(i + 1).min(last)];
            for v in layer.basis() {
                for (t, op) in basis_ops.iter().enumerate() {
                    let mat = GF2Matrix::from_vectorized(m, m, &op.slice(offset, m * m));
                    let reduced = target.reduce(&mat.mul_vec(v));
                    for bit in reduced.iter_ones() {
                        constraints.set(row_base + bit, t, true);
                    }
                }
                row_base += m;
            }
        }
    }
    let mut stratum = constraints.kernel();

    // shrink to the largest two-sided ideal inside the stratum
    loop {
        if stratum.is_zero() {
            break;
        }
        let quot_dim = s - stratum.dim();
        if quot_dim == 0 {
            break;
        }
        let mut q_map = GF2Matrix::zero(quot_dim, s);
        for j in 0..s {
            let qc = stratum.quotient_coords(&BitVec::unit(s, j));
            for i in qc.iter_ones() {
                q_map.set(i, j, true);
            }
        }
        let mut stacked = GF2Matrix::zero(quot_dim * (2 * s) + quot_dim, s);
        let mut base = 0;
        for bidx in 0..s {
            let e = BitVec::unit(s, bidx);
            let l = table.left_mul_matrix(&e);
            let r = table.right_mul_matrix(&e);
            for mat in [q_map.mul(&l), q_map.mul(&r)] {
                for row in 0..quot_dim {
                    for col in 0..s {
                        if mat.get(row, col) {
                            stacked.set(base + row, col, true);
                        }
                    }
                }
                base += quot_dim;
            }
        }
        // membership in the stratum itself
        for row in 0..quot_dim {
            for col in 0..s {
                if q_map.get(row, col) {
                    stacked.set(base + row, col, true);
                }
            }
        }
        let refined = stacked.kernel();
        if refined.dim() == stratum.dim() {
            break;
        }
        stratum = refined;
    }

    let degree_one_ideal_dim = stratum.dim();
    let filtered = ideal_power_filtration(table, stratum)?;
    let (phase, _) = boundary_quotient(&filtered);
    let report = validate_phase(&phase);
    if !report.is_valid() {
        return Err(ReconstructError::InvalidOutput {
            check: report.first_failure().unwrap().name.clone(),
        });
    }
    Ok(ReconstructionOutcome {
        phase,
        operator_algebra_dim: s,
        degree_one_ideal_dim,
    })
}

/// The strong/weak dichotomy. Exactly two verdict shapes exist by type
/// construction.
pub fn dichotomy_classify(p: &Phase) -> Dichotomy {
    p.dichotomy()
}

/// Report of the island-local reconstruction check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LocalReconstructionReport {
    pub island: IslandOutcome,
    pub island_dim: Option<usize>,
    /// Kernel of Φ on the island subphase; must be zero.
    pub kernel_dim: Option<usize>,
    pub reconstructed_dim: Option<usize>,
    pub iso_verdict: Option<String>,
    pub exact: bool,
    pub notes: Vec<String>,
}

/// Restrict a phase to an island subalgebra, in island coordinates.
pub fn island_subphase(p: &Phase, island: &GF2Subspace) -> Phase {
    let c = island.dim();
    let labels: Vec<String> = (0..c).map(|i| format!("s{i}")).collect();
    let unit = island
        .coords_of(p.unit())
        .expect("island must contain the unit");
    let mut mul = Vec::with_capacity(c * c);
    for x in island.basis() {
        for y in island.basis() {
            mul.push(
                island
                    .coords_of(&p.mul(x, y))
                    .expect("island must be closed under products"),
            );
        }
    }
    Phase::strong(AlgebraTable::new(labels, unit, mul))
}

/// Run reconstruction restricted to a rigidity island: the kernel of Φ must
/// vanish there and the rebuilt algebra must be certified equivalent to the
/// island subphase.
pub fn local_reconstruction_check(p: &Phase, budget: &Budget) -> LocalReconstructionReport {
    let island_outcome = rigidity_island(p, budget);
    let Some(island) = island_outcome.subspace(p.dim()) else {
        return LocalReconstructionReport {
            island: island_outcome,
            island_dim: None,
            kernel_dim: None,
            reconstructed_dim: None,
            iso_verdict: None,
            exact: false,
            notes: vec!["island unknown within budget".to_string()],
        };
    };
    let sub = island_subphase(p, &island);
    let mut notes = Vec::new();

    let reg = regular_rep(&sub);
    let kernel_dim = match phi_assemble(&sub, std::slice::from_ref(&reg)) {
        Ok(phi) => Some(phi.kernel.dim()),
        Err(e) => {
            notes.push(format!("phi assembly failed: {e}"));
            None
        }
    };

    let (reconstructed_dim, iso_verdict, exact) =
        match reconstruct_phase(&[RawRep::from_filtered(&reg)], budget) {
            Ok(outcome) => {
                let iso = iso_search(&outcome.phase, &sub, budget);
                let verdict = iso.verdict().to_string();
                let exact = kernel_dim == Some(0) && matches!(iso, IsoOutcome::Found(_));
                (Some(outcome.phase.dim()), Some(verdict), exact)
            }
            Err(e) => {
                notes.push(format!("reconstruction failed: {e}"));
                (None, None, false)
            }
        };

    LocalReconstructionReport {
        island: island_outcome,
        island_dim: Some(island.dim()),
        kernel_dim,
        reconstructed_dim,
        iso_verdict,
        exact,
        notes,
    }
}

/// Verdict of the complete-invariant comparison.
#[derive(Clone, Debug)]
pub enum HiddenVerdict {
    Equivalent(crate::phase::PhaseMap),
    Distinguished { invariant: String },
    Unknown { reason: String },
}

impl HiddenVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            HiddenVerdict::Equivalent(_) => "equivalent",
            HiddenVerdict::Distinguished { .. } => "distinguished",
            HiddenVerdict::Unknown { .. } => "unknown",
        }
    }
}

/// Full report of the comparison: both invariant sides are computed (budget
/// permitting) before any verdict is drawn.
#[derive(Clone, Debug)]
pub struct HiddenStructureReport {
    pub layer_dims_p: Vec<usize>,
    pub layer_dims_q: Vec<usize>,
    /// Rep counts per module dimension 1..=mdim_max; None when enumeration
    /// was refused under the budget.
    pub rep_counts_p: Option<Vec<usize>>,
    pub rep_counts_q: Option<Vec<usize>>,
    pub image_iso: Option<String>,
    pub verdict: HiddenVerdict,
}

/// Compare two phases by their representation-side invariants (rep counts
/// per small module dimension, image algebra class) and boundary-side
/// invariants (layer dimension vector); when everything matches, search for
/// a certified equivalence.
pub fn no_hidden_structure_check(p: &Phase, q: &Phase, budget: &Budget) -> HiddenStructureReport {
    let layer_dims_p = p.layer_dims();
    let layer_dims_q = q.layer_dims();

    let count = |phase: &Phase| -> Option<Vec<usize>> {
        if budget.mdim_max == 0 {
            return None;
        }
        enumerate_reps(phase, budget.mdim_max, budget)
            .ok()
            .map(|reps| rep_counts_by_mdim(&reps, budget.mdim_max))
    };
    let rep_counts_p = count(p);
    let rep_counts_q = count(q);

    let image_class = |phase: &Phase| -> Option<Phase> {
        let phi = phi_assemble(phase, &[regular_rep(phase)]).ok()?;
        image_algebra(&phi).ok().map(|im| im.phase)
    };
    let (image_iso, image_distinguishes) = match (image_class(p), image_class(q)) {
        (Some(ip), Some(iq)) => match iso_search(&ip, &iq, budget) {
            IsoOutcome::Found(_) => (Some("equivalent".to_string()), false),
            IsoOutcome::No { reason } => (Some(format!("distinguished: {reason}")), true),
            IsoOutcome::Unknown { reason } => (Some(format!("unknown: {reason}")), false),
        },
        _ => (None, false),
    };

    let verdict = if layer_dims_p != layer_dims_q {
        HiddenVerdict::Distinguished {
            invariant: format!(
                "layer dimension vector {layer_dims_p:?} vs {layer_dims_q:?}"
            ),
        }
    } else if let (Some(cp), Some(cq)) = (&rep_counts_p, &rep_counts_q) {
        if cp != cq {
            HiddenVerdict::Distinguished {
                invariant: format!("representation counts {cp:?} vs {cq:?}"),
            }
        } else if image_distinguishes {
            HiddenVerdict::Distinguished {
                invariant: "image algebra equivalence class".to_string(),
            }
        } else {
            match iso_search(p, q, budget) {
                IsoOutcome::Found(m) => HiddenVerdict::Equivalent(m),
                IsoOutcome::No { reason } => HiddenVerdict::Distinguished { invariant: reason },
                IsoOutcome::Unknown { reason } => HiddenVerdict::Unknown { reason },
            }
        }
    } else if image_distinguishes {
        HiddenVerdict::Distinguished {
            invariant: "image algebra equivalence class".to_string(),
        }
    } else {
        match iso_search(p, q, budget) {
            IsoOutcome::Found(m) => HiddenVerdict::Equivalent(m),
            IsoOutcome::No { reason } => HiddenVerdict::Distinguished { invariant: reason },
            IsoOutcome::Unknown { reason } => HiddenVerdict::Unknown {
                reason: format!("{reason}; representation counts unavailable"),
            },
        }
    };

    HiddenStructureReport {
        layer_dims_p,
        layer_dims_q,
        rep_counts_p,
        rep_counts_q,
        image_iso,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2lin::BitVec;
    use crate::heisenberg::{heisenberg_phase, HeisenbergSpec};
    use crate::phase::{dual_numbers, iso_certify, square_zero_extend, unit_phase};

    #[test]
    fn identity_and_zero_operator_degrees() {
        let vfilt = vec![GF2Subspace::full(3), GF2Subspace::zero(3)];
        assert_eq!(
            operator_defect_degree(&GF2Matrix::identity(3), &vfilt),
            DefectShift::Shift(0)
        );
        assert_eq!(
            operator_defect_degree(&GF2Matrix::zero(3, 3), &vfilt),
            DefectShift::Inf
        );
    }

    #[test]
    fn strictly_lowering_nilpotent_has_degree_1() {
        // V ⊇ L ⊇ 0 with op: V → L, L → 0
        let line = GF2Subspace::from_rows(2, vec![BitVec::from_ints(&[0, 1])]);
        let vfilt = vec![GF2Subspace::full(2), line, GF2Subspace::zero(2)];
        let mut op = GF2Matrix::zero(2, 2);
        op.set(1, 0, true); // e0 -> e1, e1 -> 0
        assert_eq!(operator_defect_degree(&op, &vfilt), DefectShift::Shift(1));
    }

    #[test]
    fn identity_input_reconstructs_unit_phase() {
        let raw = RawRep {
            mats: vec![],
            vfilt: vec![GF2Subspace::full(1), GF2Subspace::zero(1)],
        };
        let out = reconstruct_phase(&[raw], &Budget::default()).unwrap();
        assert_eq!(out.phase.dim(), 1);
        assert_eq!(out.operator_algebra_dim, 1);
        assert_eq!(out.degree_one_ideal_dim, 0);
    }

    #[test]
    fn flagship_roundtrip_reconstructs_quotient() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let reg = regular_rep(&p);
        let out = reconstruct_phase(&[RawRep::from_filtered(&reg)], &Budget::default()).unwrap();
        assert_eq!(out.phase.dim(), 8);
        assert_eq!(out.degree_one_ideal_dim, 0);
        let (q, _) = boundary_quotient(&p);
        match iso_search(&out.phase, &q, &Budget::default()) {
            IsoOutcome::Found(m) => assert!(iso_certify(&m).is_ok()),
            other => panic!("expected Found, got {}", other.verdict()),
        }
    }

    #[test]
    fn weak_regular_rep_collapses_to_quotient() {
        // weak-level input exercises the degree-one collapse path
        let d = dual_numbers();
        let weak = crate::filtrep::weak_regular_rep(&d);
        let out = reconstruct_phase(&[RawRep::from_filtered(&weak)], &Budget::default()).unwrap();
        assert_eq!(out.operator_algebra_dim, 2);
        assert_eq!(out.degree_one_ideal_dim, 1);
        assert_eq!(out.phase.dim(), 1);
    }

    #[test]
    fn dichotomy_on_small_corpus() {
        assert_eq!(dichotomy_classify(&unit_phase()), Dichotomy::Strong);
        assert_eq!(
            dichotomy_classify(&dual_numbers()),
            Dichotomy::Weak { depth: 1 }
        );
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        assert_eq!(dichotomy_classify(&p), Dichotomy::Weak { depth: 2 });
        assert_eq!(
            dichotomy_classify(&heisenberg_phase(&HeisenbergSpec::new(1, 1))),
            Dichotomy::Strong
        );
    }

    #[test]
    fn local_reconstruction_on_extension_island() {
        let r = heisenberg_phase(&HeisenbergSpec::new(1, 1));
        let ext = square_zero_extend(&r, 1, None).unwrap();
        let report = local_reconstruction_check(&ext, &Budget::default());
        assert_eq!(report.island_dim, Some(8));
        assert_eq!(report.kernel_dim, Some(0));
        assert!(report.exact, "notes: {:?}", report.notes);
    }

    #[test]
    fn hidden_structure_distinguishes_extension() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let e = square_zero_extend(&p, 1, None).unwrap();
        let report = no_hidden_structure_check(&p, &e, &Budget::default());
        assert_eq!(report.rep_counts_p, report.rep_counts_q);
        assert_eq!(report.image_iso.as_deref(), Some("equivalent"));
        match &report.verdict {
            HiddenVerdict::Distinguished { invariant } => {
                assert!(invariant.contains("layer"), "invariant: {invariant}");
            }
            other => panic!("expected Distinguished, got {}", other.name()),
        }
    }

    #[test]
    fn hidden_structure_self_comparison_is_equivalent() {
        let d = dual_numbers();
        let report = no_hidden_structure_check(&d, &d, &Budget::default());
        match report.verdict {
            HiddenVerdict::Equivalent(m) => assert!(iso_certify(&m).is_ok()),
            other => panic!("expected Equivalent, got {}", other.name()),
        }
    }
}
