//! Machine-readable report types (JSON, stable schema).
//!
//! Every claim in a report is backed by an inline certificate (a witness
//! matrix that `iso_certify` accepts, kernel dimensions, subrepresentation
//! checks) or is an explicit "unknown"; a third party can re-verify the
//! equivalence claims with `iso_certify` alone.

use serde::{Deserialize, Serialize};

use crate::filtrep::SubrepCheck;
use crate::phase::{IsoOutcome, Phase};

pub const SCHEMA_VERSION: &str = "1";

/// An equivalence claim with its witness inline.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsoWitnessReport {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Witness matrix (target dim × source dim), rows of 0/1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u8>>>,
    pub certified: bool,
}

impl IsoWitnessReport {
    pub fn from_outcome(outcome: &IsoOutcome) -> Self {
        match outcome {
            IsoOutcome::Found(m) => IsoWitnessReport {
                verdict: "equivalent".to_string(),
                reason: None,
                matrix: Some(m.matrix.to_ints()),
                certified: true,
            },
            IsoOutcome::No { reason } => IsoWitnessReport {
                verdict: "no".to_string(),
                reason: Some(reason.clone()),
                matrix: None,
                certified: false,
            },
            IsoOutcome::Unknown { reason } => IsoWitnessReport {
                verdict: "unknown".to_string(),
                reason: Some(reason.clone()),
                matrix: None,
                certified: false,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhaseSummary {
    pub name: String,
    pub dim: usize,
    pub layer_dims: Vec<usize>,
    pub boundary_depth: usize,
    pub dichotomy: String,
    pub valid: bool,
}

impl PhaseSummary {
    pub fn new(name: &str, p: &Phase) -> Self {
        PhaseSummary {
            name: name.to_string(),
            dim: p.dim(),
            layer_dims: p.layer_dims(),
            boundary_depth: p.boundary_depth(),
            dichotomy: p.dichotomy().to_string(),
            valid: crate::phase::validate_phase(p).is_valid(),
        }
    }
}

/// Output of the `invariants` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub schema_version: String,
    pub dim: usize,
    pub layer_dims: Vec<usize>,
    pub boundary_depth: usize,
    pub dichotomy: String,
    pub commutative: bool,
    pub center_dim: usize,
}

/// Output of the `reconstruct` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReconstructReport {
    pub schema_version: String,
    pub inputs: Vec<String>,
    pub operator_algebra_dim: usize,
    pub degree_one_ideal_dim: usize,
    pub output_dim: usize,
    pub output_valid: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KernelReport {
    pub phase: String,
    pub kernel_dim: usize,
    pub boundary_dim: usize,
    pub kernel_equals_boundary: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepCountRow {
    pub mdim: usize,
    pub p: usize,
    pub p_ext: usize,
    pub r: usize,
    pub r_ext: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepCountReport {
    pub mdim_max: usize,
    /// None when enumeration was refused under the budget.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_mdim: Option<Vec<RepCountRow>>,
    pub pairs_agree: bool,
    pub restriction_bijection_verified: bool,
    pub refused: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TestingObjectReport {
    pub mdim: usize,
    pub kernel_dim: usize,
    pub boundary_dim: usize,
    pub certified: bool,
    pub maximal_subrep_checks: Vec<SubrepCheck>,
    /// Dropping the object from each probed separating family strictly
    /// enlarged the kernel.
    pub drop_strictly_enlarges: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IslandReport {
    pub phase: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub island_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_kernel_dim: Option<usize>,
    pub local_reconstruction_exact: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DichotomyRow {
    pub phase: String,
    pub verdict: String,
    pub boundary_zero: bool,
    pub obstruction_zero: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundaryComparison {
    pub base_boundary_dim: usize,
    pub ext_boundary_dim: usize,
    pub strictly_larger: bool,
    pub kernel_gap: usize,
    pub gap_equals_bdim: bool,
}

/// Depth bookkeeping for the flagship: the ideal-power depth, and the
/// generator-level facts (each generator squares to zero; pairwise products
/// land one layer deeper; triple products vanish).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlagshipNotes {
    pub boundary_depth_ideal_powers: usize,
    pub boundary_generators_square_zero: bool,
    pub generator_pair_products_in_second_layer: bool,
    pub generator_triple_products_vanish: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DemoParams {
    pub n: usize,
    pub b_dim: usize,
    pub mdim_max: usize,
    pub budget_steps: u64,
}

/// The consolidated flagship demo report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DemoReport {
    pub schema_version: String,
    pub params: DemoParams,
    pub phases: Vec<PhaseSummary>,
    pub boundary: BoundaryComparison,
    pub kernels: Vec<KernelReport>,
    pub quotient_iso: IsoWitnessReport,
    pub rep_counts: RepCountReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub testing_object: Option<TestingObjectReport>,
    pub islands: Vec<IslandReport>,
    pub dichotomy: Vec<DichotomyRow>,
    pub flagship_notes: FlagshipNotes,
    pub warnings: Vec<String>,
}

impl DemoReport {
    /// One line per stage for standard output.
    pub fn summary(&self) -> String {
        let mut lines = Vec::new();
        for p in &self.phases {
            lines.push(format!(
                "phase {}: dim {}, layers {:?}, {}, valid={}",
                p.name, p.dim, p.layer_dims, p.dichotomy, p.valid
            ));
        }
        lines.push(format!(
            "boundary layers: base {} vs extension {} (strictly larger: {}), kernel gap {} (= b_dim: {})",
            self.boundary.base_boundary_dim,
            self.boundary.ext_boundary_dim,
            self.boundary.strictly_larger,
            self.boundary.kernel_gap,
            self.boundary.gap_equals_bdim
        ));
        for k in &self.kernels {
            lines.push(format!(
                "kernel[{}] = {} (boundary {}, equal: {})",
                k.phase, k.kernel_dim, k.boundary_dim, k.kernel_equals_boundary
            ));
        }
        lines.push(format!(
            "quotient iso: {}{}",
            self.quotient_iso.verdict,
            self.quotient_iso
                .reason
                .as_ref()
                .map(|r| format!(" ({r})"))
                .unwrap_or_default()
        ));
        if self.rep_counts.refused {
            lines.push("rep counts: unknown (enumeration refused under budget)".to_string());
        } else if let Some(rows) = &self.rep_counts.per_mdim {
            for row in rows {
                lines.push(format!(
                    "rep counts mdim {}: P={} P_ext={} R={} R_ext={}",
                    row.mdim, row.p, row.p_ext, row.r, row.r_ext
                ));
            }
            lines.push(format!(
                "rep counts agree: {}, restriction bijection verified: {}",
                self.rep_counts.pairs_agree, self.rep_counts.restriction_bijection_verified
            ));
        }
        match &self.testing_object {
            Some(t) => lines.push(format!(
                "testing object: mdim {}, kernel {}, certified {}",
                t.mdim, t.kernel_dim, t.certified
            )),
            None => lines.push("testing object: unknown (budget)".to_string()),
        }
        for i in &self.islands {
            lines.push(format!(
                "island[{}]: found={}, local reconstruction exact={}",
                i.phase, i.found, i.local_reconstruction_exact
            ));
        }
        for d in &self.dichotomy {
            lines.push(format!(
                "dichotomy[{}]: {} (boundary zero: {}, obstruction zero: {}, agree: {})",
                d.phase, d.verdict, d.boundary_zero, d.obstruction_zero, d.agree
            ));
        }
        lines.push(format!(
            "flagship depth (ideal powers): {}; boundary generators square-zero: {}",
            self.flagship_notes.boundary_depth_ideal_powers,
            self.flagship_notes.boundary_generators_square_zero
        ));
        for w in &self.warnings {
            lines.push(format!("warning: {w}"));
        }
        lines.join("\n")
    }
}
