//! Axiom validation for phases.
//!
//! Every invariant is reported with a pass/fail flag and, on failure, a
//! concrete counterexample (a basis triple, a basis/layer pair, ...).
//! Failures are report entries, not faults, so a corrupted phase file can
//! be diagnosed rather than rejected opaquely.

use serde::{Deserialize, Serialize};

use super::Phase;
use crate::gf2lin::GF2Subspace;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Concrete counterexample for a failed check.
    pub witness: Option<String>,
}

impl CheckResult {
    fn pass(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &str, witness: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {}{}\n",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.witness
                    .as_ref()
                    .map(|w| format!(" ({w})"))
                    .unwrap_or_default()
            ));
        }
        out
    }
}

/// Check every phase axiom: unit laws, associativity on all basis triples,
/// the filtration shape (descending, canonical, full at the top, zero at the
/// end), two-sidedness of every layer, layer multiplicativity, and the unit
/// staying outside the boundary ideal.
pub fn validate_phase(p: &Phase) -> ValidationReport {
    let mut checks = Vec::new();
    let n = p.dim();

    // unit is a two-sided identity (linearity reduces this to basis vectors)
    let mut unit_witness = None;
    for i in 0..n {
        let e = crate::gf2lin::BitVec::unit(n, i);
        if &p.mul(p.unit(), &e) != &e {
            unit_witness = Some(format!("unit * e_{i} != e_{i}"));
            break;
        }
        if &p.mul(&e, p.unit()) != &e {
            unit_witness = Some(format!("e_{i} * unit != e_{i}"));
            break;
        }
    }
    checks.push(match unit_witness {
        None => CheckResult::pass("unit_identity"),
        Some(w) => CheckResult::fail("unit_identity", w),
    });

    // associativity, exhaustively over basis triples
    let mut assoc_witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let ij = p.mul_basis(i, j).clone();
            for k in 0..n {
                let lhs = p.mul(&ij, &crate::gf2lin::BitVec::unit(n, k));
                let rhs = p.mul(
                    &crate::gf2lin::BitVec::unit(n, i),
                    p.mul_basis(j, k),
                );
                if lhs != rhs {
                    assoc_witness = Some(format!("basis triple ({i},{j},{k})"));
                    break 'outer;
                }
            }
        }
    }
    checks.push(match assoc_witness {
        None => CheckResult::pass("associativity"),
        Some(w) => CheckResult::fail("associativity", w),
    });

    let filt = p.filtration();

    // filtration shape: canonical layers, F[0] full, descending, last zero
    let mut shape_witness = None;
    if filt.is_empty() {
        shape_witness = Some("empty filtration".to_string());
    } else {
        if !filt[0].is_full() {
            shape_witness = Some("F[0] is not the full space".to_string());
        }
        for (k, layer) in filt.iter().enumerate() {
            let canon = GF2Subspace::from_rows(n, layer.basis().to_vec());
            if &canon != layer {
                shape_witness = Some(format!("layer F[{k}] not in canonical form"));
                break;
            }
        }
        if shape_witness.is_none() {
            for k in 0..filt.len() - 1 {
                if !filt[k].contains_subspace(&filt[k + 1]) {
                    shape_witness = Some(format!("F[{}] not contained in F[{}]", k + 1, k));
                    break;
                }
            }
        }
    }
    checks.push(match shape_witness {
        None => CheckResult::pass("filtration_shape"),
        Some(w) => CheckResult::fail("filtration_shape", w),
    });

    // termination: the final stored layer is zero
    checks.push(match filt.last() {
        Some(last) if last.is_zero() => CheckResult::pass("termination"),
        Some(last) => CheckResult::fail(
            "termination",
            format!("final layer has dimension {}", last.dim()),
        ),
        None => CheckResult::fail("termination", "empty filtration".to_string()),
    });

    // every F[k], k >= 1, is a two-sided ideal
    let mut ideal_witness = None;
    'ideals: for (k, layer) in filt.iter().enumerate().skip(1) {
        for v in layer.basis() {
            for i in 0..n {
                let e = crate::gf2lin::BitVec::unit(n, i);
                if !layer.contains(&p.mul(&e, v)) {
                    ideal_witness =
                        Some(format!("e_{i} * v leaves F[{k}] for a basis vector v"));
                    break 'ideals;
                }
                if !layer.contains(&p.mul(v, &e)) {
                    ideal_witness =
                        Some(format!("v * e_{i} leaves F[{k}] for a basis vector v"));
                    break 'ideals;
                }
            }
        }
    }
    checks.push(match ideal_witness {
        None => CheckResult::pass("filtration_ideals"),
        Some(w) => CheckResult::fail("filtration_ideals", w),
    });

    // multiplicativity: F[i] * F[j] inside F[i+j] (clamped at the last layer)
    let mut mult_witness = None;
    let last = filt.len().saturating_sub(1);
    'mult: for i in 0..filt.len() {
        for j in 0..filt.len() {
            if i + j == 0 {
                continue;
            }
            let target = &filt[(i + j).min(last)];
            for x in filt[i].basis() {
                for y in filt[j].basis() {
                    if !target.contains(&p.mul(x, y)) {
                        mult_witness = Some(format!(
                            "F[{i}] * F[{j}] escapes F[{}]",
                            (i + j).min(last)
                        ));
                        break 'mult;
                    }
                }
            }
        }
    }
    checks.push(match mult_witness {
        None => CheckResult::pass("filtration_multiplicative"),
        Some(w) => CheckResult::fail("filtration_multiplicative", w),
    });

    // unit outside the boundary ideal
    let boundary = p.boundary_ideal();
    checks.push(if n == 0 || !boundary.contains(p.unit()) {
        CheckResult::pass("unit_outside_boundary")
    } else {
        CheckResult::fail("unit_outside_boundary", "unit lies in F[1]".to_string())
    });

    ValidationReport { checks }
}
