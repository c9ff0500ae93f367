//! Heisenberg-type phases over F2[u]/(u^k).
//!
//! For W = R^n ⊕ R^n with R = F2[u]/(u^k), the phase has basis
//! `{Z^a D(w) : a ∈ {0,1}, w ∈ W}` with `Z` central, `Z^2 = 1`, and
//!
//! ```text
//! D(w) D(w') = Z^{Ω(w,w')} D(w + w'),   Ω = λ ∘ ω
//! ```
//!
//! where ω is the standard alternating form `ξ·x' - ξ'·x` and λ the
//! top-coefficient projection. In characteristic 2 the alternating form
//! symmetrizes, so these phases are commutative; the `Polarized` cocycle
//! `λ(ξ·x')` is offered as a genuinely noncommutative variant.
//!
//! The boundary ideal is the two-sided ideal generated by
//! `{D(uw) - D(0) : w ∈ W}` — the kernel of the collapse onto the quotient
//! with `u = 0` — and the filtration is its ideal-power chain.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::gf2lin::{BitVec, GF2Subspace, NilRingElem};
use crate::phase::{
    boundary_quotient, ideal_closure, ideal_power_filtration, iso_search, square_zero_extend,
    validate_phase, AlgebraTable, IsoOutcome, Phase, PhaseError,
};

/// Which 2-cocycle twists the group of translations.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Cocycle {
    /// The alternating form `λ(ξ·x' - ξ'·x)`; symmetric in characteristic 2,
    /// hence a commutative phase.
    Alternating,
    /// The polarized form `λ(ξ·x')`; noncommutative for k ≥ 1, n ≥ 1.
    Polarized,
}

impl fmt::Display for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cocycle::Alternating => write!(f, "alternating"),
            Cocycle::Polarized => write!(f, "polarized"),
        }
    }
}

/// Parameters of a Heisenberg-type phase.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeisenbergSpec {
    pub n: usize,
    pub k: u8,
    pub cocycle: Cocycle,
}

impl HeisenbergSpec {
    pub fn new(n: usize, k: u8) -> Self {
        HeisenbergSpec {
            n,
            k,
            cocycle: Cocycle::Alternating,
        }
    }

    pub fn polarized(n: usize, k: u8) -> Self {
        HeisenbergSpec {
            n,
            k,
            cocycle: Cocycle::Polarized,
        }
    }

    /// Number of points of W = R^n ⊕ R^n.
    pub fn w_count(&self) -> usize {
        1usize << (2 * self.n * self.k as usize)
    }

    /// Phase dimension 2·|W|.
    pub fn dim(&self) -> usize {
        2 * self.w_count()
    }
}

/// Parse `heisenberg:n=<n>,k=<k>[,cocycle=<alternating|polarized>]`.
impl FromStr for HeisenbergSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let body = s
            .strip_prefix("heisenberg:")
            .ok_or_else(|| format!("spec string must start with 'heisenberg:': {s}"))?;
        let mut n = None;
        let mut k = None;
        let mut cocycle = Cocycle::Alternating;
        for part in body.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("malformed spec component: {part}"))?;
            match key {
                "n" => n = Some(value.parse::<usize>().map_err(|e| e.to_string())?),
                "k" => k = Some(value.parse::<u8>().map_err(|e| e.to_string())?),
                "cocycle" => {
                    cocycle = match value {
                        "alternating" => Cocycle::Alternating,
                        "polarized" => Cocycle::Polarized,
                        other => return Err(format!("unknown cocycle: {other}")),
                    }
                }
                other => return Err(format!("unknown spec key: {other}")),
            }
        }
        let n = n.ok_or("missing n")?;
        let k = k.ok_or("missing k")?;
        if n < 1 || k < 1 {
            return Err("n and k must be at least 1".to_string());
        }
        let spec = HeisenbergSpec { n, k, cocycle };
        if spec.dim() > 1 << 12 {
            return Err(format!("phase dimension {} exceeds the 2^12 cap", spec.dim()));
        }
        Ok(spec)
    }
}

/// A point w = (x, ξ) of W = R^n ⊕ R^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhasePoint {
    pub x: Vec<NilRingElem>,
    pub xi: Vec<NilRingElem>,
}

impl PhasePoint {
    pub fn new(x: Vec<NilRingElem>, xi: Vec<NilRingElem>) -> Self {
        assert_eq!(x.len(), xi.len(), "component length mismatch");
        let k = x.first().map(|e| e.order());
        for e in x.iter().chain(xi.iter()) {
            assert_eq!(Some(e.order()), k, "mixed coefficient rings");
        }
        PhasePoint { x, xi }
    }

    /// Decode the point with the given index under the coefficient-bit
    /// enumeration: x[0] in the lowest k bits, then x[1], ..., then ξ[0], ...
    pub fn from_index(spec: &HeisenbergSpec, idx: usize) -> Self {
        let k = spec.k as usize;
        let mask = (1usize << k) - 1;
        let mut coords = Vec::with_capacity(2 * spec.n);
        for t in 0..2 * spec.n {
            let bits = (idx >> (t * k)) & mask;
            coords.push(NilRingElem::new(spec.k, bits as u32));
        }
        let xi = coords.split_off(spec.n);
        PhasePoint { x: coords, xi }
    }

    pub fn index(&self, spec: &HeisenbergSpec) -> usize {
        let k = spec.k as usize;
        let mut idx = 0usize;
        for (t, e) in self.x.iter().chain(self.xi.iter()).enumerate() {
            idx |= (e.bits() as usize) << (t * k);
        }
        idx
    }

    pub fn add(&self, other: &PhasePoint) -> PhasePoint {
        PhasePoint {
            x: self
                .x
                .iter()
                .zip(&other.x)
                .map(|(a, b)| a.add(b))
                .collect(),
            xi: self
                .xi
                .iter()
                .zip(&other.xi)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Scale every coordinate by u.
    pub fn scale_u(&self) -> PhasePoint {
        let k = self.x.first().map(|e| e.order()).unwrap_or(1);
        let u = NilRingElem::u(k);
        PhasePoint {
            x: self.x.iter().map(|a| a.mul(&u)).collect(),
            xi: self.xi.iter().map(|a| a.mul(&u)).collect(),
        }
    }

    fn label(&self) -> String {
        let xs: Vec<String> = self.x.iter().map(|e| e.to_string()).collect();
        let xis: Vec<String> = self.xi.iter().map(|e| e.to_string()).collect();
        format!("{}|{}", xs.join(","), xis.join(","))
    }
}

fn dot(a: &[NilRingElem], b: &[NilRingElem]) -> NilRingElem {
    let k = a.first().map(|e| e.order()).unwrap_or(1);
    let mut acc = NilRingElem::zero(k);
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

/// The form ω(w, w') = ξ·x' - ξ'·x (minus is plus in characteristic 2).
pub fn omega(w: &PhasePoint, w2: &PhasePoint) -> NilRingElem {
    assert_eq!(w.x.len(), w2.x.len(), "spec mismatch");
    dot(&w.xi, &w2.x).add(&dot(&w2.xi, &w.x))
}

/// The polarized form ω'(w, w') = ξ·x'.
pub fn omega_polarized(w: &PhasePoint, w2: &PhasePoint) -> NilRingElem {
    assert_eq!(w.x.len(), w2.x.len(), "spec mismatch");
    dot(&w.xi, &w2.x)
}

/// The GF(2)-valued cocycle Ω = λ ∘ ω (or its polarized variant).
pub fn capital_omega(spec: &HeisenbergSpec, w: &PhasePoint, w2: &PhasePoint) -> bool {
    match spec.cocycle {
        Cocycle::Alternating => omega(w, w2).frobenius_lambda(),
        Cocycle::Polarized => omega_polarized(w, w2).frobenius_lambda(),
    }
}

/// Basis index of Z^a D(w): points first, then their Z-partners.
fn basis_index(spec: &HeisenbergSpec, a: usize, w_idx: usize) -> usize {
    a * spec.w_count() + w_idx
}

/// Construct the Heisenberg-type phase of the given spec, with the
/// ideal-power filtration of its boundary ideal attached.
pub fn heisenberg_phase(spec: &HeisenbergSpec) -> Phase {
    let wc = spec.w_count();
    let dim = spec.dim();

    let mut labels = Vec::with_capacity(dim);
    for a in 0..2 {
        for w_idx in 0..wc {
            let w = PhasePoint::from_index(spec, w_idx);
            labels.push(if a == 0 {
                format!("D({})", w.label())
            } else {
                format!("Z D({})", w.label())
            });
        }
    }

    let points: Vec<PhasePoint> = (0..wc).map(|i| PhasePoint::from_index(spec, i)).collect();
    let mut mul = Vec::with_capacity(dim * dim);
    for a in 0..2usize {
        for wi in 0..wc {
            for b in 0..2usize {
                for wj in 0..wc {
                    let sum = points[wi].add(&points[wj]);
                    let twist = usize::from(capital_omega(spec, &points[wi], &points[wj]));
                    let target =
                        basis_index(spec, (a + b + twist) % 2, sum.index(spec));
                    mul.push(BitVec::unit(dim, target));
                }
            }
        }
    }
    // the loop above enumerates (a, wi) x (b, wj) in row-major basis order
    let unit = BitVec::unit(dim, basis_index(spec, 0, 0));
    let table = AlgebraTable::new(labels, unit.clone(), mul);

    // boundary ideal: generated by D(uw) - D(0) over all w
    let mut gens = Vec::new();
    for w_idx in 0..wc {
        let uw = points[w_idx].scale_u();
        let mut g = BitVec::unit(dim, basis_index(spec, 0, uw.index(spec)));
        g.xor_assign(&unit);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let ideal = if gens.is_empty() {
        GF2Subspace::zero(dim)
    } else {
        ideal_closure(&table, &gens)
    };
    ideal_power_filtration(table, ideal)
        .expect("boundary ideal of the Heisenberg construction is always admissible")
}

/// The flagship family: the strong phase R (k = 1), the weak phase P
/// (k = 2), their square-zero extensions, and the quotient equivalence
/// witness between P's boundary collapse and R.
#[derive(Clone, Debug)]
pub struct FlagshipSuite {
    pub r_strong: Phase,
    pub r_ext: Phase,
    pub p_weak: Phase,
    pub p_ext: Phase,
    /// Search outcome for boundary_quotient(P) ≅ R.
    pub quotient_iso: IsoOutcome,
}

/// Build the full flagship family for the given n and extension dimension,
/// validating every phase on the way.
pub fn flagship_suite(
    n: usize,
    b_dim: usize,
    budget: &crate::budget::Budget,
) -> Result<FlagshipSuite, PhaseError> {
    let r_strong = heisenberg_phase(&HeisenbergSpec::new(n, 1));
    let p_weak = heisenberg_phase(&HeisenbergSpec::new(n, 2));
    let r_ext = square_zero_extend(&r_strong, b_dim, None)?;
    let p_ext = square_zero_extend(&p_weak, b_dim, None)?;

    for (name, phase) in [
        ("R", &r_strong),
        ("R_ext", &r_ext),
        ("P", &p_weak),
        ("P_ext", &p_ext),
    ] {
        let report = validate_phase(phase);
        if !report.is_valid() {
            return Err(PhaseError::InvalidPhase {
                first_failure: format!(
                    "{name}: {}",
                    report.first_failure().unwrap().name
                ),
            });
        }
    }

    let (p_quotient, _) = boundary_quotient(&p_weak);
    let quotient_iso = iso_search(&p_quotient, &r_strong, budget);

    Ok(FlagshipSuite {
        r_strong,
        r_ext,
        p_weak,
        p_ext,
        quotient_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::gf2lin::subspace_mul;
    use crate::phase::Dichotomy;

    fn pt(spec: &HeisenbergSpec, x: u32, xi: u32) -> PhasePoint {
        PhasePoint::new(
            vec![NilRingElem::new(spec.k, x)],
            vec![NilRingElem::new(spec.k, xi)],
        )
    }

    #[test]
    fn omega_is_alternating() {
        let spec = HeisenbergSpec::new(1, 2);
        for i in 0..spec.w_count() {
            let w = PhasePoint::from_index(&spec, i);
            assert!(omega(&w, &w).is_zero());
        }
    }

    #[test]
    fn omega_values_by_substitution() {
        let spec = HeisenbergSpec::new(1, 2);
        // ω((1,0),(0,1)) = 0*0 - 1*1 = 1
        assert_eq!(
            omega(&pt(&spec, 1, 0), &pt(&spec, 0, 1)),
            NilRingElem::one(2)
        );
        // ω((u,0),(0,1)) = 0*0 - 1*u = u
        assert_eq!(omega(&pt(&spec, 2, 0), &pt(&spec, 0, 1)), NilRingElem::u(2));
    }

    #[test]
    fn capital_omega_values() {
        let spec = HeisenbergSpec::new(1, 2);
        for i in 0..spec.w_count() {
            let w = PhasePoint::from_index(&spec, i);
            assert!(!capital_omega(&spec, &w, &w));
        }
        // λ(1) = 0 at k = 2
        assert!(!capital_omega(&spec, &pt(&spec, 1, 0), &pt(&spec, 0, 1)));
        // λ(u) = 1
        assert!(capital_omega(&spec, &pt(&spec, 2, 0), &pt(&spec, 0, 1)));
    }

    #[test]
    fn cocycle_condition_exhaustive() {
        // Ω(w,w') + Ω(w+w',w'') = Ω(w',w'') + Ω(w,w'+w'') for n=1, k<=2,
        // both cocycle choices; this is associativity of the twisted product
        for k in 1..=2u8 {
            for spec in [HeisenbergSpec::new(1, k), HeisenbergSpec::polarized(1, k)] {
                let wc = spec.w_count();
                for i in 0..wc {
                    for j in 0..wc {
                        for l in 0..wc {
                            let (w, w2, w3) = (
                                PhasePoint::from_index(&spec, i),
                                PhasePoint::from_index(&spec, j),
                                PhasePoint::from_index(&spec, l),
                            );
                            let lhs = capital_omega(&spec, &w, &w2)
                                ^ capital_omega(&spec, &w.add(&w2), &w3);
                            let rhs = capital_omega(&spec, &w2, &w3)
                                ^ capital_omega(&spec, &w, &w2.add(&w3));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn k1_phase_is_strong_dim_8() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 1));
        assert_eq!(p.dim(), 8);
        assert!(p.is_strong());
        assert_eq!(p.layer_dims(), vec![8, 0]);
        assert!(validate_phase(&p).is_valid());
    }

    #[test]
    fn k2_phase_dimensions() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        assert_eq!(p.dim(), 32);
        assert_eq!(p.layer_dims(), vec![32, 24, 8, 0]);
        assert_eq!(p.boundary_depth(), 2);
        assert_eq!(p.dichotomy(), Dichotomy::Weak { depth: 2 });
    }

    #[test]
    fn k2_phase_validates() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let report = validate_phase(&p);
        assert!(report.is_valid(), "{}", report.summary());
    }

    #[test]
    fn boundary_ideal_matches_collapse_kernel() {
        // independent route: the boundary ideal must equal the kernel of
        // the linear map collapsing each coset of the subgroup
        // N = {D(v) : v ∈ uW} inside the basis group. Cosets are computed
        // straight from the twisted group law, not from the ideal closure.
        let spec = HeisenbergSpec::new(1, 2);
        let p = heisenberg_phase(&spec);
        let wc = spec.w_count();
        let uw_indices: Vec<usize> = (0..wc)
            .map(|i| PhasePoint::from_index(&spec, i).scale_u().index(&spec))
            .collect();
        // group law on basis indices (a, w): note the cocycle twist can
        // flip the Z-exponent within a coset
        let coset_of = |a: usize, wi: usize| -> Vec<usize> {
            let w = PhasePoint::from_index(&spec, wi);
            let mut members: Vec<usize> = uw_indices
                .iter()
                .map(|&vi| {
                    let v = PhasePoint::from_index(&spec, vi);
                    let twist = usize::from(capital_omega(&spec, &w, &v));
                    ((a + twist) % 2) * wc + w.add(&v).index(&spec)
                })
                .collect();
            members.sort_unstable();
            members
        };
        let mut class_of = vec![usize::MAX; 2 * wc];
        let mut classes = 0usize;
        for a in 0..2 {
            for i in 0..wc {
                if class_of[a * wc + i] != usize::MAX {
                    continue;
                }
                for m in coset_of(a, i) {
                    class_of[m] = classes;
                }
                classes += 1;
            }
        }
        let mut collapse = crate::gf2lin::GF2Matrix::zero(classes, 2 * wc);
        for (col, &cls) in class_of.iter().enumerate() {
            assert_ne!(cls, usize::MAX);
            collapse.set(cls, col, true);
        }
        let kernel = collapse.kernel();
        assert_eq!(classes, 8);
        assert_eq!(kernel.dim(), 24);
        assert_eq!(kernel, p.boundary_ideal());
    }

    #[test]
    fn boundary_ideal_square_has_dim_8() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let ideal = p.boundary_ideal();
        let sq = subspace_mul(&ideal, &ideal, |x, y| p.mul(x, y));
        assert_eq!(sq.dim(), 8);
        let cube = subspace_mul(&sq, &ideal, |x, y| p.mul(x, y));
        assert!(cube.is_zero());
    }

    #[test]
    fn every_d_squares_to_unit() {
        // D(w) D(w) = Z^{Ω(w,w)} D(0) = unit, for every w (alternating)
        let spec = HeisenbergSpec::new(1, 2);
        let p = heisenberg_phase(&spec);
        for i in 0..p.dim() {
            let e = BitVec::unit(p.dim(), i);
            assert_eq!(&p.mul(&e, &e), p.unit(), "basis element {i}");
        }
    }

    #[test]
    fn alternating_phase_is_commutative_polarized_is_not() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let n = p.dim();
        assert!((0..n).all(|i| (0..n).all(|j| p.mul_basis(i, j) == p.mul_basis(j, i))));
        let q = heisenberg_phase(&HeisenbergSpec::polarized(1, 1));
        let m = q.dim();
        assert!((0..m).any(|i| (0..m).any(|j| q.mul_basis(i, j) != q.mul_basis(j, i))));
    }

    #[test]
    fn polarized_phases_validate() {
        for k in 1..=2u8 {
            let p = heisenberg_phase(&HeisenbergSpec::polarized(1, k));
            let report = validate_phase(&p);
            assert!(report.is_valid(), "k={k}: {}", report.summary());
        }
    }

    #[test]
    fn no_basis_collisions() {
        let spec = HeisenbergSpec::new(1, 2);
        let p = heisenberg_phase(&spec);
        let mut labels = p.labels().to_vec();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), p.dim());
    }

    #[test]
    fn spec_string_roundtrip() {
        let spec: HeisenbergSpec = "heisenberg:n=1,k=2".parse().unwrap();
        assert_eq!(spec, HeisenbergSpec::new(1, 2));
        let spec: HeisenbergSpec = "heisenberg:n=1,k=1,cocycle=polarized".parse().unwrap();
        assert_eq!(spec, HeisenbergSpec::polarized(1, 1));
        assert!("heisenberg:n=0,k=1".parse::<HeisenbergSpec>().is_err());
        assert!("heisenberg:n=2,k=4".parse::<HeisenbergSpec>().is_err());
        assert!("nonsense".parse::<HeisenbergSpec>().is_err());
    }

    #[test]
    fn flagship_suite_dimensions_and_depths() {
        let suite = flagship_suite(1, 1, &Budget::default()).unwrap();
        assert_eq!(suite.r_strong.dim(), 8);
        assert_eq!(suite.p_weak.dim(), 32);
        assert_eq!(suite.p_ext.dim(), 33);
        assert_eq!(suite.r_strong.boundary_depth(), 0);
        assert_eq!(suite.p_weak.boundary_depth(), 2);
        assert_eq!(suite.p_ext.boundary_depth(), 2);
        assert_eq!(suite.r_ext.boundary_depth(), 1);
        // extension boundary layer strictly larger: 25 vs 24
        assert_eq!(suite.p_weak.layer_dims()[1], 24);
        assert_eq!(suite.p_ext.layer_dims()[1], 25);
        assert!(matches!(suite.quotient_iso, IsoOutcome::Found(_)));
    }

    #[test]
    fn extension_by_two_has_layer_26() {
        let p = heisenberg_phase(&HeisenbergSpec::new(1, 2));
        let e = square_zero_extend(&p, 2, None).unwrap();
        assert_eq!(e.layer_dims()[1], 26);
    }
}
