//! Equivalence of phases: certification of candidate maps and a budgeted
//! search for witnesses.
//!
//! `iso_certify` is the only arbiter: every route in `iso_search` ends by
//! certifying its candidate, so a `Found` verdict always carries a checked
//! witness. Negative verdicts cite a genuinely invariant quantity or an
//! exhaustive search; anything else is reported as `Unknown` rather than
//! silently guessed.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::MonomialGroup;
use super::structure::canonical_generators;
use super::{Degree, Phase, PhaseMap};
use crate::budget::Budget;
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};

/// Why a candidate map is not a phase equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsoFailure {
    ShapeMismatch,
    NotBijective,
    UnitMismatch,
    Multiplicativity { i: usize, j: usize },
    FiltrationLayer { layer: usize },
}

impl fmt::Display for IsoFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoFailure::ShapeMismatch => write!(f, "dimension mismatch"),
            IsoFailure::NotBijective => write!(f, "matrix is not bijective"),
            IsoFailure::UnitMismatch => write!(f, "unit is not preserved"),
            IsoFailure::Multiplicativity { i, j } => {
                write!(f, "multiplicativity fails on basis pair ({i},{j})")
            }
            IsoFailure::FiltrationLayer { layer } => {
                write!(f, "filtration layer {layer} is not preserved")
            }
        }
    }
}

/// Certify that a map is a phase equivalence: bijective, unital,
/// multiplicative on all basis pairs, and carrying each filtration layer
/// onto the corresponding layer of the target (which covers both
/// directions for a bijection).
pub fn iso_certify(m: &PhaseMap) -> Result<(), IsoFailure> {
    let n = m.source.dim();
    if m.target.dim() != n {
        return Err(IsoFailure::ShapeMismatch);
    }
    if m.matrix.rank() != n {
        return Err(IsoFailure::NotBijective);
    }
    if &m.apply(m.source.unit()) != m.target.unit() {
        return Err(IsoFailure::UnitMismatch);
    }
    for i in 0..n {
        let mi = m.apply(&BitVec::unit(n, i));
        for j in 0..n {
            let mj = m.apply(&BitVec::unit(n, j));
            let lhs = m.target.mul(&mi, &mj);
            let rhs = m.apply(m.source.mul_basis(i, j));
            if lhs != rhs {
                return Err(IsoFailure::Multiplicativity { i, j });
            }
        }
    }
    let layers = m.source.filtration().len().max(m.target.filtration().len());
    for k in 0..layers {
        let src = m.source.layer(k);
        let image = GF2Subspace::from_rows(
            n,
            src.basis().iter().map(|v| m.apply(v)).collect::<Vec<_>>(),
        );
        if image != m.target.layer(k) {
            return Err(IsoFailure::FiltrationLayer { layer: k });
        }
    }
    Ok(())
}

/// Cheap isomorphism invariants of a filtered phase. Each field is
/// preserved by every certified equivalence, so a mismatch is a sound
/// negative witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseInvariants {
    pub dim: usize,
    pub layer_dims: Vec<usize>,
    pub commutative: bool,
    pub center_dim: usize,
    /// Rank of the squaring map, which is linear for commutative algebras
    /// in characteristic 2.
    pub squaring_rank: Option<usize>,
    /// Dimensions of (ker Sq) ∩ F[k] per stored layer, commutative case.
    pub squaring_kernel_layer_dims: Option<Vec<usize>>,
    /// Dimension of the two-sided annihilator of the boundary ideal.
    pub boundary_annihilator_dim: usize,
}

/// Compute the invariant vector used for fast negative answers.
pub fn invariant_vector(p: &Phase) -> PhaseInvariants {
    let n = p.dim();
    let commutative =
        (0..n).all(|i| (0..n).all(|j| p.mul_basis(i, j) == p.mul_basis(j, i)));

    // center: kernel of the stacked (L_i - R_i)
    let center_dim = if n == 0 {
        0
    } else {
        let mut stacked = GF2Matrix::zero(n * n, n);
        for i in 0..n {
            let e = BitVec::unit(n, i);
            let l = p.table().left_mul_matrix(&e);
            let r = p.table().right_mul_matrix(&e);
            let d = l.add(&r);
            for row in 0..n {
                for col in 0..n {
                    if d.get(row, col) {
                        stacked.set(i * n + row, col, true);
                    }
                }
            }
        }
        stacked.kernel().dim()
    };

    let (squaring_rank, squaring_kernel_layer_dims) = if commutative && n > 0 {
        let mut sq = GF2Matrix::zero(n, n);
        for i in 0..n {
            for r in p.mul_basis(i, i).iter_ones() {
                sq.set(r, i, true);
            }
        }
        let kernel = sq.kernel();
        let per_layer = (0..p.filtration().len())
            .map(|k| kernel.intersect(&p.layer(k)).dim())
            .collect();
        (Some(n - kernel.dim()), Some(per_layer))
    } else {
        (None, None)
    };

    let boundary = p.boundary_ideal();
    let boundary_annihilator_dim = if boundary.is_zero() || n == 0 {
        n
    } else {
        let rows = 2 * boundary.dim() * n;
        let mut stacked = GF2Matrix::zero(rows, n);
        for (bi, v) in boundary.basis().iter().enumerate() {
            // x * v = 0 and v * x = 0, as linear conditions on x
            let rv = p.table().right_mul_matrix(v); // x -> x*v
            let lv = p.table().left_mul_matrix(v); // x -> v*x
            for row in 0..n {
                for col in 0..n {
                    if rv.get(row, col) {
                        stacked.set((2 * bi) * n + row, col, true);
                    }
                    if lv.get(row, col) {
                        stacked.set((2 * bi + 1) * n + row, col, true);
                    }
                }
            }
        }
        stacked.kernel().dim()
    };

    PhaseInvariants {
        dim: n,
        layer_dims: p.layer_dims(),
        commutative,
        center_dim,
        squaring_rank,
        squaring_kernel_layer_dims,
        boundary_annihilator_dim,
    }
}

fn describe_mismatch(a: &PhaseInvariants, b: &PhaseInvariants) -> String {
    if a.dim != b.dim {
        return format!("dimension {} vs {}", a.dim, b.dim);
    }
    if a.layer_dims != b.layer_dims {
        return format!("layer dimension vector {:?} vs {:?}", a.layer_dims, b.layer_dims);
    }
    if a.commutative != b.commutative {
        return "commutativity flag".to_string();
    }
    if a.center_dim != b.center_dim {
        return format!("center dimension {} vs {}", a.center_dim, b.center_dim);
    }
    if a.squaring_rank != b.squaring_rank {
        return "squaring map rank".to_string();
    }
    if a.squaring_kernel_layer_dims != b.squaring_kernel_layer_dims {
        return "squaring kernel layer profile".to_string();
    }
    if a.boundary_annihilator_dim != b.boundary_annihilator_dim {
        return "boundary annihilator dimension".to_string();
    }
    "invariant mismatch".to_string()
}

/// Outcome of the equivalence search: three-valued, never a silent timeout.
#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Found(PhaseMap),
    No { reason: String },
    Unknown { reason: String },
}

impl IsoOutcome {
    pub fn witness(&self) -> Option<&PhaseMap> {
        match self {
            IsoOutcome::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            IsoOutcome::Found(_) => "equivalent",
            IsoOutcome::No { .. } => "no",
            IsoOutcome::Unknown { .. } => "unknown",
        }
    }
}

/// Every element of F2^n, in lexicographic bit order. Only for small n.
fn all_vectors(n: usize) -> Vec<BitVec> {
    assert!(n <= 20, "element enumeration out of range");
    (0u64..(1 << n))
        .map(|bits| {
            let mut v = BitVec::zero(n);
            for i in 0..n {
                if (bits >> i) & 1 == 1 {
                    v.set(i, true);
                }
            }
            v
        })
        .collect()
}

/// Multiplicative order of `y` in `q` when `y` is a unit of order dividing
/// `bound`; None if no power up to `bound` reaches the unit.
fn order_up_to(q: &Phase, y: &BitVec, bound: usize) -> Option<usize> {
    let mut x = y.clone();
    for ord in 1..=bound {
        if &x == q.unit() {
            return Some(ord);
        }
        x = q.mul(&x, y);
    }
    None
}

/// Degree of `y - unit`, the pruning class used for generator images.
fn unit_offset_degree(p: &Phase, g: &BitVec) -> Degree {
    let mut v = g.clone();
    v.xor_assign(p.unit());
    p.defect_degree(&v)
}

/// Route for two monomial phases whose groups are elementary abelian: map
/// GF(2) coordinates adapted to the chain of subgroups collapsed by each
/// filtration layer. Deterministic; the candidate is certified before use.
fn elementary_abelian_route(
    p: &Phase,
    q: &Phase,
    gp: &MonomialGroup,
    gq: &MonomialGroup,
) -> Option<PhaseMap> {
    let (_, logs_p) = gp.elementary_abelian_logs()?;
    let (_, logs_q) = gq.elementary_abelian_logs()?;
    let r = logs_p.first()?.len();
    if logs_q.first()?.len() != r {
        return None;
    }

    let depth = p.boundary_depth().max(q.boundary_depth());
    let adapted = |phase: &Phase, group: &MonomialGroup, logs: &[BitVec]| -> Option<Vec<BitVec>> {
        let mut basis: Vec<BitVec> = Vec::new();
        let mut span = GF2Subspace::zero(r);
        for k in (0..=depth).rev() {
            let members = super::structure::boundary_subgroup(phase, group, k.max(1));
            let sub = if k == 0 {
                GF2Subspace::full(r)
            } else {
                GF2Subspace::from_rows(r, members.iter().map(|&g| logs[g].clone()).collect())
            };
            for row in sub.basis() {
                if !span.contains(row) {
                    basis.push(row.clone());
                    let mut rows = span.basis().to_vec();
                    rows.push(row.clone());
                    span = GF2Subspace::from_rows(r, rows);
                }
            }
        }
        (basis.len() == r).then_some(basis)
    };

    let basis_p = adapted(p, gp, &logs_p)?;
    let basis_q = adapted(q, gq, &logs_q)?;

    let mut a_p = GF2Matrix::zero(r, r);
    let mut a_q = GF2Matrix::zero(r, r);
    for j in 0..r {
        for i in basis_p[j].iter_ones() {
            a_p.set(i, j, true);
        }
        for i in basis_q[j].iter_ones() {
            a_q.set(i, j, true);
        }
    }
    let t = a_q.mul(&a_p.inverse()?);

    let by_log = MonomialGroup::element_by_log(&logs_q);
    let n = p.dim();
    let mut matrix = GF2Matrix::zero(n, n);
    for g in 0..n {
        let target_log = t.mul_vec(&logs_p[g]);
        let h = *by_log.get(&target_log)?;
        matrix.set(h, g, true);
    }
    let map = PhaseMap::new(p.clone(), q.clone(), matrix);
    iso_certify(&map).ok().map(|_| map)
}

enum RouteResult {
    Found(PhaseMap),
    ExhaustedNo,
    BudgetExhausted,
    NotApplicable,
}

/// Backtracking over images of the group generators of a monomial source.
/// When the full element space of the target is enumerable the search is
/// complete, so exhaustion is a sound "no".
fn group_generator_search(
    p: &Phase,
    q: &Phase,
    group: &MonomialGroup,
    budget: &Budget,
    steps: &mut u64,
) -> RouteResult {
    let gens = group.greedy_generators();
    let n = p.dim();

    let (candidates, complete): (Vec<BitVec>, bool) = if q.dim() <= 12 {
        (all_vectors(q.dim()), true)
    } else if MonomialGroup::from_table(q.table()).is_some() {
        ((0..q.dim()).map(|i| BitVec::unit(q.dim(), i)).collect(), false)
    } else {
        return RouteResult::NotApplicable;
    };

    // per-generator pruning data
    let gen_orders: Vec<usize> = gens.iter().map(|&g| group.order_of(g)).collect();
    let gen_degrees: Vec<Degree> = gens
        .iter()
        .map(|&g| unit_offset_degree(p, &BitVec::unit(n, g)))
        .collect();

    fn extend_images(
        q: &Phase,
        group: &MonomialGroup,
        gens: &[usize],
        images: &[BitVec],
    ) -> Option<Vec<BitVec>> {
        let mut out: Vec<Option<BitVec>> = vec![None; group.n];
        out[group.unit] = Some(q.unit().clone());
        let mut frontier = vec![group.unit];
        while let Some(x) = frontier.pop() {
            let yx = out[x].clone().unwrap();
            for (gi, &g) in gens.iter().enumerate() {
                let nx = group.mul(x, g);
                let y = q.mul(&yx, &images[gi]);
                match &out[nx] {
                    Some(existing) => {
                        if existing != &y {
                            return None;
                        }
                    }
                    None => {
                        out[nx] = Some(y);
                        frontier.push(nx);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    fn backtrack(
        p: &Phase,
        q: &Phase,
        group: &MonomialGroup,
        gens: &[usize],
        gen_orders: &[usize],
        gen_degrees: &[Degree],
        candidates: &[BitVec],
        chosen: &mut Vec<BitVec>,
        budget: &Budget,
        steps: &mut u64,
    ) -> RouteResult {
        if chosen.len() == gens.len() {
            let Some(images) = extend_images(q, group, gens, chosen) else {
                return RouteResult::ExhaustedNo;
            };
            let mut matrix = GF2Matrix::zero(q.dim(), p.dim());
            for (g, y) in images.iter().enumerate() {
                for i in y.iter_ones() {
                    matrix.set(i, g, true);
                }
            }
            let map = PhaseMap::new(p.clone(), q.clone(), matrix);
            if iso_certify(&map).is_ok() {
                return RouteResult::Found(map);
            }
            return RouteResult::ExhaustedNo;
        }
        let t = chosen.len();
        for y in candidates {
            *steps += 1;
            if *steps > budget.iso_steps {
                return RouteResult::BudgetExhausted;
            }
            if order_up_to(q, y, gen_orders[t]) != Some(gen_orders[t]) {
                continue;
            }
            if unit_offset_degree(q, y) != gen_degrees[t] {
                continue;
            }
            chosen.push(y.clone());
            match backtrack(
                p, q, group, gens, gen_orders, gen_degrees, candidates, chosen, budget, steps,
            ) {
                RouteResult::Found(m) => return RouteResult::Found(m),
                RouteResult::BudgetExhausted => return RouteResult::BudgetExhausted,
                _ => {}
            }
            chosen.pop();
        }
        RouteResult::ExhaustedNo
    }

    let mut chosen = Vec::new();
    match backtrack(
        p,
        q,
        group,
        &gens,
        &gen_orders,
        &gen_degrees,
        &candidates,
        &mut chosen,
        budget,
        steps,
    ) {
        RouteResult::ExhaustedNo if !complete => RouteResult::NotApplicable,
        other => other,
    }
}

/// Complete backtracking for tiny non-monomial sources: assign target
/// elements of matching defect degree to the canonical generators (a basis
/// adapted to the layers) with multiplicative consistency pruning.
fn linear_generator_search(
    p: &Phase,
    q: &Phase,
    budget: &Budget,
    steps: &mut u64,
) -> RouteResult {
    if p.dim() > 6 || q.dim() > 12 {
        return RouteResult::NotApplicable;
    }
    let gens = canonical_generators(p);
    let degrees: Vec<Degree> = gens.iter().map(|g| p.defect_degree(g)).collect();
    let candidates = all_vectors(q.dim());

    struct Frame {
        chosen: Vec<BitVec>,
    }

    fn expressible(
        p: &Phase,
        gens: &[BitVec],
        chosen_count: usize,
        v: &BitVec,
    ) -> Option<BitVec> {
        // solve v = sum c_i gens[i] over the chosen prefix
        let n = p.dim();
        let mut m = GF2Matrix::zero(n, chosen_count);
        for (j, g) in gens.iter().take(chosen_count).enumerate() {
            for i in g.iter_ones() {
                m.set(i, j, true);
            }
        }
        let sol = m.solve(v)?;
        // verify (solve returns a particular solution only when consistent)
        let mut acc = BitVec::zero(n);
        for j in sol.iter_ones() {
            acc.xor_assign(&gens[j]);
        }
        (&acc == v).then_some(sol)
    }

    fn consistent(p: &Phase, q: &Phase, gens: &[BitVec], frame: &Frame) -> bool {
        let t = frame.chosen.len();
        // products among chosen generators that already lie in their span
        for a in 0..t {
            for b in 0..t {
                if a != t - 1 && b != t - 1 {
                    continue; // only re-check pairs involving the newest one
                }
                let prod = p.mul(&gens[a], &gens[b]);
                if let Some(coords) = expressible(p, gens, t, &prod) {
                    let lhs = q.mul(&frame.chosen[a], &frame.chosen[b]);
                    let mut rhs = BitVec::zero(q.dim());
                    for j in coords.iter_ones() {
                        rhs.xor_assign(&frame.chosen[j]);
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn backtrack(
        p: &Phase,
        q: &Phase,
        gens: &[BitVec],
        degrees: &[Degree],
        candidates: &[BitVec],
        frame: &mut Frame,
        budget: &Budget,
        steps: &mut u64,
    ) -> RouteResult {
        if frame.chosen.len() == gens.len() {
            let n = p.dim();
            let mut g_mat = GF2Matrix::zero(n, n);
            let mut y_mat = GF2Matrix::zero(q.dim(), n);
            for j in 0..n {
                for i in gens[j].iter_ones() {
                    g_mat.set(i, j, true);
                }
                for i in frame.chosen[j].iter_ones() {
                    y_mat.set(i, j, true);
                }
            }
            let Some(g_inv) = g_mat.inverse() else {
                return RouteResult::ExhaustedNo;
            };
            let map = PhaseMap::new(p.clone(), q.clone(), y_mat.mul(&g_inv));
            if iso_certify(&map).is_ok() {
                return RouteResult::Found(map);
            }
            return RouteResult::ExhaustedNo;
        }
        let t = frame.chosen.len();
        for y in candidates {
            *steps += 1;
            if *steps > budget.iso_steps {
                return RouteResult::BudgetExhausted;
            }
            if q.defect_degree(y) != degrees[t] {
                continue;
            }
            frame.chosen.push(y.clone());
            if consistent(p, q, gens, frame) {
                match backtrack(p, q, gens, degrees, candidates, frame, budget, steps) {
                    RouteResult::Found(m) => return RouteResult::Found(m),
                    RouteResult::BudgetExhausted => return RouteResult::BudgetExhausted,
                    _ => {}
                }
            }
            frame.chosen.pop();
        }
        RouteResult::ExhaustedNo
    }

    let mut frame = Frame { chosen: Vec::new() };
    backtrack(p, q, &gens, &degrees, &candidates, &mut frame, budget, steps)
}

/// Search for a certified equivalence between two phases.
///
/// Fast negative via the invariant vector; on a match, a deterministic
/// witness construction for elementary abelian monomial phases, then
/// budgeted backtracking over generator images. Verdicts are `Found` with
/// a certified witness, `No` with the distinguishing invariant (or an
/// exhaustive search), or `Unknown` when the budget ran out.
pub fn iso_search(p: &Phase, q: &Phase, budget: &Budget) -> IsoOutcome {
    let inv_p = invariant_vector(p);
    let inv_q = invariant_vector(q);
    if inv_p != inv_q {
        return IsoOutcome::No {
            reason: describe_mismatch(&inv_p, &inv_q),
        };
    }

    // bit-identical phases (and lucky coincidences) are caught immediately
    let id = PhaseMap::new(p.clone(), q.clone(), GF2Matrix::identity(p.dim()));
    if iso_certify(&id).is_ok() {
        return IsoOutcome::Found(id);
    }

    let gp = MonomialGroup::from_table(p.table());
    let gq = MonomialGroup::from_table(q.table());

    if let (Some(gp), Some(gq)) = (gp.as_ref(), gq.as_ref()) {
        if let Some(map) = elementary_abelian_route(p, q, gp, gq) {
            return IsoOutcome::Found(map);
        }
    }

    let mut steps = 0u64;
    // prefer a monomial side as the search source; invert at the end if the
    // roles were swapped
    let (src, tgt, swapped, src_group) = if let Some(g) = gp {
        (p, q, false, Some(g))
    } else if let Some(g) = gq {
        (q, p, true, Some(g))
    } else {
        (p, q, false, None)
    };

    let result = match src_group {
        Some(group) => group_generator_search(src, tgt, &group, budget, &mut steps),
        None => linear_generator_search(src, tgt, budget, &mut steps),
    };

    match result {
        RouteResult::Found(map) => {
            if swapped {
                match map.matrix.inverse() {
                    Some(inv) => {
                        let back = PhaseMap::new(p.clone(), q.clone(), inv);
                        if iso_certify(&back).is_ok() {
                            IsoOutcome::Found(back)
                        } else {
                            IsoOutcome::Unknown {
                                reason: "witness inversion failed certification".to_string(),
                            }
                        }
                    }
                    None => IsoOutcome::Unknown {
                        reason: "witness not invertible".to_string(),
                    },
                }
            } else {
                IsoOutcome::Found(map)
            }
        }
        RouteResult::ExhaustedNo => IsoOutcome::No {
            reason: "exhaustive generator-image search found no witness".to_string(),
        },
        RouteResult::BudgetExhausted => IsoOutcome::Unknown {
            reason: format!("search budget exhausted after {steps} steps"),
        },
        RouteResult::NotApplicable => IsoOutcome::Unknown {
            reason: "no applicable search route for phases of this size".to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::{dual_numbers, split_pair, unit_phase};

    #[test]
    fn identity_certifies() {
        let p = dual_numbers();
        assert!(iso_certify(&PhaseMap::identity(&p)).is_ok());
    }

    #[test]
    fn no_bijection_makes_dual_numbers_split() {
        // all 6 invertible 2x2 matrices fail certification, and every
        // unit-preserving one fails with a multiplicativity witness
        let d = dual_numbers();
        let s = split_pair();
        let mut invertible = 0;
        let mut multiplicativity_witnesses = 0;
        for bits in 0u8..16 {
            let m = GF2Matrix::from_ints(
                2,
                2,
                &[
                    vec![bits & 1, (bits >> 1) & 1],
                    vec![(bits >> 2) & 1, (bits >> 3) & 1],
                ],
            );
            if m.rank() != 2 {
                continue;
            }
            invertible += 1;
            let map = PhaseMap::new(d.clone(), s.clone(), m);
            let preserves_unit = &map.apply(d.unit()) == s.unit();
            let err = iso_certify(&map).unwrap_err();
            if preserves_unit {
                assert!(
                    matches!(err, IsoFailure::Multiplicativity { .. }),
                    "unexpected failure kind: {err}"
                );
                multiplicativity_witnesses += 1;
            } else {
                assert_eq!(err, IsoFailure::UnitMismatch);
            }
        }
        assert_eq!(invertible, 6);
        assert!(multiplicativity_witnesses > 0);
    }

    #[test]
    fn search_finds_identity_on_same_phase() {
        let p = dual_numbers();
        match iso_search(&p, &p, &Budget::default()) {
            IsoOutcome::Found(m) => {
                assert_eq!(m.matrix, GF2Matrix::identity(2));
            }
            other => panic!("expected Found, got {:?}", other.verdict()),
        }
    }

    #[test]
    fn search_rejects_on_layer_dims() {
        let d = dual_numbers();
        let s = split_pair();
        match iso_search(&d, &s, &Budget::default()) {
            IsoOutcome::No { reason } => {
                assert!(reason.contains("layer"), "reason was: {reason}");
            }
            other => panic!("expected No, got {:?}", other.verdict()),
        }
    }

    #[test]
    fn zero_budget_yields_unknown_not_false_negative() {
        // two relabelings of the same 2-dim phase with a nontrivial witness:
        // dual numbers with basis swapped
        let d = dual_numbers();
        let table = crate::phase::AlgebraTable::new(
            vec!["eps".into(), "1".into()],
            BitVec::from_ints(&[0, 1]),
            vec![
                BitVec::from_ints(&[0, 0]),
                BitVec::from_ints(&[1, 0]),
                BitVec::from_ints(&[1, 0]),
                BitVec::from_ints(&[0, 1]),
            ],
        );
        let swapped = Phase::from_parts(
            table,
            vec![
                GF2Subspace::full(2),
                GF2Subspace::from_rows(2, vec![BitVec::from_ints(&[1, 0])]),
                GF2Subspace::zero(2),
            ],
            None,
        );
        match iso_search(&d, &swapped, &Budget::default()) {
            IsoOutcome::Found(m) => assert!(iso_certify(&m).is_ok()),
            other => panic!("expected Found, got {:?}", other.verdict()),
        }
        match iso_search(&d, &swapped, &Budget::zero()) {
            IsoOutcome::Unknown { .. } => {}
            other => panic!("expected Unknown at zero budget, got {:?}", other.verdict()),
        }
    }

    #[test]
    fn unit_phases_trivially_equivalent() {
        let a = unit_phase();
        let b = unit_phase();
        assert!(matches!(
            iso_search(&a, &b, &Budget::default()),
            IsoOutcome::Found(_)
        ));
    }
}
