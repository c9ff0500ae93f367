//! Structural invariants: canonical generators per filtration layer, the
//! obstruction object (the first nonzero layer quotient as a bimodule), and
//! rigidity islands (unital subalgebras complementing the boundary ideal).

use serde::{Deserialize, Serialize};

use super::monomial::MonomialGroup;
use super::{Phase, PhaseElem};
use crate::budget::Budget;
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};

/// Canonical lifts of a basis of `F[k] / F[k+1]`: scan the RREF basis rows
/// of `F[k]` in pivot order and keep the ones independent modulo `F[k+1]`
/// and the rows already kept. Deterministic.
pub fn layer_lifts(p: &Phase, k: usize) -> Vec<BitVec> {
    let upper = p.layer(k);
    let lower = p.layer(k + 1);
    let mut kept = Vec::new();
    let mut working = lower;
    for row in upper.basis() {
        if !working.contains(row) {
            kept.push(row.clone());
            let mut rows = working.basis().to_vec();
            rows.push(row.clone());
            working = GF2Subspace::from_rows(p.dim(), rows);
        }
    }
    kept
}

/// Canonical generating set: for each layer `k = 0..=depth`, the canonical
/// pivot lifts of a basis of `F[k]/F[k+1]`, in layer order. The result is
/// deterministic and its linear span is already the whole phase, so the
/// closure property is immediate; `generates_whole_phase` verifies it anyway.
pub fn canonical_generators(p: &Phase) -> Vec<PhaseElem> {
    let mut gens = Vec::new();
    for k in 0..p.filtration().len().saturating_sub(1) {
        gens.extend(layer_lifts(p, k));
    }
    gens
}

/// Verify that the given elements generate the phase under sums and
/// products: close the span under pairwise products until stable and check
/// it fills the space.
pub fn generates_whole_phase(p: &Phase, gens: &[PhaseElem]) -> bool {
    let n = p.dim();
    let mut span = GF2Subspace::from_rows(n, gens.to_vec());
    loop {
        let mut rows = span.basis().to_vec();
        for x in span.basis() {
            for y in span.basis() {
                rows.push(p.mul(x, y));
            }
        }
        let next = GF2Subspace::from_rows(n, rows);
        if next.dim() == span.dim() {
            return next.dim() == n;
        }
        span = next;
    }
}

/// The universal obstruction object: zero exactly for strong phases, and
/// otherwise the first layer quotient `F[1]/F[2]` with its bimodule action.
#[derive(Clone, Debug)]
pub enum ObstructionObject {
    Zero,
    Layer {
        /// Least index with a nonzero layer (always 1 for a weak phase).
        layer: usize,
        dim: usize,
        /// Per phase basis element, left action on the layer quotient.
        left_action: Vec<GF2Matrix>,
        /// Per phase basis element, right action on the layer quotient.
        right_action: Vec<GF2Matrix>,
    },
}

impl ObstructionObject {
    pub fn is_zero(&self) -> bool {
        matches!(self, ObstructionObject::Zero)
    }

    pub fn dim(&self) -> usize {
        match self {
            ObstructionObject::Zero => 0,
            ObstructionObject::Layer { dim, .. } => *dim,
        }
    }
}

/// Expresses members of `F[k]` in the lift basis of `F[k]/F[k+1]`.
struct LayerQuotient {
    lifts: Vec<BitVec>,
    solver: GF2Matrix,
}

impl LayerQuotient {
    fn new(p: &Phase, k: usize) -> Self {
        let lifts = layer_lifts(p, k);
        let lower = p.layer(k + 1);
        // columns: lifts first, then a basis of F[k+1]
        let n = p.dim();
        let mut cols: Vec<BitVec> = lifts.clone();
        cols.extend(lower.basis().iter().cloned());
        let mut solver = GF2Matrix::zero(n, cols.len().max(1));
        for (j, c) in cols.iter().enumerate() {
            for i in c.iter_ones() {
                solver.set(i, j, true);
            }
        }
        LayerQuotient { lifts, solver }
    }

    /// Coordinates of `v mod F[k+1]` in the lift basis; `v` must lie in `F[k]`.
    fn express(&self, v: &BitVec) -> BitVec {
        let x = self
            .solver
            .solve(v)
            .expect("vector not in the layer being quotiented");
        x.slice(0, self.lifts.len())
    }
}

/// The canonical obstruction object of a phase. Rigidity equivalence is
/// asserted: the object is zero exactly when the phase is strong.
pub fn obstruction_object(p: &Phase) -> ObstructionObject {
    let boundary = p.boundary_ideal();
    if boundary.is_zero() {
        assert!(p.is_strong());
        return ObstructionObject::Zero;
    }
    assert!(!p.is_strong());
    let k = 1;
    let quot = LayerQuotient::new(p, k);
    let qdim = quot.lifts.len();
    let n = p.dim();
    let mut left_action = Vec::with_capacity(n);
    let mut right_action = Vec::with_capacity(n);
    for i in 0..n {
        let e = BitVec::unit(n, i);
        let mut left = GF2Matrix::zero(qdim, qdim);
        let mut right = GF2Matrix::zero(qdim, qdim);
        for (j, lift) in quot.lifts.iter().enumerate() {
            for r in quot.express(&p.mul(&e, lift)).iter_ones() {
                left.set(r, j, true);
            }
            for r in quot.express(&p.mul(lift, &e)).iter_ones() {
                right.set(r, j, true);
            }
        }
        left_action.push(left);
        right_action.push(right);
    }
    ObstructionObject::Layer {
        layer: k,
        dim: qdim,
        left_action,
        right_action,
    }
}

/// Verdict of the island search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum IslandOutcome {
    Found { island: Vec<Vec<u8>>, dim: usize },
    NoneWithinBudget,
}

impl IslandOutcome {
    pub fn found(island: &GF2Subspace) -> Self {
        IslandOutcome::Found {
            island: island.basis().iter().map(|b| b.to_ints()).collect(),
            dim: island.dim(),
        }
    }

    pub fn subspace(&self, ambient: usize) -> Option<GF2Subspace> {
        match self {
            IslandOutcome::Found { island, .. } => Some(GF2Subspace::from_rows(
                ambient,
                island.iter().map(|r| BitVec::from_ints(r)).collect(),
            )),
            IslandOutcome::NoneWithinBudget => None,
        }
    }
}

/// Check the island contract: a unital subalgebra with `S ∩ F[1] = 0` and
/// `S + F[1]` the whole space.
pub fn is_island(p: &Phase, s: &GF2Subspace) -> bool {
    if !s.contains(p.unit()) {
        return false;
    }
    for x in s.basis() {
        for y in s.basis() {
            if !s.contains(&p.mul(x, y)) {
                return false;
            }
        }
    }
    let boundary = p.boundary_ideal();
    s.intersect(&boundary).is_zero() && s.sum(&boundary).is_full()
}

/// Search for a rigidity island: (a) a recorded witness, (b) a complement
/// subgroup when the basis is monomial, (c) a bounded generic subalgebra
/// search for small phases. Candidates are always re-verified before being
/// returned.
pub fn rigidity_island(p: &Phase, budget: &Budget) -> IslandOutcome {
    let n = p.dim();
    if p.is_strong() {
        return IslandOutcome::found(&GF2Subspace::full(n));
    }

    if let Some(w) = p.witness_island() {
        if is_island(p, w) {
            return IslandOutcome::found(w);
        }
    }

    if let Some(group) = MonomialGroup::from_table(p.table()) {
        if let Some(island) = complement_subgroup_island(p, &group, budget) {
            return IslandOutcome::found(&island);
        }
    }

    if n <= 6 {
        if let Some(island) = generic_island_search(p, budget) {
            return IslandOutcome::found(&island);
        }
    }

    IslandOutcome::NoneWithinBudget
}

/// Indices of group elements congruent to the unit modulo `F[k]`.
pub(crate) fn boundary_subgroup(p: &Phase, group: &MonomialGroup, k: usize) -> Vec<usize> {
    let layer = p.layer(k);
    let n = p.dim();
    (0..group.n)
        .filter(|&g| {
            let mut v = BitVec::unit(n, g);
            v.xor_assign(p.unit());
            layer.contains(&v)
        })
        .collect()
}

fn span_of_indices(n: usize, indices: &[usize]) -> GF2Subspace {
    GF2Subspace::from_rows(n, indices.iter().map(|&g| BitVec::unit(n, g)).collect())
}

/// Find a subgroup `H` with `H ∩ N = 1` and `|H| · |N| = |G|`, where `N` is
/// the subgroup collapsed by the boundary ideal; its span is then an island.
fn complement_subgroup_island(
    p: &Phase,
    group: &MonomialGroup,
    budget: &Budget,
) -> Option<GF2Subspace> {
    let n_members = boundary_subgroup(p, group, 1);
    if n_members.is_empty() || group.n % n_members.len() != 0 {
        return None;
    }
    let target_order = group.n / n_members.len();

    // elementary abelian: extend a basis of N to the whole group and use
    // the complementary generators
    if let Some((_gens, logs)) = group.elementary_abelian_logs() {
        let r = logs[0].len();
        let n_space = GF2Subspace::from_rows(
            r,
            n_members.iter().map(|&g| logs[g].clone()).collect(),
        );
        // greedily extend with generator logs outside N's span
        let mut rows = n_space.basis().to_vec();
        let mut comp_gens: Vec<usize> = Vec::new();
        let mut span = n_space.clone();
        for g in 0..group.n {
            if !span.contains(&logs[g]) {
                comp_gens.push(g);
                rows.push(logs[g].clone());
                span = GF2Subspace::from_rows(r, rows.clone());
                if span.dim() == r {
                    break;
                }
            }
        }
        let members = group.subgroup_closure(&comp_gens);
        if members.len() == target_order {
            let island = span_of_indices(p.dim(), &members);
            if is_island(p, &island) {
                return Some(island);
            }
        }
        return None;
    }

    // small non-abelian groups: bounded backtracking over generator sets
    let mut steps = 0u64;
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(gens) = stack.pop() {
        steps += 1;
        if steps > budget.search_steps {
            return None;
        }
        let members = group.subgroup_closure(&gens);
        if members.iter().filter(|g| n_members.contains(g)).count() > 1 {
            continue; // meets N beyond the identity
        }
        match members.len().cmp(&target_order) {
            std::cmp::Ordering::Equal => {
                let island = span_of_indices(p.dim(), &members);
                if is_island(p, &island) {
                    return Some(island);
                }
            }
            std::cmp::Ordering::Less => {
                let start = gens.last().map(|&g| g + 1).unwrap_or(0);
                for g in start..group.n {
                    if !members.contains(&g) {
                        let mut next = gens.clone();
                        next.push(g);
                        stack.push(next);
                    }
                }
            }
            std::cmp::Ordering::Greater => {}
        }
    }
    None
}

/// Exhaustive subalgebra search for tiny phases: grow unital subalgebras
/// vector by vector in lexicographic order and return the first complement
/// found, which makes the outcome canonical.
fn generic_island_search(p: &Phase, budget: &Budget) -> Option<GF2Subspace> {
    let n = p.dim();
    let boundary = p.boundary_ideal();
    let target = n - boundary.dim();
    let all: Vec<BitVec> = (1u64..(1 << n))
        .map(|bits| {
            let mut v = BitVec::zero(n);
            for i in 0..n {
                if (bits >> i) & 1 == 1 {
                    v.set(i, true);
                }
            }
            v
        })
        .collect();

    let mut steps = 0u64;
    fn algebra_closure(p: &Phase, start: &GF2Subspace) -> GF2Subspace {
        let mut span = start.clone();
        loop {
            let mut rows = span.basis().to_vec();
            for x in span.basis() {
                for y in span.basis() {
                    rows.push(p.mul(x, y));
                }
            }
            let next = GF2Subspace::from_rows(p.dim(), rows);
            if next.dim() == span.dim() {
                return next;
            }
            span = next;
        }
    }

    let seed = GF2Subspace::from_rows(n, vec![p.unit().clone()]);
    let mut stack = vec![(seed, 0usize)];
    while let Some((span, next_idx)) = stack.pop() {
        if span.dim() == target && is_island(p, &span) {
            return Some(span);
        }
        if span.dim() >= target {
            continue;
        }
        // try extending by each later vector; push in reverse so that the
        // lexicographically earliest extension is explored first
        let mut extensions = Vec::new();
        for (idx, v) in all.iter().enumerate().skip(next_idx) {
            if span.contains(v) {
                continue;
            }
            steps += 1;
            if steps > budget.search_steps {
                return None;
            }
            let mut rows = span.basis().to_vec();
            rows.push(v.clone());
            let grown = algebra_closure(p, &GF2Subspace::from_rows(n, rows));
            if grown.dim() <= target && grown.intersect(&boundary).is_zero() {
                extensions.push((grown, idx + 1));
            }
        }
        for ext in extensions.into_iter().rev() {
            stack.push(ext);
        }
    }
    None
}
