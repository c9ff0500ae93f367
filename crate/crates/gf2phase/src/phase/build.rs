//! Phase constructors and structural transformations: ideal-power
//! filtrations, boundary quotients, square-zero extensions, and filtration
//! induction from hints.

use super::{AlgebraTable, Phase, PhaseError, PhaseMap};
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};

/// The one-dimensional unit algebra with trivial filtration.
pub fn unit_phase() -> Phase {
    let table = AlgebraTable::new(
        vec!["1".to_string()],
        BitVec::from_ints(&[1]),
        vec![BitVec::from_ints(&[1])],
    );
    Phase::strong(table)
}

/// The dual numbers GF(2)[eps]/(eps^2): the smallest weak phase, built as
/// the square-zero extension of the unit algebra.
pub fn dual_numbers() -> Phase {
    let p = square_zero_extend(&unit_phase(), 1, None)
        .expect("unit algebra always admits an augmentation");
    // relabel the adjoined direction to the conventional name
    let table = AlgebraTable::new(
        vec!["1".to_string(), "eps".to_string()],
        p.unit().clone(),
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| p.mul_basis(i, j).clone())
            .collect(),
    );
    Phase::from_parts(table, p.filtration().to_vec(), p.witness_island().cloned())
}

/// The split product GF(2) x GF(2): two orthogonal idempotents, unit their
/// sum. Strong, and not isomorphic to the dual numbers.
pub fn split_pair() -> Phase {
    let mul = vec![
        BitVec::from_ints(&[1, 0]), // a*a = a
        BitVec::from_ints(&[0, 0]), // a*b = 0
        BitVec::from_ints(&[0, 0]), // b*a = 0
        BitVec::from_ints(&[0, 1]), // b*b = b
    ];
    let table = AlgebraTable::new(
        vec!["a".to_string(), "b".to_string()],
        BitVec::from_ints(&[1, 1]),
        mul,
    );
    Phase::strong(table)
}

/// If every product of two basis elements is a single basis element, return
/// the product index table (row-major). Such a basis behaves like a group:
/// the all-ones functional is then an algebra map.
pub fn monomial_products(table: &AlgebraTable) -> Option<Vec<usize>> {
    let n = table.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let prod = table.mul_basis(i, j);
            if prod.count_ones() != 1 {
                return None;
            }
            out.push(prod.first_set().unwrap());
        }
    }
    Some(out)
}

/// The group-algebra augmentation (the all-ones functional), when the basis
/// is monomial and the unit is a basis vector. Returns the functional as a
/// bit vector `eps` with `eps(x) = <eps, x>`.
pub fn canonical_augmentation(p: &Phase) -> Option<BitVec> {
    monomial_products(p.table())?;
    if p.unit().count_ones() != 1 {
        return None;
    }
    Some(BitVec::from_bools(&vec![true; p.dim()]))
}

fn check_augmentation(p: &Phase, aug: &BitVec) -> Result<(), PhaseError> {
    if aug.len() != p.dim() {
        return Err(PhaseError::BadAugmentation {
            reason: "functional has wrong length".to_string(),
        });
    }
    if !aug.dot(p.unit()) {
        return Err(PhaseError::BadAugmentation {
            reason: "functional does not send the unit to 1".to_string(),
        });
    }
    let n = p.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = aug.dot(p.mul_basis(i, j));
            let rhs = aug.get(i) && aug.get(j);
            if lhs != rhs {
                return Err(PhaseError::BadAugmentation {
                    reason: format!("not multiplicative on basis pair ({i},{j})"),
                });
            }
        }
    }
    Ok(())
}

/// The two-sided ideal generated by the given vectors: close the span under
/// left and right multiplication by basis elements.
pub fn ideal_closure(table: &AlgebraTable, generators: &[BitVec]) -> GF2Subspace {
    let n = table.dim();
    let mut span = GF2Subspace::from_rows(n, generators.to_vec());
    loop {
        let mut rows = span.basis().to_vec();
        for v in span.basis() {
            for i in 0..n {
                let e = BitVec::unit(n, i);
                rows.push(table.mul_elems(&e, v));
                rows.push(table.mul_elems(v, &e));
            }
        }
        let next = GF2Subspace::from_rows(n, rows);
        if next.dim() == span.dim() {
            return next;
        }
        span = next;
    }
}

/// Attach the ideal-power filtration `F[k] = ideal^k` to an algebra table.
/// The ideal must be two-sided, nilpotent and must not contain the unit;
/// multiplicativity of the resulting chain holds by construction.
pub fn ideal_power_filtration(
    table: AlgebraTable,
    ideal: GF2Subspace,
) -> Result<Phase, PhaseError> {
    let n = table.dim();
    assert_eq!(ideal.ambient_dim(), n, "ideal ambient mismatch");
    if ideal.contains(table.unit()) && !ideal.is_zero() {
        return Err(PhaseError::UnitInIdeal);
    }
    for v in ideal.basis() {
        for i in 0..n {
            let e = BitVec::unit(n, i);
            if !ideal.contains(&table.mul_elems(&e, v))
                || !ideal.contains(&table.mul_elems(v, &e))
            {
                return Err(PhaseError::IdealNotTwoSided);
            }
        }
    }
    let mut layers = vec![GF2Subspace::full(n)];
    let mut power = ideal.clone();
    let mut steps = 0;
    while !power.is_zero() {
        layers.push(power.clone());
        steps += 1;
        if steps > n {
            return Err(PhaseError::IdealNotNilpotent { steps });
        }
        power = crate::gf2lin::subspace_mul(&power, &ideal, |x, y| table.mul_elems(x, y));
    }
    layers.push(GF2Subspace::zero(n));
    Ok(Phase::from_parts(table, layers, None))
}

/// Collapse the boundary ideal: the quotient algebra `A / F[1]` as a strong
/// phase, together with the projection map. The quotient basis is the set of
/// canonical pivot lifts (standard basis vectors at the non-pivot columns of
/// `F[1]`), so a strong phase returns itself with the identity projection.
pub fn boundary_quotient(p: &Phase) -> (Phase, PhaseMap) {
    let n = p.dim();
    let boundary = p.boundary_ideal();
    let lifts = boundary.complement_lifts();
    let qdim = lifts.len();

    let labels: Vec<String> = lifts
        .iter()
        .map(|l| p.labels()[l.first_set().unwrap()].clone())
        .collect();
    let unit = boundary.quotient_coords(p.unit());
    let mut mul = Vec::with_capacity(qdim * qdim);
    for li in &lifts {
        for lj in &lifts {
            mul.push(boundary.quotient_coords(&p.mul(li, lj)));
        }
    }
    let table = AlgebraTable::new(labels, unit, mul);
    let quotient = Phase::strong(table);

    let mut proj = GF2Matrix::zero(qdim, n);
    for j in 0..n {
        let col = boundary.quotient_coords(&BitVec::unit(n, j));
        for i in col.iter_ones() {
            proj.set(i, j, true);
        }
    }
    let map = PhaseMap::new(p.clone(), quotient.clone(), proj);
    (quotient, map)
}

/// Adjoin a central square-zero ideal `B` of the given dimension. Mixed
/// products follow the augmentation: `a * b = b * a = eps(a) b`, and
/// `B * B = 0`. Each existing layer gains `B`, the chain still terminates,
/// and for a strong base the embedded copy is recorded as an island witness.
pub fn square_zero_extend(
    p: &Phase,
    b_dim: usize,
    augmentation: Option<&BitVec>,
) -> Result<Phase, PhaseError> {
    assert!(b_dim >= 1, "extension dimension must be at least 1");
    let aug = match augmentation {
        Some(a) => a.clone(),
        None => canonical_augmentation(p).ok_or(PhaseError::NoAugmentation)?,
    };
    check_augmentation(p, &aug)?;

    let n = p.dim();
    let m = n + b_dim;
    let embed = |v: &BitVec| -> BitVec {
        let mut w = BitVec::zero(m);
        for i in v.iter_ones() {
            w.set(i, true);
        }
        w
    };

    let mut labels = p.labels().to_vec();
    for t in 0..b_dim {
        labels.push(format!("b{t}"));
    }
    let unit = embed(p.unit());

    let mut mul = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let prod = match (i < n, j < n) {
                (true, true) => embed(p.mul_basis(i, j)),
                (true, false) => {
                    // a * b = eps(a) b
                    if aug.get(i) {
                        BitVec::unit(m, j)
                    } else {
                        BitVec::zero(m)
                    }
                }
                (false, true) => {
                    if aug.get(j) {
                        BitVec::unit(m, i)
                    } else {
                        BitVec::zero(m)
                    }
                }
                (false, false) => BitVec::zero(m),
            };
            mul.push(prod);
        }
    }
    let table = AlgebraTable::new(labels, unit, mul);

    let b_space = GF2Subspace::from_rows(
        m,
        (n..m).map(|i| BitVec::unit(m, i)).collect::<Vec<_>>(),
    );
    let depth = p.boundary_depth().max(1);
    let mut layers = vec![GF2Subspace::full(m)];
    for k in 1..=depth {
        let old = p.layer(k);
        let embedded = GF2Subspace::from_rows(
            m,
            old.basis().iter().map(&embed).collect::<Vec<_>>(),
        );
        layers.push(embedded.sum(&b_space));
    }
    layers.push(GF2Subspace::zero(m));

    let witness = if p.is_strong() {
        Some(GF2Subspace::from_rows(
            m,
            (0..n).map(|i| BitVec::unit(m, i)).collect::<Vec<_>>(),
        ))
    } else {
        None
    };

    Ok(Phase::from_parts(table, layers, witness))
}

/// How to locate the nilpotent ideal when inducing a filtration on a bare
/// algebra table.
#[derive(Clone, Debug)]
pub enum FiltrationHint {
    /// Indices of basis elements forming a normal subgroup of a monomial
    /// basis; the induced ideal is generated by `e_g - unit` over the hint.
    Subgroup(Vec<usize>),
    /// A caller-supplied candidate ideal, checked rather than trusted.
    Ideal(GF2Subspace),
}

/// Equip a bare associative unital algebra with the ideal-power filtration
/// of the hinted nilpotent ideal. The result is fully validated.
pub fn induce_phase(table: AlgebraTable, hint: FiltrationHint) -> Result<Phase, PhaseError> {
    let n = table.dim();
    let ideal = match hint {
        FiltrationHint::Ideal(s) => s,
        FiltrationHint::Subgroup(indices) => {
            let monomial = monomial_products(&table).ok_or_else(|| {
                PhaseError::BadSubgroupHint {
                    reason: "basis is not monomial".to_string(),
                }
            })?;
            for &g in &indices {
                if g >= n {
                    return Err(PhaseError::BadSubgroupHint {
                        reason: format!("index {g} out of range"),
                    });
                }
            }
            // products of hinted elements must stay in the hinted set
            for &g in &indices {
                for &h in &indices {
                    let gh = monomial[g * n + h];
                    if !indices.contains(&gh) {
                        return Err(PhaseError::BadSubgroupHint {
                            reason: format!("product of {g} and {h} leaves the subgroup"),
                        });
                    }
                }
            }
            let gens: Vec<BitVec> = indices
                .iter()
                .map(|&g| {
                    let mut v = BitVec::unit(n, g);
                    v.xor_assign(table.unit());
                    v
                })
                .collect();
            ideal_closure(&table, &gens)
        }
    };
    let phase = ideal_power_filtration(table, ideal)?;
    let report = super::validate_phase(&phase);
    if !report.is_valid() {
        return Err(PhaseError::InvalidPhase {
            first_failure: report.first_failure().unwrap().name.clone(),
        });
    }
    Ok(phase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::{validate_phase, Degree, Dichotomy};

    #[test]
    fn dual_numbers_shape() {
        let d = dual_numbers();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.boundary_depth(), 1);
        assert_eq!(d.dichotomy(), Dichotomy::Weak { depth: 1 });
        // eps * eps = 0
        assert!(d.mul_basis(1, 1).is_zero());
        assert!(validate_phase(&d).is_valid());
        // recorded island is the embedded unit algebra
        let island = d.witness_island().unwrap();
        assert_eq!(island.dim(), 1);
        assert!(island.contains(d.unit()));
    }

    #[test]
    fn defect_degrees_in_dual_numbers() {
        let d = dual_numbers();
        assert_eq!(d.defect_degree(d.unit()), Degree::Finite(0));
        assert_eq!(d.defect_degree(&BitVec::from_ints(&[0, 1])), Degree::Finite(1));
        assert_eq!(d.defect_degree(&BitVec::zero(2)), Degree::Inf);
    }

    #[test]
    fn zero_ideal_gives_trivial_filtration() {
        let p = unit_phase();
        let q = ideal_power_filtration(p.table().clone(), GF2Subspace::zero(1)).unwrap();
        assert_eq!(q.boundary_depth(), 0);
        assert_eq!(q.layer_dims(), vec![1, 0]);
    }

    #[test]
    fn unit_in_ideal_rejected() {
        let p = unit_phase();
        let full = GF2Subspace::full(1);
        assert!(matches!(
            ideal_power_filtration(p.table().clone(), full),
            Err(PhaseError::UnitInIdeal)
        ));
    }

    #[test]
    fn quotient_of_strong_phase_is_identity() {
        let p = split_pair();
        let (q, proj) = boundary_quotient(&p);
        assert_eq!(q.table(), p.table());
        assert_eq!(proj.matrix, GF2Matrix::identity(2));
    }

    #[test]
    fn quotient_of_dual_numbers_is_base_field() {
        let d = dual_numbers();
        let (q, proj) = boundary_quotient(&d);
        assert_eq!(q.dim(), 1);
        assert!(q.is_strong());
        // eps maps to zero
        assert!(proj.apply(&BitVec::from_ints(&[0, 1])).is_zero());
        assert_eq!(proj.apply(d.unit()), BitVec::from_ints(&[1]));
    }

    #[test]
    fn extension_depth_and_layers() {
        let p = unit_phase();
        let e = square_zero_extend(&p, 1, None).unwrap();
        assert_eq!(e.dim(), 2);
        assert_eq!(e.boundary_depth(), 1);
        assert_eq!(e.layer_dims(), vec![2, 1, 0]);
        assert!(validate_phase(&e).is_valid());
    }

    #[test]
    fn extension_without_augmentation_rejected() {
        // split_pair has non-basis unit, so no canonical augmentation exists
        let p = split_pair();
        assert!(matches!(
            square_zero_extend(&p, 1, None),
            Err(PhaseError::NoAugmentation)
        ));
    }

    #[test]
    fn induce_c2_group_algebra() {
        // F2[C2]: basis {1, g}, g^2 = 1; augmentation ideal span{1+g}
        let mul = vec![
            BitVec::from_ints(&[1, 0]),
            BitVec::from_ints(&[0, 1]),
            BitVec::from_ints(&[0, 1]),
            BitVec::from_ints(&[1, 0]),
        ];
        let table = AlgebraTable::new(
            vec!["1".into(), "g".into()],
            BitVec::from_ints(&[1, 0]),
            mul,
        );
        let p = induce_phase(table, FiltrationHint::Subgroup(vec![0, 1])).unwrap();
        assert_eq!(p.layer_dims(), vec![2, 1, 0]);
        assert_eq!(p.boundary_depth(), 1);
        // (g - 1)^2 = 0 makes this the dual numbers up to relabeling
        let gm1 = BitVec::from_ints(&[1, 1]);
        assert!(p.mul(&gm1, &gm1).is_zero());
    }

    #[test]
    fn induce_rejects_unit_ideal() {
        let p = unit_phase();
        let hint = FiltrationHint::Ideal(GF2Subspace::full(1));
        assert!(induce_phase(p.table().clone(), hint).is_err());
    }
}
