//! Group structure carried by a monomial basis.
//!
//! When every product of two basis elements is a single basis element and
//! the unit is a basis vector, the basis indices form a finite group. The
//! flagship constructions all have this shape, and island/isomorphism
//! searches exploit it.

use std::collections::BTreeMap;

use super::AlgebraTable;
use crate::gf2lin::BitVec;

#[derive(Clone, Debug)]
pub(crate) struct MonomialGroup {
    pub n: usize,
    /// prod[g * n + h] = index of the basis product e_g e_h.
    pub prod: Vec<usize>,
    pub unit: usize,
}

impl MonomialGroup {
    /// Extract the group when the table is monomial with a basis unit and
    /// every left translation is a bijection.
    pub fn from_table(table: &AlgebraTable) -> Option<Self> {
        let prod = super::build::monomial_products(table)?;
        if table.unit().count_ones() != 1 {
            return None;
        }
        let unit = table.unit().first_set().unwrap();
        let n = table.dim();
        // group: translations are bijections and inverses exist
        for g in 0..n {
            let mut seen = vec![false; n];
            for h in 0..n {
                let gh = prod[g * n + h];
                if seen[gh] {
                    return None;
                }
                seen[gh] = true;
            }
            if !(0..n).any(|h| prod[g * n + h] == unit) {
                return None;
            }
        }
        Some(MonomialGroup { n, prod, unit })
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.prod[g * self.n + h]
    }

    pub fn order_of(&self, g: usize) -> usize {
        let mut x = g;
        let mut ord = 1;
        while x != self.unit {
            x = self.mul(x, g);
            ord += 1;
            assert!(ord <= self.n, "order computation ran away");
        }
        ord
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|g| (0..self.n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn is_elementary_abelian(&self) -> bool {
        self.is_abelian() && (0..self.n).all(|g| self.mul(g, g) == self.unit)
    }

    /// Subgroup generated by the given elements, as a sorted index list.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.n];
        in_set[self.unit] = true;
        let mut members = vec![self.unit];
        let mut frontier = vec![self.unit];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !in_set[y] {
                        in_set[y] = true;
                        members.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Greedy minimal generating set, scanning indices in order.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.unit];
        for g in 0..self.n {
            if !span.contains(&g) {
                gens.push(g);
                span = self.subgroup_closure(&gens);
                if span.len() == self.n {
                    break;
                }
            }
        }
        gens
    }

    /// For an elementary abelian group, GF(2) coordinates for every element
    /// with respect to the greedy generators. Returns (generators, logs).
    pub fn elementary_abelian_logs(&self) -> Option<(Vec<usize>, Vec<BitVec>)> {
        if !self.is_elementary_abelian() {
            return None;
        }
        let gens = self.greedy_generators();
        let r = gens.len();
        let mut logs: Vec<Option<BitVec>> = vec![None; self.n];
        logs[self.unit] = Some(BitVec::zero(r));
        for (i, &g) in gens.iter().enumerate() {
            // multiply every known element by the new generator
            let known: Vec<usize> = (0..self.n).filter(|&x| logs[x].is_some()).collect();
            for x in known {
                let y = self.mul(x, g);
                if logs[y].is_none() {
                    let mut l = logs[x].clone().unwrap();
                    l.set(i, true);
                    logs[y] = Some(l);
                }
            }
        }
        let logs: Option<Vec<BitVec>> = logs.into_iter().collect();
        logs.map(|l| (gens, l))
    }

    /// Inverse lookup for `elementary_abelian_logs`.
    pub fn element_by_log(logs: &[BitVec]) -> BTreeMap<BitVec, usize> {
        logs.iter()
            .enumerate()
            .map(|(g, l)| (l.clone(), g))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::{split_pair, unit_phase};

    #[test]
    fn unit_algebra_is_trivial_group() {
        let g = MonomialGroup::from_table(unit_phase().table()).unwrap();
        assert_eq!(g.n, 1);
        assert!(g.is_elementary_abelian());
    }

    #[test]
    fn split_pair_is_not_a_group() {
        // products hit zero, translations are not bijections
        assert!(MonomialGroup::from_table(split_pair().table()).is_none());
    }
}
