//! Finite algebraic phases: unital associative algebras over GF(2) carrying
//! a terminating descending chain of two-sided nilpotent ideals (the defect
//! filtration).
//!
//! The filtration list stores `F[0] ⊇ F[1] ⊇ … ⊇ F[d+1]` with `F[0]` the
//! whole space and the final layer zero. `boundary_depth` is the largest
//! index with a nonzero layer; a phase is *strong* when that is 0 and *weak*
//! otherwise. `F[1]` is the boundary ideal: the exact kernel of the
//! evaluation map into filtered representations (see the `filtrep` module).

mod build;
mod iso;
pub(crate) mod monomial;
mod structure;
mod validate;

pub use build::{
    boundary_quotient, canonical_augmentation, dual_numbers, ideal_closure,
    ideal_power_filtration, induce_phase, monomial_products, split_pair, square_zero_extend,
    unit_phase, FiltrationHint,
};
pub use iso::{invariant_vector, iso_certify, iso_search, IsoFailure, IsoOutcome, PhaseInvariants};
pub use structure::{
    canonical_generators, generates_whole_phase, is_island, layer_lifts, obstruction_object,
    rigidity_island, IslandOutcome, ObstructionObject,
};
pub use validate::{validate_phase, CheckResult, ValidationReport};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};

/// An element of a phase, as a coordinate vector in the phase's basis.
pub type PhaseElem = BitVec;

/// Defect degree of an element: the largest `k` with the element in `F[k]`.
/// The zero element lies in every layer and gets the `Inf` sentinel, which
/// keeps the additivity statement `deg(xy) >= deg(x) + deg(y)` clean.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Degree {
    Finite(usize),
    Inf,
}

impl Degree {
    pub fn saturating_add(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::Inf,
        }
    }

    pub fn as_finite(self) -> Option<usize> {
        match self {
            Degree::Finite(k) => Some(k),
            Degree::Inf => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(k) => write!(f, "{k}"),
            Degree::Inf => write!(f, "INF"),
        }
    }
}

/// Verdict of the strong/weak dichotomy. By construction no third shape
/// is representable.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Dichotomy {
    Strong,
    Weak { depth: usize },
}

impl fmt::Display for Dichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dichotomy::Strong => write!(f, "Strong"),
            Dichotomy::Weak { depth } => write!(f, "Weak({depth})"),
        }
    }
}

/// A unital algebra presented by structure constants, before any filtration
/// is attached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraTable {
    dim: usize,
    labels: Vec<String>,
    unit: BitVec,
    /// Row-major products: entry `i * dim + j` is the coordinate vector of
    /// `e_i * e_j`.
    mul: Vec<BitVec>,
}

impl AlgebraTable {
    pub fn new(labels: Vec<String>, unit: BitVec, mul: Vec<BitVec>) -> Self {
        let dim = labels.len();
        assert_eq!(unit.len(), dim, "unit length mismatch");
        assert_eq!(mul.len(), dim * dim, "structure table size mismatch");
        for m in &mul {
            assert_eq!(m.len(), dim, "structure row length mismatch");
        }
        AlgebraTable {
            dim,
            labels,
            unit,
            mul,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &BitVec {
        &self.unit
    }

    /// The product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> &BitVec {
        &self.mul[i * self.dim + j]
    }

    /// The bilinear extension of the structure table.
    pub fn mul_elems(&self, x: &BitVec, y: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.dim, "element dimension mismatch");
        assert_eq!(y.len(), self.dim, "element dimension mismatch");
        let mut acc = BitVec::zero(self.dim);
        for i in x.iter_ones() {
            for j in y.iter_ones() {
                acc.xor_assign(self.mul_basis(i, j));
            }
        }
        acc
    }

    /// Matrix of left multiplication by `x` (columns indexed by the basis).
    pub fn left_mul_matrix(&self, x: &BitVec) -> GF2Matrix {
        let mut m = GF2Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_elems(x, &BitVec::unit(self.dim, j));
            for i in col.iter_ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mul_matrix(&self, x: &BitVec) -> GF2Matrix {
        let mut m = GF2Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_elems(&BitVec::unit(self.dim, j), x);
            for i in col.iter_ones() {
                m.set(i, j, true);
            }
        }
        m
    }
}

/// A phase: an algebra table plus its defect filtration. Immutable after
/// construction; all operations on phases are pure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Phase {
    table: AlgebraTable,
    filtration: Vec<GF2Subspace>,
    witness_island: Option<GF2Subspace>,
}

impl Phase {
    /// Assemble a phase from parts. No axioms are checked here; use
    /// `validate_phase` to certify the result.
    pub fn from_parts(
        table: AlgebraTable,
        filtration: Vec<GF2Subspace>,
        witness_island: Option<GF2Subspace>,
    ) -> Self {
        assert!(!filtration.is_empty(), "filtration must be non-empty");
        for layer in &filtration {
            assert_eq!(
                layer.ambient_dim(),
                table.dim(),
                "filtration ambient mismatch"
            );
        }
        Phase {
            table,
            filtration,
            witness_island,
        }
    }

    /// A strong phase: the table with the trivial filtration `[full, 0]`.
    pub fn strong(table: AlgebraTable) -> Self {
        let n = table.dim();
        Phase {
            table,
            filtration: vec![GF2Subspace::full(n), GF2Subspace::zero(n)],
            witness_island: None,
        }
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.table.labels()
    }

    pub fn unit(&self) -> &BitVec {
        self.table.unit()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &BitVec {
        self.table.mul_basis(i, j)
    }

    pub fn mul(&self, x: &BitVec, y: &BitVec) -> BitVec {
        self.table.mul_elems(x, y)
    }

    /// The stored filtration layers `F[0] ..= F[d+1]`.
    pub fn filtration(&self) -> &[GF2Subspace] {
        &self.filtration
    }

    /// Layer `F[k]`, with indices past the stored chain meaning zero.
    pub fn layer(&self, k: usize) -> GF2Subspace {
        if k < self.filtration.len() {
            self.filtration[k].clone()
        } else {
            GF2Subspace::zero(self.dim())
        }
    }

    /// The boundary ideal `F[1]`.
    pub fn boundary_ideal(&self) -> GF2Subspace {
        self.layer(1)
    }

    pub fn witness_island(&self) -> Option<&GF2Subspace> {
        self.witness_island.as_ref()
    }

    pub fn with_witness_island(mut self, island: GF2Subspace) -> Self {
        self.witness_island = Some(island);
        self
    }

    /// Dimensions of the stored layers, `[dim F[0], dim F[1], ...]`.
    pub fn layer_dims(&self) -> Vec<usize> {
        self.filtration.iter().map(|s| s.dim()).collect()
    }

    /// Largest `k` with `F[k]` nonzero; 0 exactly for strong phases.
    pub fn boundary_depth(&self) -> usize {
        self.filtration
            .iter()
            .enumerate()
            .rev()
            .find(|(_, s)| !s.is_zero())
            .map(|(k, _)| k)
            .unwrap_or(0)
    }

    pub fn is_strong(&self) -> bool {
        self.boundary_depth() == 0
    }

    pub fn dichotomy(&self) -> Dichotomy {
        let d = self.boundary_depth();
        if d == 0 {
            Dichotomy::Strong
        } else {
            Dichotomy::Weak { depth: d }
        }
    }

    /// The largest `k` with `x` in `F[k]`; 0 iff `x` is outside the boundary
    /// ideal; the zero element returns `Inf`.
    pub fn defect_degree(&self, x: &BitVec) -> Degree {
        assert_eq!(x.len(), self.dim(), "element dimension mismatch");
        if x.is_zero() {
            return Degree::Inf;
        }
        for k in (0..self.filtration.len()).rev() {
            if self.filtration[k].contains(x) {
                return Degree::Finite(k);
            }
        }
        // F[0] is the full space for any valid phase, so this is unreachable
        // on validated input; treat a malformed chain as degree 0.
        Degree::Finite(0)
    }
}

/// A linear map between phases, carried as a matrix (target dim × source
/// dim). Nothing about the map is assumed; `iso_certify` checks the unital,
/// multiplicative and filtration-preserving properties explicitly.
#[derive(Clone, Debug)]
pub struct PhaseMap {
    pub source: Phase,
    pub target: Phase,
    pub matrix: GF2Matrix,
}

impl PhaseMap {
    pub fn new(source: Phase, target: Phase, matrix: GF2Matrix) -> Self {
        assert_eq!(matrix.rows(), target.dim(), "matrix rows mismatch");
        assert_eq!(matrix.cols(), source.dim(), "matrix cols mismatch");
        PhaseMap {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(p: &Phase) -> Self {
        PhaseMap {
            source: p.clone(),
            target: p.clone(),
            matrix: GF2Matrix::identity(p.dim()),
        }
    }

    pub fn apply(&self, x: &BitVec) -> BitVec {
        self.matrix.mul_vec(x)
    }
}

/// Errors raised by phase constructors and transformations.
#[derive(Debug, Error)]
pub enum PhaseError {
    #[error("ideal is not two-sided: basis product leaves the span")]
    IdealNotTwoSided,
    #[error("ideal is not nilpotent: power chain still nonzero after {steps} steps")]
    IdealNotNilpotent { steps: usize },
    #[error("unit lies in the proposed ideal")]
    UnitInIdeal,
    #[error("no augmentation available: supply a unital functional to GF(2)")]
    NoAugmentation,
    #[error("supplied augmentation is not a unital algebra map: {reason}")]
    BadAugmentation { reason: String },
    #[error("subgroup hint is invalid: {reason}")]
    BadSubgroupHint { reason: String },
    #[error("phase failed validation: {first_failure}")]
    InvalidPhase { first_failure: String },
}
