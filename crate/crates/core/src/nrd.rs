//! The norm-equality system and the non-rigidity degree.
//!
//! For each nonzero coset of `2L` in `L`, every minimal vector must keep the
//! same norm as the coset's first minimal vector. Each such equality is a
//! linear functional on the coefficient space. When these equalities alone
//! leave more than one degree of freedom, the affine relations of the
//! Delaunay polytopes (see [`crate::delaunay`]) are added; they contain the
//! coset equalities and cut out exactly the linear span of the L-domain.
//! The corank of the stacked system is the non-rigidity degree.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{to_rationals, Rational};
use crate::form::{coeff_dim, sym_index, sym_uncoords, GramMatrix, LatticeVector, SymMatrix, SymVector};
use crate::delaunay;
use crate::linalg;
use crate::minvec::{coset_labels, coset_min_vectors_with, CosetLabel, CosetMinSet};
use crate::{Error, Result};

/// One norm equality `vᵀXv − uᵀXu = 0` written in [`SymVector`]
/// coordinates. Coefficients are integers because `u` and `v` are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintRow {
    pub coeffs: Vec<BigInt>,
    pub label: Option<CosetLabel>,
    pub u: LatticeVector,
    pub v: LatticeVector,
}

impl ConstraintRow {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Value of the functional on a symmetric matrix.
    pub fn apply(&self, x: &SymMatrix) -> Rational {
        let coords = crate::form::sym_coords(x);
        self.coeffs
            .iter()
            .zip(coords.coeffs())
            .fold(Rational::zero(), |acc, (c, a)| acc + Rational::from_integer(c.clone()) * a)
    }
}

/// Functional `X ↦ vᵀXv − uᵀXu`. Off-diagonal coefficients carry the
/// factor 2 because `a_ij` appears twice in the quadratic form.
pub fn norm_constraint(u: &LatticeVector, v: &LatticeVector) -> Result<ConstraintRow> {
    let n = u.dim();
    if v.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
    }
    let (a, b) = (u.coords(), v.coords());
    let mut coeffs = alloc::vec![BigInt::zero(); coeff_dim(n)];
    for i in 0..n {
        for j in i..n {
            let factor = if i == j { 1 } else { 2 };
            let c = factor * (b[i] * b[j] - a[i] * a[j]);
            coeffs[sym_index(n, i, j)] = BigInt::from(c);
        }
    }
    Ok(ConstraintRow { coeffs, label: None, u: u.clone(), v: v.clone() })
}

/// How equalities are generated inside one coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstraintMode {
    /// The first minimal vector against each of the others.
    #[default]
    Star,
    /// Every pair of stored minimal vectors.
    AllPairs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NrdResult {
    pub n: usize,
    pub nrd: usize,
    pub rank: usize,
    /// Nonzero equalities fed to the elimination.
    pub constraint_count: usize,
    /// Delaunay polytope classes consulted; zero when the coset equalities
    /// already pin the form down to a ray.
    pub delaunay_classes: usize,
    /// Canonical integer basis of the solution space.
    pub span_basis: Vec<SymVector>,
}

impl NrdResult {
    /// Dimension `N` of the coefficient space.
    pub fn coeff_dim(&self) -> usize {
        coeff_dim(self.n)
    }

    pub fn span_matrices(&self) -> Vec<SymMatrix> {
        self.span_basis.iter().map(sym_uncoords).collect()
    }
}

/// Minimal-vector sets of every nonzero coset, in label order.
pub fn coset_min_sets(g: &GramMatrix) -> Result<Vec<CosetMinSet>> {
    let ldl = linalg::ldl(&g.as_sym().rows()).ok_or(Error::NotPositiveDefinite { index: 0 })?;
    coset_labels(g.dim()).iter().map(|label| coset_min_vectors_with(g, &ldl, label)).collect()
}

/// Equalities contributed by one coset; zero rows are dropped.
pub fn coset_constraints(set: &CosetMinSet, mode: ConstraintMode) -> Vec<ConstraintRow> {
    let vs = &set.vectors;
    let pairs: Vec<(usize, usize)> = match mode {
        ConstraintMode::Star => (1..vs.len()).map(|j| (0, j)).collect(),
        ConstraintMode::AllPairs => (0..vs.len()).flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j))).collect(),
    };
    pairs
        .into_iter()
        .filter_map(|(i, j)| {
            let mut row = norm_constraint(&vs[i], &vs[j]).expect("vectors of one coset share a dimension");
            row.label = Some(set.label.clone());
            (!row.is_zero()).then_some(row)
        })
        .collect()
}

/// Corank and kernel of the coset equalities only.
pub fn coset_nrd(n: usize, sets: &[CosetMinSet], mode: ConstraintMode) -> NrdResult {
    let rows: Vec<Vec<BigInt>> = sets.iter().flat_map(|s| coset_constraints(s, mode)).map(|r| r.coeffs).collect();
    nrd_from_rows(n, &rows)
}

/// Full non-rigidity computation from precomputed coset sets.
pub fn nrd_from_sets(g: &GramMatrix, sets: &[CosetMinSet], mode: ConstraintMode) -> Result<NrdResult> {
    let n = g.dim();
    let mut rows: Vec<Vec<BigInt>> = sets.iter().flat_map(|s| coset_constraints(s, mode)).map(|r| r.coeffs).collect();
    let coarse = nrd_from_rows(n, &rows);
    // nrd >= 1 always and extra relations only lower it
    if coarse.nrd <= 1 {
        return Ok(coarse);
    }
    let polytopes = delaunay::delaunay_polytopes(g, sets)?;
    rows.extend(
        polytopes
            .iter()
            .filter(|p| !p.is_simplex(n))
            .flat_map(|p| p.relations())
            .filter(|r| r.iter().any(|x| !x.is_zero())),
    );
    let mut result = nrd_from_rows(n, &rows);
    result.delaunay_classes = polytopes.len();
    Ok(result)
}

pub fn nrd_from_rows(n: usize, rows: &[Vec<BigInt>]) -> NrdResult {
    let cols = coeff_dim(n);
    let rank = linalg::rank_int(rows, cols);
    let span_basis = linalg::kernel_int(rows, cols)
        .into_iter()
        .map(|v| SymVector::new(n, to_rationals(&v)).expect("kernel vectors have length N"))
        .collect::<Vec<_>>();
    debug_assert_eq!(span_basis.len(), cols - rank);
    NrdResult { n, nrd: cols - rank, rank, constraint_count: rows.len(), delaunay_classes: 0, span_basis }
}

/// Non-rigidity degree of `g` with the default star pattern.
pub fn nrd(g: &GramMatrix) -> Result<NrdResult> {
    nrd_with(g, ConstraintMode::Star)
}

pub fn nrd_with(g: &GramMatrix, mode: ConstraintMode) -> Result<NrdResult> {
    let sets = coset_min_sets(g)?;
    nrd_from_sets(g, &sets, mode)
}

/// Basis of the linear span of the L-domain of `g`, as symmetric matrices.
pub fn ldomain_span(g: &GramMatrix) -> Result<Vec<SymMatrix>> {
    Ok(nrd(g)?.span_matrices())
}
