//! Minimal vectors of the nonzero cosets of `2L` in `L`.
//!
//! A coset is named by the parities of the coordinates of its members. Its
//! minimal vectors are found by enumerating the class inside the ellipsoid
//! `{v : vᵀ g v <= R}` with exact rational bounds, where `R` starts at the
//! norm of the 0/1 representative and shrinks whenever a shorter member is
//! met.

use alloc::vec::Vec;

use crate::arith::Rational;
use crate::enumerate::Ellipsoid;
use crate::form::{GramMatrix, LatticeVector};
use crate::linalg::{self, Ldl};
use crate::{Error, Result};

/// A class of `L / 2L` given by coordinate parities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetLabel(Vec<u8>);

impl CosetLabel {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidLabel);
        }
        Ok(Self(bits))
    }

    /// Label of the class containing `v`.
    pub fn of(v: &LatticeVector) -> Self {
        Self(v.coords().iter().map(|x| x.rem_euclid(2) as u8).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        v.dim() == self.dim() && v.coords().iter().zip(&self.0).all(|(x, &b)| x.rem_euclid(2) as u8 == b)
    }

    pub fn representative(&self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|&b| b as i64).collect())
    }
}

/// All nonzero labels of dimension `n`, in lexicographic order.
pub fn coset_labels(n: usize) -> Vec<CosetLabel> {
    assert!(n < 63, "coset_labels: dimension too large");
    (1u64..(1u64 << n))
        .map(|k| CosetLabel((0..n).map(|i| ((k >> (n - 1 - i)) & 1) as u8).collect()))
        .collect()
}

/// The minimal vectors of one coset, one vector per `±` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetMinSet {
    pub label: CosetLabel,
    pub min_norm: Rational,
    /// Each vector has a positive first nonzero coordinate; sorted
    /// lexicographically.
    pub vectors: Vec<LatticeVector>,
}

impl CosetMinSet {
    /// True when the coset has a single `±` pair of minimal vectors.
    pub fn is_simple(&self) -> bool {
        self.vectors.len() == 1
    }

    /// Every minimal vector, both signs.
    pub fn all_vectors(&self) -> Vec<LatticeVector> {
        self.vectors.iter().flat_map(|v| [v.clone(), v.neg()]).collect()
    }
}

/// Exhaustive enumeration of the minimal vectors of a nonzero coset.
pub fn coset_min_vectors(g: &GramMatrix, label: &CosetLabel) -> Result<CosetMinSet> {
    let ldl = linalg::ldl(&g.as_sym().rows()).ok_or(Error::NotPositiveDefinite { index: 0 })?;
    coset_min_vectors_with(g, &ldl, label)
}

/// As [`coset_min_vectors`], reusing a precomputed decomposition of `g`.
pub fn coset_min_vectors_with(g: &GramMatrix, ldl: &Ldl, label: &CosetLabel) -> Result<CosetMinSet> {
    let n = g.dim();
    if label.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: label.dim() });
    }
    if label.is_zero() {
        return Err(Error::ZeroCoset);
    }
    let bound = g.as_sym().eval(label.representative().coords())?;
    let mut search = Ellipsoid::new(ldl, bound);
    search.parity = Some(label.bits());
    search.shrink = true;
    let (bound, found) = search.run();

    let mut vectors: Vec<LatticeVector> = found
        .into_iter()
        .filter(|v| v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .map(LatticeVector)
        .collect();
    vectors.sort();
    vectors.dedup();
    Ok(CosetMinSet { label: label.clone(), min_norm: bound, vectors })
}
