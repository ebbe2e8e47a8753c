//! Symmetric matrices, Gram matrices and the coefficient space of forms.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::Rational;
use crate::linalg;
use crate::{Error, Result};

/// A symmetric `n × n` rational matrix with no definiteness requirement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    /// Builds from a row-major `n × n` entry list, checking symmetry.
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: entries.len() });
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// Builds from the upper triangle; `f(i, j)` is only called with `i <= j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                entries[j * n + i] = v.clone();
                entries[i * n + j] = v;
            }
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| x * factor).collect() }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows(), self.n)
    }

    pub fn determinant(&self) -> Rational {
        linalg::determinant(&self.rows())
    }

    /// Leading principal minors `det A[..k, ..k]` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<Rational> {
        let rows = self.rows();
        (1..=self.n)
            .map(|k| {
                let sub: Vec<Vec<Rational>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
                linalg::determinant(&sub)
            })
            .collect()
    }

    /// `Uᵀ A U` for an integer change of basis `U` (columns are the new basis).
    pub fn conjugate(&self, u: &[Vec<i64>]) -> Result<Self> {
        let n = self.n;
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: u.len() });
        }
        Ok(Self::from_upper(n, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..n {
                if u[k][i] == 0 {
                    continue;
                }
                for l in 0..n {
                    if u[l][j] != 0 {
                        acc += &self[(k, l)] * Rational::from_integer(BigInt::from(u[k][i] * u[l][j]));
                    }
                }
            }
            acc
        }))
    }

    /// `vᵀ A v` for an integer vector.
    pub fn eval(&self, v: &[i64]) -> Result<Rational> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: v.len() });
        }
        let n = self.n;
        let mut acc = Rational::zero();
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            acc += &self.entries[i * n + i] * Rational::from_integer(BigInt::from(v[i] * v[i]));
            for j in i + 1..n {
                if v[j] != 0 {
                    acc += &self.entries[i * n + j] * Rational::from_integer(BigInt::from(2 * v[i] * v[j]));
                }
            }
        }
        Ok(acc)
    }
}

impl Index<(usize, usize)> for SymMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.n + j]
    }
}

/// A positive definite quadratic form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix(SymMatrix);

impl GramMatrix {
    /// Accepts `m` if every leading principal minor is positive.
    pub fn new(m: SymMatrix) -> Result<Self> {
        if m.n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if linalg::ldl(&m.rows()).is_none() {
            // report the first failing minor
            let index = m.leading_minors().iter().position(|d| !d.is_positive()).unwrap_or(0) + 1;
            return Err(Error::NotPositiveDefinite { index });
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(SymMatrix::from_rows(rows)?)
    }

    pub fn dim(&self) -> usize {
        self.0.n
    }

    pub fn as_sym(&self) -> &SymMatrix {
        &self.0
    }

    pub fn into_sym(self) -> SymMatrix {
        self.0
    }

    /// `λ g` for `λ > 0`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        Self::new(self.0.scaled(factor))
    }

    /// `Uᵀ g U`; fails if `U` is singular.
    pub fn conjugate(&self, u: &[Vec<i64>]) -> Result<Self> {
        Self::new(self.0.conjugate(u)?)
    }

    /// Dimension `N = n(n+1)/2` of the coefficient space.
    pub fn coeff_dim(&self) -> usize {
        coeff_dim(self.dim())
    }
}

impl Index<(usize, usize)> for GramMatrix {
    type Output = Rational;

    fn index(&self, idx: (usize, usize)) -> &Rational {
        &self.0[idx]
    }
}

/// Integer coordinates of a lattice vector in the lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

/// Coordinates of a symmetric matrix in the `N`-dimensional coefficient
/// space, ordered row-major over the upper triangle:
/// `(a_11, a_12, …, a_1n, a_22, …, a_nn)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymVector {
    n: usize,
    coeffs: Vec<Rational>,
}

impl SymVector {
    pub fn new(n: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = coeff_dim(n);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: coeffs.len() });
        }
        Ok(Self { n, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }
}

pub fn coeff_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of `a_ij` (any order of `i`, `j`) in [`SymVector`] coordinates.
pub fn sym_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * i.saturating_sub(1) / 2 + j - i
}

/// Norm `vᵀ g v` of a lattice vector.
pub fn qform_eval(g: &GramMatrix, v: &LatticeVector) -> Result<Rational> {
    g.0.eval(&v.0)
}

pub fn sym_coords(m: &SymMatrix) -> SymVector {
    let n = m.n;
    let mut coeffs = Vec::with_capacity(coeff_dim(n));
    for i in 0..n {
        for j in i..n {
            coeffs.push(m[(i, j)].clone());
        }
    }
    SymVector { n, coeffs }
}

pub fn sym_uncoords(s: &SymVector) -> SymMatrix {
    let n = s.n;
    SymMatrix::from_upper(n, |i, j| s.coeffs[sym_index(n, i, j)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn diag(n: usize, v: i64) -> GramMatrix {
        GramMatrix::new(SymMatrix::from_upper(n, |i, j| if i == j { int(v) } else { int(0) })).unwrap()
    }

    #[test]
    fn sym_index_is_row_major_upper() {
        let n = 4;
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                assert_eq!(sym_index(n, i, j), k);
                assert_eq!(sym_index(n, j, i), k);
                k += 1;
            }
        }
    }

    #[test]
    fn identity_coords() {
        let id = diag(2, 1);
        assert_eq!(sym_coords(id.as_sym()).coeffs(), &[int(1), int(0), int(1)]);
        assert_eq!(sym_coords(diag(3, 1).as_sym()).coeffs().len(), 6);
    }

    #[test]
    fn eval_diagonal_and_zero() {
        let g = diag(4, 2);
        assert_eq!(qform_eval(&g, &LatticeVector(vec![1, 1, 0, 0])).unwrap(), int(4));
        assert_eq!(qform_eval(&g, &LatticeVector(vec![0; 4])).unwrap(), int(0));
        assert!(matches!(
            qform_eval(&g, &LatticeVector(vec![1, 1])),
            Err(Error::DimensionMismatch { expected: 4, found: 2 })
        ));
    }

    #[test]
    fn rejects_asymmetric_and_indefinite() {
        let asym = SymMatrix::new(2, vec![int(1), int(2), int(3), int(1)]);
        assert!(matches!(asym, Err(Error::NotSymmetric { row: 0, col: 1 })));
        let indef = GramMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(1)]]);
        assert!(matches!(indef, Err(Error::NotPositiveDefinite { index: 2 })));
        let neg = GramMatrix::from_rows(vec![vec![rat(-1, 2)]]);
        assert!(matches!(neg, Err(Error::NotPositiveDefinite { index: 1 })));
    }

    proptest! {
        #[test]
        fn sym_round_trip(n in 1usize..6, seed in proptest::collection::vec((-20i64..20, 1i64..9), 21)) {
            let coeffs: Vec<Rational> = seed.iter().take(coeff_dim(n)).map(|&(a, b)| rat(a, b)).collect();
            let s = SymVector::new(n, coeffs).unwrap();
            prop_assert_eq!(sym_coords(&sym_uncoords(&s)), s);
        }

        #[test]
        fn eval_is_even(v in proptest::collection::vec(-5i64..5, 3)) {
            let g = GramMatrix::from_rows(vec![
                vec![int(2), int(-1), int(0)],
                vec![int(-1), int(2), int(-1)],
                vec![int(0), int(-1), int(2)],
            ]).unwrap();
            let w = LatticeVector(v);
            prop_assert_eq!(qform_eval(&g, &w).unwrap(), qform_eval(&g, &w.neg()).unwrap());
        }
    }
}
