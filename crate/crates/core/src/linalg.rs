//! Exact dense linear algebra over the rationals and the integers.
//!
//! Matrices are plain `Vec<Vec<_>>` row lists; every routine accepts an
//! explicit column count so that empty row lists are unambiguous.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{clear_denominators, lex_cmp, Rational};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_int(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let p = &head[rank];
        for row in tail.iter_mut() {
            for j in col + 1..cols {
                // exact by Sylvester's identity
                row[j] = (&p[col] * &row[j] - &row[col] * &p[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = head[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    rank_int(&ints, cols)
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : rows · x = 0}` in canonical form.
///
/// The basis is the reduced row echelon form of the solution space with
/// every vector cleared to a primitive integer vector, so equal subspaces
/// always produce identical output.
pub fn kernel(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    canonical_span(&basis, cols)
}

/// Kernel of an integer matrix, see [`kernel`].
pub fn kernel_int(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let rats: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    kernel(&rats, cols)
}

/// Canonical primitive-integer basis of the row space of `vectors`.
pub fn canonical_span(vectors: &[Vec<Rational>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = vectors.to_vec();
    rref(&mut m, cols);
    m.iter().map(|r| clear_denominators(r)).collect()
}

/// True when every vector of `inner` lies in the row space of `outer`.
pub fn span_contains(outer: &[Vec<Rational>], inner: &[Vec<Rational>], cols: usize) -> bool {
    let base = rank(outer, cols);
    let mut all = outer.to_vec();
    all.extend_from_slice(inner);
    rank(&all, cols) == base
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for j in col..n {
                row[j] -= &factor * &pivot_row[j];
            }
        }
    }
    det
}

/// Unique solution of the square system `a x = b`, or `None` if singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, n);
    if pivots.len() != n {
        return None;
    }
    Some(m.iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut m, n);
    if pivots.len() != n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Upper-triangular decomposition used by the ellipsoid enumeration:
/// `xᵀ A x = Σ_i d_i (x_i + Σ_{j>i} μ_ij x_j)²`.
///
/// Returns `None` when a pivot is not positive, i.e. `A` is not positive
/// definite.
#[derive(Debug, Clone)]
pub struct Ldl {
    pub diag: Vec<Rational>,
    /// `mu[i][j]` for `j > i`; other entries are zero.
    pub mu: Vec<Vec<Rational>>,
}

pub fn ldl(a: &[Vec<Rational>]) -> Option<Ldl> {
    let n = a.len();
    let mut q = a.to_vec();
    for i in 0..n {
        if !q[i][i].is_positive() {
            return None;
        }
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let delta = &q[k][i] * &q[i][l];
                q[k][l] -= delta;
            }
        }
    }
    let diag = (0..n).map(|i| q[i][i].clone()).collect();
    let mu = (0..n)
        .map(|i| (0..n).map(|j| if j > i { q[i][j].clone() } else { Rational::zero() }).collect())
        .collect();
    Some(Ldl { diag, mu })
}

/// Sorts integer vectors lexicographically and removes duplicates.
pub fn sort_dedup(vectors: &mut Vec<Vec<BigInt>>) {
    vectors.sort_by(|a, b| lex_cmp(a, b));
    vectors.dedup();
}
