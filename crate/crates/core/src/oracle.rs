//! Brute-force cross-checks.
//!
//! These routines share nothing with the fast paths they check: minimal
//! vectors come from a plain box scan, extreme rays from solving every
//! subset of constraint rows, and Voronoi vertices from solving every
//! `n`-subset of facet inequalities with fixed-width fraction-free
//! arithmetic.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{clear_denominators, subsets, Rational};
use crate::cone::{ConeHRep, Ray};
use crate::form::{GramMatrix, LatticeVector};
use crate::linalg;
use crate::minvec::CosetLabel;

/// Minimal vectors of a coset among integer vectors with `|x_i| <= radius`,
/// one per `±` pair, sorted. Returns the minimal norm too.
pub fn box_min_vectors(g: &GramMatrix, label: &CosetLabel, radius: i64) -> (Rational, Vec<LatticeVector>) {
    let n = g.dim();
    let mut best: Option<Rational> = None;
    let mut found = Vec::new();
    let mut x = vec![-radius; n];
    loop {
        let v = LatticeVector(x.clone());
        if label.contains(&v) {
            let norm = g.as_sym().eval(&x).expect("dimension matches");
            match &best {
                Some(b) if norm > *b => {}
                Some(b) if norm == *b => found.push(v),
                _ => {
                    best = Some(norm);
                    found = vec![v];
                }
            }
        }
        let mut i = 0;
        while i < n && x[i] == radius {
            x[i] = -radius;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    let mut half: Vec<LatticeVector> = found
        .into_iter()
        .filter(|v| v.coords().iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .collect();
    half.sort();
    (best.expect("label has members in the box"), half)
}

/// Extreme rays by solving every subset of inequality rows together with the
/// equalities and keeping one-dimensional solutions that satisfy the cone.
/// Exponential in the number of inequalities; meant for at most a dozen.
pub fn brute_force_rays(h: &ConeHRep) -> Vec<Ray> {
    let d = h.dim();
    let m = h.inequalities().len();
    let mut out: BTreeSet<Ray> = BTreeSet::new();
    for size in 0..=m {
        for subset in subsets(m, size) {
            let mut rows = h.equalities().to_vec();
            rows.extend(subset.iter().map(|&i| h.inequalities()[i].clone()));
            let kernel = linalg::kernel(&rows, d);
            if kernel.len() != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let dir: Vec<BigInt> = kernel[0].iter().map(|x| x * sign).collect();
                let rats: Vec<Rational> = dir.iter().map(|x| Rational::from_integer(x.clone())).collect();
                if h.contains(&rats) {
                    out.insert(Ray::new(dir));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Vertices of `{x : a_i · x <= c_i}` by solving all `n`-subsets of rows.
///
/// Rows are scaled to integers and each subset is solved by Cramer's rule
/// with `i128` Bareiss determinants; the inputs must be small enough not to
/// overflow (a panic reports it). Returns the sorted distinct vertices.
pub fn brute_force_vertices(rows: &[(Vec<Rational>, Rational)], n: usize) -> Vec<Vec<Rational>> {
    let scaled: Vec<(Vec<i128>, i128)> = rows
        .iter()
        .map(|(a, c)| {
            let mut all = a.clone();
            all.push(c.clone());
            let lcm = all.iter().fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
            let ints: Vec<i128> = all.iter().map(|v| to_i128(&(v * &lcm).to_integer())).collect();
            (ints[..n].to_vec(), ints[n])
        })
        .collect();
    let mut out: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut chosen = vec![0usize; n];
    visit_subsets(scaled.len(), n, 0, 0, &mut chosen, &mut |idx| {
        let a: Vec<&[i128]> = idx.iter().map(|&i| scaled[i].0.as_slice()).collect();
        let det = det_i128(&a.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        if det == 0 {
            return;
        }
        let nums: Vec<i128> = (0..n)
            .map(|j| {
                let m: Vec<Vec<i128>> = idx
                    .iter()
                    .map(|&i| {
                        let mut r = scaled[i].0.clone();
                        r[j] = scaled[i].1;
                        r
                    })
                    .collect();
                det_i128(&m)
            })
            .collect();
        // x = nums / det; check a · nums <= c · det with the sign of det
        let feasible = scaled.iter().all(|(a, c)| {
            let lhs: i128 = a.iter().zip(&nums).map(|(p, q)| p.checked_mul(*q).expect("overflow")).sum();
            let rhs = c.checked_mul(det).expect("overflow");
            if det > 0 {
                lhs <= rhs
            } else {
                lhs >= rhs
            }
        });
        if feasible {
            let x = nums
                .iter()
                .map(|&p| Rational::new(BigInt::from(p), BigInt::from(det)))
                .collect();
            out.insert(x);
        }
    });
    out.into_iter().collect()
}

fn visit_subsets(m: usize, k: usize, start: usize, depth: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if depth == k {
        f(chosen);
        return;
    }
    for i in start..=(m - (k - depth)) {
        chosen[depth] = i;
        visit_subsets(m, k, i + 1, depth + 1, chosen, f);
    }
}

fn to_i128(v: &BigInt) -> i128 {
    i128::try_from(v).expect("oracle input exceeds i128")
}

fn det_i128(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if p != col {
            m.swap(p, col);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let v = m[col][col].checked_mul(m[r][c]).expect("overflow")
                    - m[r][col].checked_mul(m[col][c]).expect("overflow");
                m[r][c] = v / prev;
            }
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    sign * m[n - 1][n - 1]
}

/// Canonical form of a ray direction for set comparisons.
pub fn canonical_dir(v: &[Rational]) -> Vec<BigInt> {
    clear_denominators(v)
}
