//! Exact polyhedral cones `{x : E x = 0, C x <= 0}` and their extreme rays.
//!
//! Extreme rays come from the double description method run inside the
//! solution space of the equalities. All arithmetic is on primitive integer
//! vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{clear_denominators, dot_int, lex_cmp, normalize_sign, primitive, to_rationals, Rational};
use crate::linalg;
use crate::{Error, Result};

/// Half-space description; every inequality row `r` means `r · x <= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeHRep {
    dim: usize,
    equalities: Vec<Vec<Rational>>,
    inequalities: Vec<Vec<Rational>>,
}

impl ConeHRep {
    pub fn new(dim: usize, equalities: Vec<Vec<Rational>>, inequalities: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(bad) = equalities.iter().chain(&inequalities).find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        Ok(Self { dim, equalities, inequalities })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[Vec<Rational>] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Vec<Rational>] {
        &self.inequalities
    }

    /// Same cone with rows permuted; used to check order independence.
    pub fn permuted(&self, eq_order: &[usize], ineq_order: &[usize]) -> Self {
        Self {
            dim: self.dim,
            equalities: eq_order.iter().map(|&i| self.equalities[i].clone()).collect(),
            inequalities: ineq_order.iter().map(|&i| self.inequalities[i].clone()).collect(),
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim
            && self.equalities.iter().all(|r| crate::arith::dot(r, x).is_zero())
            && self.inequalities.iter().all(|r| !crate::arith::dot(r, x).is_positive())
    }

    /// Indices of inequality rows tight at `x`.
    pub fn tight_rows(&self, x: &[Rational]) -> Vec<usize> {
        (0..self.inequalities.len()).filter(|&i| crate::arith::dot(&self.inequalities[i], x).is_zero()).collect()
    }

    /// Rank of the equalities together with the inequalities tight at `x`.
    pub fn tight_rank(&self, x: &[Rational]) -> usize {
        let mut rows = self.equalities.clone();
        rows.extend(self.tight_rows(x).into_iter().map(|i| self.inequalities[i].clone()));
        linalg::rank(&rows, self.dim)
    }

    /// Basis of the lineality space `{x : E x = 0, C x = 0}`.
    pub fn lineality(&self) -> Vec<Vec<BigInt>> {
        let mut rows = self.equalities.clone();
        rows.extend(self.inequalities.iter().cloned());
        linalg::kernel(&rows, self.dim)
    }
}

/// A primitive integer direction. The sign is the direction of the ray.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray(Vec<BigInt>);

impl Ray {
    /// Divides out the content; panics on the zero vector.
    pub fn new(dir: Vec<BigInt>) -> Self {
        assert!(dir.iter().any(|x| !x.is_zero()), "a ray needs a nonzero direction");
        Ray(primitive(&dir))
    }

    pub fn from_rationals(dir: &[Rational]) -> Self {
        Ray::new(clear_denominators(dir))
    }

    pub fn from_i64(dir: &[i64]) -> Self {
        Ray::new(dir.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dir(&self) -> &[BigInt] {
        &self.0
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        to_rationals(&self.0)
    }
}

impl PartialOrd for Ray {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ray {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(&self.0, &other.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Adjacency {
    /// No third ray is tight on every row common to the pair.
    #[default]
    Combinatorial,
    /// The common tight rows have rank `k - 2`.
    Algebraic,
}

/// Complete sorted list of extreme rays of a pointed cone.
pub fn extreme_rays(h: &ConeHRep) -> Result<Vec<Ray>> {
    extreme_rays_with(h, Adjacency::Combinatorial)
}

pub fn extreme_rays_with(h: &ConeHRep, adjacency: Adjacency) -> Result<Vec<Ray>> {
    let d = h.dim;
    let basis: Vec<Vec<BigInt>> = if h.equalities.is_empty() {
        (0..d).map(|i| (0..d).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
    } else {
        linalg::kernel(&h.equalities, d)
    };
    let k = basis.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let lift = |y: &[BigInt]| -> Vec<BigInt> {
        (0..d).map(|i| basis.iter().zip(y).fold(BigInt::zero(), |acc, (b, c)| acc + &b[i] * c)).collect()
    };

    let ints: Vec<Vec<BigInt>> = h.inequalities.iter().map(|r| clear_denominators(r)).collect();
    let mut order: Vec<usize> = (0..ints.len()).collect();
    order.sort_by(|&a, &b| {
        let nnz = |r: &[BigInt]| r.iter().filter(|x| !x.is_zero()).count();
        nnz(&ints[a]).cmp(&nnz(&ints[b])).then_with(|| lex_cmp(&ints[a], &ints[b]))
    });
    let rows: Vec<Vec<BigInt>> = order
        .iter()
        .map(|&i| basis.iter().map(|b| dot_int(&ints[i], b)).collect())
        .collect();

    if linalg::rank_int(&rows, k) < k {
        let w = linalg::kernel_int(&rows, k).swap_remove(0);
        let mut witness = primitive(&lift(&w));
        normalize_sign(&mut witness);
        return Err(Error::NotPointed { witness });
    }

    // Initial simplicial cone from k independent rows, taken in order.
    let mut initial: Vec<usize> = Vec::with_capacity(k);
    for (i, row) in rows.iter().enumerate() {
        let mut trial: Vec<Vec<BigInt>> = initial.iter().map(|&j| rows[j].clone()).collect();
        trial.push(row.clone());
        if linalg::rank_int(&trial, k) == trial.len() {
            initial.push(i);
            if initial.len() == k {
                break;
            }
        }
    }
    let a0: Vec<Vec<Rational>> = initial.iter().map(|&i| to_rationals(&rows[i])).collect();
    let inv = linalg::inverse(&a0).expect("initial rows are independent");
    let m = rows.len();
    let mut rays: Vec<DdRay> = (0..k)
        .map(|j| {
            let col: Vec<Rational> = (0..k).map(|i| -inv[i][j].clone()).collect();
            let mut zero = BitSet::new(m);
            for (pos, &row) in initial.iter().enumerate() {
                if pos != j {
                    zero.insert(row);
                }
            }
            DdRay { y: clear_denominators(&col), zero }
        })
        .collect();

    for (idx, row) in rows.iter().enumerate() {
        if initial.contains(&idx) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot_int(row, &r.y)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut next: Vec<DdRay> = Vec::new();
        for &p in &positive {
            for &q in &negative {
                if !adjacent(&rays, p, q, k, &rows, adjacency) {
                    continue;
                }
                let y: Vec<BigInt> = rays[q]
                    .y
                    .iter()
                    .zip(&rays[p].y)
                    .map(|(yq, yp)| &values[p] * yq - &values[q] * yp)
                    .collect();
                let mut zero = rays[p].zero.intersection(&rays[q].zero);
                zero.insert(idx);
                next.push(DdRay { y: primitive(&y), zero });
            }
        }
        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                ray.zero.insert(idx);
                next.push(ray);
            } else if values[i].is_negative() {
                next.push(ray);
            }
        }
        rays = next;
    }

    let mut out: Vec<Ray> = rays.iter().map(|r| Ray::new(lift(&r.y))).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

struct DdRay {
    y: Vec<BigInt>,
    zero: BitSet,
}

fn adjacent(rays: &[DdRay], p: usize, q: usize, k: usize, rows: &[Vec<BigInt>], mode: Adjacency) -> bool {
    let common = rays[p].zero.intersection(&rays[q].zero);
    if k >= 2 && common.len() < k - 2 {
        return false;
    }
    match mode {
        Adjacency::Combinatorial => !rays
            .iter()
            .enumerate()
            .any(|(r, ray)| r != p && r != q && common.is_subset(&ray.zero)),
        Adjacency::Algebraic => {
            let tight: Vec<Vec<BigInt>> = common.iter().map(|i| rows[i].clone()).collect();
            linalg::rank_int(&tight, k) + 2 == k
        }
    }
}

#[derive(Debug, Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(size: usize) -> Self {
        BitSet(vec![0; size.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &Self) -> Self {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

/// Dimension of the linear hull of the cone.
pub fn cone_dim(h: &ConeHRep) -> usize {
    let lineality = h.lineality();
    let mut pointed = h.clone();
    pointed.equalities.extend(lineality.iter().map(|v| to_rationals(v)));
    let rays = extreme_rays(&pointed).expect("cone is pointed once its lineality space is removed");
    let dirs: Vec<Vec<Rational>> = rays.iter().map(Ray::to_rationals).collect();
    lineality.len() + linalg::rank(&dirs, h.dim)
}

/// `out[i][j]` is true when inequality `i` is tight at ray `j`.
pub fn incidence(h: &ConeHRep, rays: &[Ray]) -> Result<Vec<Vec<bool>>> {
    let dirs: Vec<Vec<Rational>> = rays.iter().map(Ray::to_rationals).collect();
    for (index, dir) in dirs.iter().enumerate() {
        if dir.len() != h.dim {
            return Err(Error::DimensionMismatch { expected: h.dim, found: dir.len() });
        }
        if !h.contains(dir) {
            return Err(Error::RayOutsideCone { index });
        }
    }
    Ok(h.inequalities
        .iter()
        .map(|row| dirs.iter().map(|d| crate::arith::dot(row, d).is_zero()).collect())
        .collect())
}
