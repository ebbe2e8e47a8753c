//! Delaunay polytopes around the origin and the affine relations they
//! impose on norms.
//!
//! Every Delaunay polytope is a translate of one that has the origin as a
//! vertex, and those correspond to the vertices of the Voronoi cell of the
//! origin. A form `X` keeps a polytope with vertex set `V` inscribed in an
//! empty ellipsoid exactly when `Σ λ_v vᵀXv = 0` for every affine
//! dependency `Σ λ_v v = 0`, `Σ λ_v = 0`. These equalities cut out the
//! linear span of the L-domain; the coset equalities are a subset of them.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{int, Rational};
use crate::cone::{extreme_rays, ConeHRep};
use crate::enumerate::Ellipsoid;
use crate::form::{coeff_dim, sym_index, GramMatrix, LatticeVector};
use crate::linalg;
use crate::minvec::CosetMinSet;
use crate::{Error, Result};

/// Vertex set of a Delaunay polytope, translated so that its
/// lexicographically smallest vertex is the origin and sorted. Of a polytope
/// and its negative, the lexicographically smaller normal form is kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DelaunayPolytope {
    pub vertices: Vec<LatticeVector>,
}

impl DelaunayPolytope {
    pub fn normalize(points: &[Vec<i64>]) -> Self {
        let shifted = |pts: &[Vec<i64>]| -> Vec<Vec<i64>> {
            let base = pts.iter().min().expect("polytope has vertices").clone();
            let mut out: Vec<Vec<i64>> = pts.iter().map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect()).collect();
            out.sort();
            out
        };
        let neg: Vec<Vec<i64>> = points.iter().map(|p| p.iter().map(|x| -x).collect()).collect();
        let best = core::cmp::min(shifted(points), shifted(&neg));
        Self { vertices: best.into_iter().map(LatticeVector).collect() }
    }

    /// More vertices than an `n`-simplex; only these give relations.
    pub fn is_simplex(&self, n: usize) -> bool {
        self.vertices.len() == n + 1
    }

    /// Integer rows, in coefficient-space coordinates, of the relations
    /// `Σ λ_v vᵀXv = 0` for a basis of the affine dependencies `λ`.
    pub fn relations(&self) -> Vec<Vec<BigInt>> {
        let count = self.vertices.len();
        let Some(n) = self.vertices.first().map(LatticeVector::dim) else {
            return Vec::new();
        };
        let mut system: Vec<Vec<Rational>> = (0..n)
            .map(|i| self.vertices.iter().map(|v| int(v.coords()[i])).collect())
            .collect();
        system.push(alloc::vec![Rational::one(); count]);
        let lambdas = linalg::kernel(&system, count);
        lambdas
            .iter()
            .map(|lambda| {
                let mut row = alloc::vec![BigInt::zero(); coeff_dim(n)];
                for (l, v) in lambda.iter().zip(&self.vertices) {
                    if l.is_zero() {
                        continue;
                    }
                    let c = v.coords();
                    for i in 0..n {
                        for j in i..n {
                            let factor = if i == j { 1 } else { 2 };
                            row[sym_index(n, i, j)] += l * BigInt::from(factor * c[i] * c[j]);
                        }
                    }
                }
                row
            })
            .collect()
    }
}

/// Voronoi-relevant vectors: both signs of the minimal vector of every
/// simple coset.
pub fn voronoi_relevant(sets: &[CosetMinSet]) -> Vec<LatticeVector> {
    sets.iter().filter(|s| s.is_simple()).flat_map(|s| s.all_vectors()).collect()
}

/// The Voronoi cell `{x : 2 xᵀ g v <= vᵀ g v}` homogenized to a cone in
/// `n + 1` coordinates `(x, t)`, with `t >= 0`.
pub fn voronoi_cell_cone(g: &GramMatrix, relevant: &[LatticeVector]) -> ConeHRep {
    let n = g.dim();
    let sym = g.as_sym();
    let mut rows: Vec<Vec<Rational>> = relevant
        .iter()
        .map(|v| {
            let mut row: Vec<Rational> = (0..n)
                .map(|i| (0..n).map(|j| &sym[(i, j)] * int(v.coords()[j])).sum())
                .collect();
            let norm = sym.eval(v.coords()).expect("dimension matches");
            row.push(-norm / int(2));
            row
        })
        .collect();
    let mut t = alloc::vec![Rational::zero(); n + 1];
    t[n] = int(-1);
    rows.push(t);
    ConeHRep::new(n + 1, Vec::new(), rows).expect("rows have length n + 1")
}

/// Vertices of the Voronoi cell of the origin, in lattice coordinates.
pub fn voronoi_cell_vertices(g: &GramMatrix, sets: &[CosetMinSet]) -> Result<Vec<Vec<Rational>>> {
    let n = g.dim();
    let cone = voronoi_cell_cone(g, &voronoi_relevant(sets));
    let rays = extreme_rays(&cone)?;
    let mut out = Vec::with_capacity(rays.len());
    for ray in rays {
        let t = Rational::from_integer(ray.dir()[n].clone());
        if t.is_zero() {
            return Err(Error::NotPositiveDefinite { index: 0 });
        }
        out.push(ray.dir()[..n].iter().map(|x| Rational::from_integer(x.clone()) / &t).collect());
    }
    Ok(out)
}

/// Lattice points on the empty sphere centred at a Voronoi vertex `c`,
/// i.e. with `(p − c)ᵀ g (p − c) = cᵀ g c`.
pub fn delaunay_vertices(g: &GramMatrix, ldl: &linalg::Ldl, center: &[Rational]) -> Vec<Vec<i64>> {
    let sym = g.as_sym();
    let n = g.dim();
    let mut radius = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            radius += &sym[(i, j)] * &center[i] * &center[j];
        }
    }
    let mut search = Ellipsoid::new(ldl, radius);
    search.center = Some(center);
    search.run().1
}

/// Delaunay polytopes of `g` up to translation and central symmetry.
pub fn delaunay_polytopes(g: &GramMatrix, sets: &[CosetMinSet]) -> Result<Vec<DelaunayPolytope>> {
    let ldl = linalg::ldl(&g.as_sym().rows()).ok_or(Error::NotPositiveDefinite { index: 0 })?;
    let mut classes = BTreeSet::new();
    for c in voronoi_cell_vertices(g, sets)? {
        classes.insert(DelaunayPolytope::normalize(&delaunay_vertices(g, &ldl, &c)));
    }
    Ok(classes.into_iter().collect())
}
