//! The lattices `L(γ)` and the L-domain of `D_n*`.
//!
//! `L(γ)` is generated by mutually orthogonal vectors `e_1, …, e_n` with
//! `e_i² = 2γ_i` together with `b = ½ Σ e_i`. In the basis
//! `e_1, …, e_{n-1}, b` its Gram matrix is
//!
//! ```text
//! a_ii = 2γ_i,  a_ij = 0,  a_in = γ_i,  a_nn = α = ½ Σ γ_i   (i, j < n)
//! ```
//!
//! and `γ = (1, …, 1)` gives `D_n*`. The cone `G_n ⊂ R^n` of parameters with
//! `γ(S) < α` for every `m`-subset `S` (`m = ⌊n/2⌋`) maps onto the L-domain
//! `D_n` of `D_n*`. For odd `n` both cones have dimension `n` and `2n`
//! extreme rays; for even `n` they collapse to a single ray.
//!
//! Subsets and coordinate indices are 0-based throughout this module.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{int, rat, subsets, binomial, Rational};
use crate::cone::{ConeHRep, Ray};
use crate::form::{coeff_dim, sym_coords, sym_index, GramMatrix, SymMatrix, SymVector};
use crate::linalg;
use crate::{Error, Result};

/// Parameters `γ_1, …, γ_n >= 0` of `L(γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaVector(Vec<Rational>);

impl GammaVector {
    pub fn new(gamma: Vec<Rational>) -> Result<Self> {
        if let Some(index) = gamma.iter().position(|g| g.is_negative()) {
            return Err(Error::NegativeGamma { index });
        }
        Ok(Self(gamma))
    }

    pub fn ones(n: usize) -> Self {
        Self(vec![Rational::one(); n])
    }

    pub fn from_i64(gamma: &[i64]) -> Result<Self> {
        Self::new(gamma.iter().map(|&g| int(g)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// `γ(S) = Σ_{i∈S} γ_i`.
    pub fn sum_over(&self, s: &[usize]) -> Rational {
        s.iter().map(|&i| &self.0[i]).sum()
    }

    /// `α = ½ γ(I_n)`, the norm of `b`.
    pub fn alpha(&self) -> Rational {
        self.0.iter().sum::<Rational>() / int(2)
    }

    fn ensure_positive(&self) -> Result<()> {
        match self.0.iter().position(|g| !g.is_positive()) {
            Some(index) => Err(Error::NonPositiveGamma { index }),
            None => Ok(()),
        }
    }
}

/// Half the dimension, rounded down.
pub fn half(n: usize) -> usize {
    n / 2
}

/// The symmetric matrix of `f_γ`, also for boundary parameters with zeros.
pub fn gamma_sym_form(gv: &GammaVector) -> SymMatrix {
    let n = gv.dim();
    let g = gv.values();
    let alpha = gv.alpha();
    SymMatrix::from_upper(n, |i, j| {
        if j == n - 1 {
            if i == n - 1 {
                alpha.clone()
            } else {
                g[i].clone()
            }
        } else if i == j {
            &g[i] * int(2)
        } else {
            Rational::zero()
        }
    })
}

/// Gram matrix of `L(γ)` in the basis `e_1, …, e_{n-1}, b`.
pub fn gamma_form(gv: &GammaVector) -> Result<GramMatrix> {
    if gv.dim() == 0 {
        return Err(Error::UnsupportedDimension { n: 0, reason: "gamma must be nonempty" });
    }
    gv.ensure_positive()?;
    GramMatrix::new(gamma_sym_form(gv))
}

/// Coordinates of `f_γ` in the coefficient space.
pub fn embed_gamma(gv: &GammaVector) -> SymVector {
    sym_coords(&gamma_sym_form(gv))
}

/// Closure of `G_n`: one row `γ(S) − γ(I_n − S) <= 0` per `m`-subset `S`,
/// subsets in lexicographic order.
///
/// For even `n` the complement of an `m`-subset is again one, so those rows
/// alone cut out a whole line. `G_n` lies in the positive orthant, so even
/// `n` also gets the rows `−γ_i <= 0`; for odd `n` they are implied.
pub fn gn_hrep(n: usize) -> Result<ConeHRep> {
    if n < 3 {
        return Err(Error::UnsupportedDimension { n, reason: "G_n needs n >= 3" });
    }
    let mut rows: Vec<Vec<Rational>> = subsets(n, half(n))
        .into_iter()
        .map(|s| (0..n).map(|i| if s.contains(&i) { int(1) } else { int(-1) }).collect())
        .collect();
    if n.is_multiple_of(2) {
        rows.extend((0..n).map(|i| (0..n).map(|j| if i == j { int(-1) } else { int(0) }).collect()));
    }
    ConeHRep::new(n, vec![], rows)
}

/// The ray `γ_q^k`: all ones except `γ_k = 2q`.
pub fn gn_ray(n: usize, k: usize, q: u8) -> Ray {
    let dir: Vec<i64> = (0..n).map(|i| if i == k { 2 * q as i64 } else { 1 }).collect();
    Ray::from_i64(&dir)
}

/// Extreme rays of the closure of `G_n`, written down directly: the `2n`
/// rays `γ_q^k` for odd `n >= 5`, the all-ones ray for even `n >= 4`.
pub fn gn_extreme_rays_closed_form(n: usize) -> Result<Vec<Ray>> {
    if n < 4 {
        return Err(Error::UnsupportedDimension { n, reason: "closed form needs n >= 4" });
    }
    let mut rays = if n.is_multiple_of(2) {
        vec![Ray::from_i64(&vec![1; n])]
    } else {
        (0..n).flat_map(|k| [gn_ray(n, k, 0), gn_ray(n, k, 1)]).collect()
    };
    rays.sort();
    Ok(rays)
}

/// Where `γ` sits relative to `G_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GnPosition {
    Interior,
    /// On the boundary; lists every `m`-subset with `γ(S) = α`.
    Boundary { tight: Vec<Vec<usize>> },
    Outside,
}

pub fn classify_gamma(gv: &GammaVector) -> GnPosition {
    let n = gv.dim();
    let alpha = gv.alpha();
    let mut tight = Vec::new();
    for s in subsets(n, half(n)) {
        let v = gv.sum_over(&s);
        if v > alpha {
            return GnPosition::Outside;
        }
        if v == alpha {
            tight.push(s);
        }
    }
    if tight.is_empty() {
        GnPosition::Interior
    } else {
        GnPosition::Boundary { tight }
    }
}

/// Closure of the domain `D_n` in coefficient-space coordinates.
///
/// Equalities: `a_ij = 0` for `i < j < n-1` and `2a_{i,n-1} − a_ii = 0`
/// for `i < n-1`; for even `n` also `2a_nn − m a_ii = 0`. Inequalities:
/// `Σ_{i∈S} a_ii − 2a_nn <= 0` for `m`-subsets `S` of the first `n-1`
/// indices, then `2a_nn − Σ_{i∈T} a_ii <= 0` for `(m+1)`-subsets `T`.
pub fn dn_ldomain_hrep(n: usize) -> Result<ConeHRep> {
    if n < 4 {
        return Err(Error::UnsupportedDimension { n, reason: "D_n needs n >= 4" });
    }
    let m = half(n);
    let big = coeff_dim(n);
    let last = n - 1;
    let unit = |pairs: &[((usize, usize), i64)]| {
        let mut row = vec![Rational::zero(); big];
        for &((i, j), c) in pairs {
            row[sym_index(n, i, j)] += int(c);
        }
        row
    };
    let mut equalities = Vec::new();
    for i in 0..last {
        for j in i + 1..last {
            equalities.push(unit(&[((i, j), 1)]));
        }
    }
    for i in 0..last {
        equalities.push(unit(&[((i, last), 2), ((i, i), -1)]));
    }
    if n.is_multiple_of(2) {
        for i in 0..last {
            equalities.push(unit(&[((last, last), 2), ((i, i), -(m as i64))]));
        }
    }
    let mut inequalities = Vec::new();
    for s in subsets(last, m) {
        let mut pairs: Vec<((usize, usize), i64)> = s.iter().map(|&i| ((i, i), 1)).collect();
        pairs.push(((last, last), -2));
        inequalities.push(unit(&pairs));
    }
    for t in subsets(last, m + 1) {
        let mut pairs: Vec<((usize, usize), i64)> = t.iter().map(|&i| ((i, i), -1)).collect();
        pairs.push(((last, last), 2));
        inequalities.push(unit(&pairs));
    }
    ConeHRep::new(big, equalities, inequalities)
}

/// The extreme forms `f_q^k = f_{γ_q^k}` of the closure of `D_n`, odd `n`.
pub fn dn_extreme_forms(n: usize) -> Result<Vec<(usize, u8, SymMatrix)>> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::UnsupportedDimension { n, reason: "extreme forms need odd n >= 5" });
    }
    let mut out = Vec::new();
    for k in 0..n {
        for q in [0u8, 1] {
            let gamma: Vec<Rational> = (0..n).map(|i| if i == k { int(2 * q as i64) } else { int(1) }).collect();
            out.push((k, q, gamma_sym_form(&GammaVector(gamma))));
        }
    }
    Ok(out)
}

/// Structure of one facet `γ(S) = α` of the closure of `G_n`, odd `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSplit {
    pub subset: Vec<usize>,
    /// `γ_0^k` for `k ∉ S`.
    pub zero_rays: Vec<Ray>,
    /// `γ_1^k` for `k ∈ S`.
    pub one_rays: Vec<Ray>,
    /// `m+1` on `S`, `m` off `S`; the sum of either family.
    pub common: Ray,
}

pub fn gn_facet_splits(n: usize) -> Result<Vec<FacetSplit>> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::UnsupportedDimension { n, reason: "facet structure needs odd n >= 5" });
    }
    let m = half(n);
    Ok(subsets(n, m)
        .into_iter()
        .map(|s| {
            let zero_rays = (0..n).filter(|k| !s.contains(k)).map(|k| gn_ray(n, k, 0)).collect();
            let one_rays = s.iter().map(|&k| gn_ray(n, k, 1)).collect();
            let common: Vec<i64> = (0..n).map(|i| if s.contains(&i) { m as i64 + 1 } else { m as i64 }).collect();
            FacetSplit { subset: s, zero_rays, one_rays, common: Ray::from_i64(&common) }
        })
        .collect())
}

/// A vertex `x(k; S)` of the Voronoi polytope of `L(γ)`, in the orthogonal
/// `e`-basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VoronoiVertex {
    pub coords: Vec<Rational>,
    pub k: usize,
    pub subset: Vec<usize>,
    /// `±1` on `S ∪ {k}`, `0` elsewhere.
    pub signs: Vec<i8>,
}

/// `x_i = ε_i/2` on `S`, `x_k = ε_k (α − γ(S)) / (2γ_k)`, zero elsewhere.
pub fn vertex_formula(gv: &GammaVector, k: usize, subset: &[usize], signs: &[i8]) -> Vec<Rational> {
    let n = gv.dim();
    let mut x = vec![Rational::zero(); n];
    for &i in subset {
        x[i] = rat(signs[i] as i64, 2);
    }
    let offset = (gv.alpha() - gv.sum_over(subset)) / (&gv.values()[k] * int(2));
    x[k] = offset * int(signs[k] as i64);
    x
}

/// Sign vectors over `support`, all `2^|support|` of them, `+` first.
fn sign_patterns(n: usize, support: &[usize]) -> Vec<Vec<i8>> {
    (0u32..(1 << support.len()))
        .map(|mask| {
            let mut signs = vec![0i8; n];
            for (bit, &i) in support.iter().enumerate() {
                signs[i] = if mask >> (support.len() - 1 - bit) & 1 == 0 { 1 } else { -1 };
            }
            signs
        })
        .collect()
}

fn formula_instances(gv: &GammaVector) -> Vec<VoronoiVertex> {
    let n = gv.dim();
    let mut out = Vec::new();
    for s in subsets(n, half(n)) {
        for k in (0..n).filter(|k| !s.contains(k)) {
            let mut support = s.clone();
            support.push(k);
            support.sort_unstable();
            for signs in sign_patterns(n, &support) {
                let coords = vertex_formula(gv, k, &s, &signs);
                out.push(VoronoiVertex { coords, k, subset: s.clone(), signs });
            }
        }
    }
    out
}

/// Number of vertices `x(k; S)` for `γ` inside `G_n`, odd `n = 2m+1`:
/// `(m+1) · 2^{m+1} · C(n, m)`.
pub fn formula_vertex_count(n: usize) -> usize {
    let m = half(n);
    (n - m) * (1 << (m + 1)) * binomial(n, m)
}

/// All Voronoi vertices of `L(γ)` for `γ` strictly inside `G_n`, odd `n`.
/// Ordered by subset, then `k`, then sign pattern.
pub fn voronoi_vertices(gv: &GammaVector) -> Result<Vec<VoronoiVertex>> {
    let n = gv.dim();
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::UnsupportedDimension { n, reason: "Voronoi vertex formula needs odd n >= 3" });
    }
    if classify_gamma(gv) != GnPosition::Interior {
        return Err(Error::GammaNotInterior);
    }
    let vertices = formula_instances(gv);
    debug_assert!(vertices.iter().all(|v| check_vertex(gv, &v.coords).is_vertex(n)));
    Ok(vertices)
}

/// Half-spaces `a · x <= c` of the Voronoi polytope of `L(γ)` in the
/// `e`-basis: the box `|x_i| <= 1/2` (rows `+e_i`, `−e_i` per coordinate),
/// then `Σ γ_i ε_i x_i <= α/2` for every sign vector `ε`.
pub fn voronoi_constraints(gv: &GammaVector) -> Vec<(Vec<Rational>, Rational)> {
    let n = gv.dim();
    let mut rows = Vec::with_capacity(2 * n + (1 << n));
    for i in 0..n {
        for s in [1, -1] {
            let mut a = vec![Rational::zero(); n];
            a[i] = int(s);
            rows.push((a, rat(1, 2)));
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let bound = gv.alpha() / int(2);
    for signs in sign_patterns(n, &all) {
        let a = (0..n).map(|i| &gv.values()[i] * int(signs[i] as i64)).collect();
        rows.push((a, bound.clone()));
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCheck {
    pub feasible: bool,
    /// Indices into [`voronoi_constraints`] of the tight rows.
    pub tight: Vec<usize>,
    pub tight_rank: usize,
    /// Every tight sign row has `ε_i x_i > 0` wherever `x_i ≠ 0`.
    pub signs_agree: bool,
}

impl VertexCheck {
    pub fn is_vertex(&self, n: usize) -> bool {
        self.feasible && self.tight_rank == n
    }
}

pub fn check_vertex(gv: &GammaVector, x: &[Rational]) -> VertexCheck {
    let n = gv.dim();
    let rows = voronoi_constraints(gv);
    let mut feasible = true;
    let mut tight = Vec::new();
    for (i, (a, c)) in rows.iter().enumerate() {
        let v = crate::arith::dot(a, x);
        if v > *c {
            feasible = false;
        } else if v == *c {
            tight.push(i);
        }
    }
    let tight_rows: Vec<Vec<Rational>> = tight.iter().map(|&i| rows[i].0.clone()).collect();
    let tight_rank = linalg::rank(&tight_rows, n);
    let signs_agree = tight.iter().filter(|&&i| i >= 2 * n).all(|&i| {
        let a = &rows[i].0;
        (0..n).all(|j| x[j].is_zero() || (a[j].is_positive() == x[j].is_positive() && !a[j].is_zero()))
    });
    VertexCheck { feasible, tight, tight_rank, signs_agree }
}

/// One formula vertex with the signs restricted to its support, so that
/// `x(l; S)` with `x_l = 0` is a single entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormulaVertex {
    pub k: usize,
    pub subset: Vec<usize>,
    pub signs: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueGroup {
    pub point: Vec<Rational>,
    pub members: Vec<FormulaVertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueReport {
    /// Every `m`-subset with `γ(S) = α`.
    pub tight_subsets: Vec<Vec<usize>>,
    /// Distinct vertex coordinates, sorted.
    pub vertices: Vec<Vec<Rational>>,
    /// Points produced by more than one formula vertex.
    pub merged_groups: Vec<GlueGroup>,
    pub vertex_count: usize,
}

/// Vertices of `L(γ)` for `γ` on the boundary of `G_n`, with the groups of
/// formula vertices that coincide.
pub fn glue_vertices(gv: &GammaVector) -> Result<GlueReport> {
    let n = gv.dim();
    if n < 3 {
        return Err(Error::UnsupportedDimension { n, reason: "gluing needs n >= 3" });
    }
    gv.ensure_positive()?;
    let tight_subsets = match classify_gamma(gv) {
        GnPosition::Interior => return Err(Error::GammaInterior),
        GnPosition::Outside => return Err(Error::GammaOutsideClosure),
        GnPosition::Boundary { tight } => tight,
    };
    let mut groups: BTreeMap<Vec<Rational>, Vec<FormulaVertex>> = BTreeMap::new();
    for v in formula_instances(gv) {
        let signs = v
            .signs
            .iter()
            .zip(&v.coords)
            .map(|(&s, x)| if x.is_zero() { 0 } else { s })
            .collect();
        let member = FormulaVertex { k: v.k, subset: v.subset, signs };
        let entry = groups.entry(v.coords).or_default();
        if !entry.contains(&member) {
            entry.push(member);
        }
    }
    let vertices: Vec<Vec<Rational>> = groups.keys().cloned().collect();
    let merged_groups = groups
        .into_iter()
        .filter(|(_, members)| members.len() > 1)
        .map(|(point, mut members)| {
            members.sort();
            GlueGroup { point, members }
        })
        .collect();
    Ok(GlueReport { tight_subsets, vertex_count: vertices.len(), vertices, merged_groups })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{cone_dim, extreme_rays};
    use crate::form::sym_uncoords;
    use crate::arith::clear_denominators;

    fn g(v: &[i64]) -> GammaVector {
        GammaVector::from_i64(v).unwrap()
    }

    #[test]
    fn gamma_form_matches_dstar_and_scales() {
        let base = gamma_form(&g(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(base, crate::roots::root_lattice(crate::roots::Family::Dstar, 5).unwrap());
        let doubled = gamma_form(&g(&[2, 2, 2, 2, 2])).unwrap();
        assert_eq!(doubled.as_sym(), &base.as_sym().scaled(&int(2)));
        let skewed = gamma_form(&g(&[1, 1, 1, 1, 2])).unwrap();
        assert_eq!(skewed[(4, 4)], int(3));
        assert_eq!(skewed[(3, 4)], int(1));
        assert_eq!(skewed[(3, 3)], int(2));
        assert_eq!(gamma_form(&g(&[1, 0, 1])), Err(Error::NonPositiveGamma { index: 1 }));
        assert_eq!(GammaVector::from_i64(&[1, -1]), Err(Error::NegativeGamma { index: 1 }));
    }

    #[test]
    fn b_has_norm_alpha() {
        for n in 4..8 {
            let form = gamma_form(&GammaVector::ones(n)).unwrap();
            let mut b = vec![0i64; n];
            b[n - 1] = 1;
            assert_eq!(form.as_sym().eval(&b).unwrap(), rat(n as i64, 2));
        }
    }

    #[test]
    fn gn_row_counts() {
        assert_eq!(gn_hrep(5).unwrap().inequalities().len(), 10);
        assert_eq!(gn_hrep(7).unwrap().inequalities().len(), 35);
        assert_eq!(gn_hrep(4).unwrap().inequalities().len(), 6 + 4);
        assert!(gn_hrep(2).is_err());
    }

    #[test]
    fn even_closure_is_a_ray() {
        for n in [4, 6] {
            let h = gn_hrep(n).unwrap();
            assert_eq!(extreme_rays(&h).unwrap(), gn_extreme_rays_closed_form(n).unwrap());
            assert_eq!(cone_dim(&h), 1);
        }
    }

    #[test]
    fn closed_form_rays() {
        let rays = gn_extreme_rays_closed_form(5).unwrap();
        assert_eq!(rays.len(), 10);
        assert!(rays.contains(&Ray::from_i64(&[1, 1, 1, 1, 0])));
        assert!(rays.contains(&Ray::from_i64(&[2, 1, 1, 1, 1])));
        assert_eq!(gn_extreme_rays_closed_form(6).unwrap(), vec![Ray::from_i64(&[1; 6])]);
        assert!(gn_extreme_rays_closed_form(3).is_err());
    }

    #[test]
    fn ldomain_rows() {
        let h = dn_ldomain_hrep(5).unwrap();
        assert_eq!(h.equalities().len(), 10);
        assert_eq!(h.inequalities().len(), 10);
        assert_eq!(cone_dim(&h), 5);
        assert_eq!(cone_dim(&dn_ldomain_hrep(6).unwrap()), 1);
        assert!(dn_ldomain_hrep(3).is_err());
    }

    #[test]
    fn ldomain_rows_pull_back_to_gn_rows() {
        // the embedding γ ↦ f_γ is linear; pulling each D_n row back gives a
        // positive multiple of a G_n row, and every G_n row is hit once
        for n in [5usize, 7] {
            let h = dn_ldomain_hrep(n).unwrap();
            let images: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    let mut e = vec![int(0); n];
                    e[i] = int(1);
                    embed_gamma(&GammaVector::new(e).unwrap()).into_coeffs()
                })
                .collect();
            let mut pulled: Vec<Vec<num_bigint::BigInt>> = h
                .inequalities()
                .iter()
                .map(|row| {
                    let r: Vec<Rational> = images.iter().map(|img| crate::arith::dot(row, img)).collect();
                    clear_denominators(&r)
                })
                .collect();
            let mut expected: Vec<Vec<num_bigint::BigInt>> =
                gn_hrep(n).unwrap().inequalities().iter().map(|r| clear_denominators(r)).collect();
            pulled.sort();
            expected.sort();
            assert_eq!(pulled, expected);
            // equalities vanish on the image
            for row in h.equalities() {
                for img in &images {
                    assert!(crate::arith::dot(row, img).is_zero());
                }
            }
        }
    }

    #[test]
    fn embedding_position() {
        let h = dn_ldomain_hrep(5).unwrap();
        let inside = embed_gamma(&GammaVector::ones(5));
        assert!(h.contains(inside.coeffs()));
        assert!(h.tight_rows(inside.coeffs()).is_empty());
        let boundary = embed_gamma(&g(&[1, 1, 1, 1, 0]));
        assert!(h.contains(boundary.coeffs()));
        assert!(!h.tight_rows(boundary.coeffs()).is_empty());
        // γ_1^1 lies on the facets whose G_5 subsets contain index 0
        let ray = g(&[2, 1, 1, 1, 1]);
        let tight_g = gn_hrep(5).unwrap().tight_rows(ray.values());
        let expected: Vec<usize> = subsets(5, 2).iter().enumerate().filter(|(_, s)| s.contains(&0)).map(|(i, _)| i).collect();
        assert_eq!(tight_g, expected);
        assert_eq!(h.tight_rows(embed_gamma(&ray).coeffs()).len(), expected.len());
        let outside = embed_gamma(&g(&[5, 1, 1, 1, 1]));
        assert!(!h.contains(outside.coeffs()));
    }

    #[test]
    fn extreme_rays_of_domain_are_extreme_forms() {
        let rays = extreme_rays(&dn_ldomain_hrep(5).unwrap()).unwrap();
        let mut forms: Vec<Ray> = dn_extreme_forms(5)
            .unwrap()
            .iter()
            .map(|(_, _, f)| Ray::from_rationals(sym_coords(f).coeffs()))
            .collect();
        forms.sort();
        assert_eq!(rays, forms);
        for (_, q, f) in dn_extreme_forms(5).unwrap() {
            assert_eq!(f.rank(), if q == 0 { 4 } else { 5 });
        }
        let _ = sym_uncoords;
    }

    #[test]
    fn vertex_formula_example() {
        let gv = GammaVector::ones(5);
        let mut signs = vec![0i8; 5];
        signs[0] = 1;
        signs[1] = 1;
        signs[2] = 1;
        let x = vertex_formula(&gv, 2, &[0, 1], &signs);
        assert_eq!(x, vec![rat(1, 2), rat(1, 2), rat(1, 4), int(0), int(0)]);
    }

    #[test]
    fn vertices_are_valid_and_distinct() {
        let gv = g(&[3, 3, 3, 3, 4]);
        assert_eq!(classify_gamma(&gv), GnPosition::Interior);
        let vs = voronoi_vertices(&gv).unwrap();
        assert_eq!(vs.len(), formula_vertex_count(5));
        let mut pts: Vec<&Vec<Rational>> = vs.iter().map(|v| &v.coords).collect();
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), vs.len());
        for v in &vs {
            let c = check_vertex(&gv, &v.coords);
            assert!(c.is_vertex(5));
            assert!(c.signs_agree);
        }
        assert_eq!(voronoi_vertices(&g(&[3, 3, 2, 2, 2])), Err(Error::GammaNotInterior));
        assert!(matches!(voronoi_vertices(&GammaVector::ones(4)), Err(Error::UnsupportedDimension { .. })));
    }

    #[test]
    fn gluing_single_tight_subset() {
        let report = glue_vertices(&g(&[3, 3, 2, 2, 2])).unwrap();
        assert_eq!(report.tight_subsets, vec![vec![0, 1]]);
        let on_s0: Vec<&GlueGroup> =
            report.merged_groups.iter().filter(|grp| grp.members.iter().all(|m| m.subset == [0, 1])).collect();
        assert_eq!(on_s0.len(), 4);
        for grp in on_s0 {
            assert_eq!(grp.members.len(), 3);
            assert!(grp.point[2..].iter().all(Zero::is_zero));
        }
        assert_eq!(report.vertex_count, 204);
        assert_eq!(glue_vertices(&GammaVector::ones(5)), Err(Error::GammaInterior));
        assert_eq!(glue_vertices(&g(&[9, 1, 1, 1, 1])), Err(Error::GammaOutsideClosure));
    }

    #[test]
    fn even_all_ones_is_tight_everywhere() {
        let report = glue_vertices(&GammaVector::ones(4)).unwrap();
        assert_eq!(report.tight_subsets.len(), binomial(4, 2));
        assert_eq!(report.vertex_count, 24);
    }
}
