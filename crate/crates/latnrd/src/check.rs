//! Cross-module invariants for `D_n*` and its domain, for one `n`.

use std::collections::BTreeSet;

use latnrd_core::arith::to_rationals;
use latnrd_core::cone::{cone_dim, extreme_rays, incidence, Ray};
use latnrd_core::dnstar::{
    dn_extreme_forms, dn_ldomain_hrep, formula_vertex_count, gamma_form, gn_extreme_rays_closed_form,
    gn_facet_splits, gn_hrep, half, voronoi_constraints, voronoi_vertices, GammaVector,
};
use latnrd_core::nrd::ConstraintMode;
use latnrd_core::{linalg, oracle, sym_coords, Rational};
use serde::Serialize;

use crate::{parallel, Error, Result};

/// The ray oracle visits every subset of inequality rows, so it only runs
/// on cones with at most this many.
pub const ORACLE_RAYS_MAX_ROWS: usize = 16;
/// Largest `n` for which the brute-force vertex oracle runs.
pub const ORACLE_VERTICES_MAX_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub n: usize,
    /// Dimension of the closed domain of `D_n*`.
    pub dim: usize,
    pub passed: bool,
    pub items: Vec<CheckItem>,
}

fn item(name: &str, passed: bool, detail: String) -> CheckItem {
    CheckItem { name: name.to_string(), passed, detail }
}

fn sorted(mut rays: Vec<Ray>) -> Vec<Ray> {
    rays.sort();
    rays
}

pub fn run(n: usize, oracle_checks: bool) -> Result<CheckReport> {
    if n < 4 {
        return Err(Error::Usage(format!("check needs n >= 4, got {n}")));
    }
    let odd = n % 2 == 1;
    let m = half(n);
    let mut items = Vec::new();

    let gn = gn_hrep(n)?;
    let gn_rays = sorted(extreme_rays(&gn)?);
    let closed = gn_extreme_rays_closed_form(n)?;
    items.push(item(
        "gn_rays",
        gn_rays == closed,
        format!("{} rays by double description, {} in closed form", gn_rays.len(), closed.len()),
    ));

    let domain = dn_ldomain_hrep(n)?;
    let dim = cone_dim(&domain);
    let expected_dim = if odd { n } else { 1 };
    items.push(item("domain_dim", dim == expected_dim, format!("dim {dim}, expected {expected_dim}")));

    let big = domain.dim();
    let ones = GammaVector::ones(n);
    let g = gamma_form(&ones)?;
    let result = parallel::nrd(&g, ConstraintMode::Star)?;
    let span: Vec<Vec<Rational>> = result.span_basis.iter().map(|v| v.coeffs().to_vec()).collect();
    let eq_space: Vec<Vec<Rational>> =
        linalg::kernel(domain.equalities(), big).iter().map(|v| to_rationals(v)).collect();
    let same = linalg::span_contains(&span, &eq_space, big) && linalg::span_contains(&eq_space, &span, big);
    items.push(item(
        "span",
        same && span.len() == eq_space.len(),
        format!("nrd span dim {}, equality subspace dim {}", span.len(), eq_space.len()),
    ));
    items.push(item("nrd", result.nrd == dim, format!("nrd {} vs domain dim {dim}", result.nrd)));

    let domain_rays = sorted(extreme_rays(&domain)?);
    if odd {
        let forms = dn_extreme_forms(n)?;
        let expected = sorted(forms.iter().map(|(_, _, f)| Ray::from_rationals(sym_coords(f).coeffs())).collect());
        let ranks_ok = forms.iter().all(|(_, q, f)| f.rank() == if *q == 0 { n - 1 } else { n });
        items.push(item(
            "extreme_forms",
            domain_rays == expected && ranks_ok,
            format!("{} rays, ranks {}", domain_rays.len(), if ranks_ok { "n-1 and n" } else { "wrong" }),
        ));

        let table = incidence(&gn, &gn_rays)?;
        let splits = gn_facet_splits(n)?;
        let mut facets_ok = table.len() == splits.len();
        for (row, split) in table.iter().zip(&splits) {
            let tight: BTreeSet<&Ray> = gn_rays.iter().zip(row).filter(|(_, &t)| t).map(|(r, _)| r).collect();
            let listed: BTreeSet<&Ray> = split.zero_rays.iter().chain(&split.one_rays).collect();
            facets_ok &= tight == listed && split.zero_rays.len() == m + 1 && split.one_rays.len() == m;
        }
        items.push(item(
            "facet_incidence",
            facets_ok,
            format!("{} facets, each with {} + {} rays", splits.len(), m + 1, m),
        ));

        let vertices = voronoi_vertices(&ones)?;
        let distinct: BTreeSet<&Vec<Rational>> = vertices.iter().map(|v| &v.coords).collect();
        let all_ok = vertices.iter().all(|v| {
            let c = latnrd_core::dnstar::check_vertex(&ones, &v.coords);
            c.is_vertex(n) && c.signs_agree
        });
        let count = formula_vertex_count(n);
        items.push(item(
            "voronoi_vertices",
            all_ok && distinct.len() == vertices.len() && vertices.len() == count,
            format!("{} vertices, formula count {count}", vertices.len()),
        ));

        if oracle_checks && n <= ORACLE_VERTICES_MAX_N {
            let brute = oracle::brute_force_vertices(&voronoi_constraints(&ones), n);
            let brute: BTreeSet<&Vec<Rational>> = brute.iter().collect();
            items.push(item(
                "oracle_vertices",
                brute == distinct,
                format!("{} vertices by exhaustive solving", brute.len()),
            ));
        }
    } else {
        let all_ones = domain_rays.len() == 1;
        items.push(item("extreme_forms", all_ones, format!("{} ray", domain_rays.len())));
    }

    if oracle_checks && gn.inequalities().len() <= ORACLE_RAYS_MAX_ROWS {
        let brute = oracle::brute_force_rays(&gn);
        items.push(item("oracle_rays", brute == gn_rays, format!("{} rays by exhaustive solving", brute.len())));
    }

    let passed = items.iter().all(|i| i.passed);
    Ok(CheckReport { n, dim, passed, items })
}
