//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use latnrd_core::arith::{subsets, to_rationals};
use latnrd_core::cone::{cone_dim, extreme_rays, incidence, Ray};
use latnrd_core::dnstar::{
    check_vertex, classify_gamma, dn_extreme_forms, dn_ldomain_hrep, gamma_form, glue_vertices,
    gn_extreme_rays_closed_form, gn_facet_splits, gn_hrep, half, voronoi_constraints, voronoi_vertices, GammaVector,
    GnPosition,
};
use latnrd_core::nrd::{ldomain_span, nrd};
use latnrd_core::{linalg, oracle, root_lattice, sym_coords, Family, GramMatrix, Rational};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.passed &= elapsed <= limit;
    out.detail = format!("{}; {:.2?} (limit {:?})", out.detail, elapsed, limit);
    out
}

fn table_rows() -> Vec<(Family, usize, usize)> {
    use Family::*;
    let mut rows = vec![(A, 1, 1)];
    rows.extend((2..=5).map(|n| (A, n, n + 1)));
    rows.extend((1..=5).map(|n| (Astar, n, n * (n + 1) / 2)));
    rows.extend((4..=6).map(|n| (D, n, 1)));
    rows.extend([(Dstar, 5, 5), (Dstar, 7, 7), (Dstar, 4, 1), (Dstar, 6, 1)]);
    rows.extend([(E6, 6, 1), (E6star, 6, 1), (E7, 7, 1), (E7star, 7, 1), (E8, 8, 1)]);
    rows
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(120), || {
        let mut wrong = Vec::new();
        let rows = table_rows();
        for &(family, n, expected) in &rows {
            let got = nrd(&root_lattice(family, n).unwrap()).unwrap().nrd;
            if got != expected {
                wrong.push(format!("{} expected {expected} got {got}", family.label(n)));
            }
        }
        if wrong.is_empty() {
            outcome(true, format!("{} lattices match the table", rows.len()))
        } else {
            outcome(false, wrong.join(", "))
        }
    })
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(5), || {
        let mut details = Vec::new();
        let mut passed = true;
        for n in [4, 5, 6, 7] {
            let rays = extreme_rays(&gn_hrep(n).unwrap()).unwrap();
            let expected_len = if n % 2 == 1 { 2 * n } else { 1 };
            let ok = rays.len() == expected_len && rays == gn_extreme_rays_closed_form(n).unwrap();
            passed &= ok;
            details.push(format!("G{n}: {} rays", rays.len()));
        }
        passed &= extreme_rays(&gn_hrep(4).unwrap()).unwrap() == vec![Ray::from_i64(&[1; 4])];
        outcome(passed, details.join(", "))
    })
}

fn criterion_3() -> Outcome {
    timed(Duration::from_secs(10), || {
        let mut passed = true;
        let mut details = Vec::new();
        for n in [4, 5, 6, 7] {
            let dim = cone_dim(&dn_ldomain_hrep(n).unwrap());
            passed &= dim == if n % 2 == 1 { n } else { 1 };
            details.push(format!("dim D{n} = {dim}"));
        }
        let mut rays = extreme_rays(&dn_ldomain_hrep(5).unwrap()).unwrap();
        rays.sort();
        let forms = dn_extreme_forms(5).unwrap();
        let mut expected: Vec<Ray> = forms.iter().map(|(_, _, f)| Ray::from_rationals(sym_coords(f).coeffs())).collect();
        expected.sort();
        let rays_ok = rays == expected;
        let ranks_ok = forms.iter().all(|(_, q, f)| f.rank() == if *q == 0 { 4 } else { 5 });
        passed &= rays_ok && ranks_ok;
        details.push(format!("D5 rays match forms: {rays_ok}, ranks 4/5: {ranks_ok}"));
        outcome(passed, details.join(", "))
    })
}

fn criterion_4() -> Outcome {
    let mut passed = true;
    let mut details = Vec::new();
    for n in [4, 5, 6, 7] {
        let h = dn_ldomain_hrep(n).unwrap();
        let big = h.dim();
        let span: Vec<Vec<Rational>> = ldomain_span(&gamma_form(&GammaVector::ones(n)).unwrap())
            .unwrap()
            .iter()
            .map(|m| sym_coords(m).coeffs().to_vec())
            .collect();
        let eq: Vec<Vec<Rational>> = linalg::kernel(h.equalities(), big).iter().map(|v| to_rationals(v)).collect();
        let ok = linalg::span_contains(&span, &eq, big) && linalg::span_contains(&eq, &span, big);
        passed &= ok;
        details.push(format!("n={n}: dims {}/{} {}", span.len(), eq.len(), if ok { "equal" } else { "differ" }));
    }
    outcome(passed, details.join(", "))
}

fn criterion_5() -> Outcome {
    let mut passed = true;
    let mut details = Vec::new();
    let mut five = BTreeSet::new();
    for (n, expected) in [(5, 80), (7, 560)] {
        let gv = GammaVector::ones(n);
        let vertices = voronoi_vertices(&gv).unwrap();
        let points: BTreeSet<Vec<Rational>> = vertices.iter().map(|v| v.coords.clone()).collect();
        let valid = vertices.iter().all(|v| {
            let c = check_vertex(&gv, &v.coords);
            c.feasible && c.tight_rank >= n
        });
        let count_ok = points.len() == expected;
        passed &= valid && count_ok;
        details.push(format!(
            "n={n}: {} vertices (expected {expected}) {}, all satisfy the inequalities with >= n tight: {valid}",
            points.len(),
            if count_ok { "ok" } else { "MISMATCH" }
        ));
        if n == 5 {
            five = points;
        }
    }
    let brute: BTreeSet<Vec<Rational>> =
        oracle::brute_force_vertices(&voronoi_constraints(&GammaVector::ones(5)), 5).into_iter().collect();
    let oracle_ok = brute == five;
    passed &= oracle_ok;
    details.push(format!("n=5 oracle: {} vertices, same set: {oracle_ok}", brute.len()));
    outcome(passed, details.join("; "))
}

fn criterion_6() -> Outcome {
    let gv = GammaVector::from_i64(&[3, 3, 2, 2, 2]).unwrap();
    let n = gv.dim();
    let m = half(n);
    let single = matches!(classify_gamma(&gv), GnPosition::Boundary { ref tight } if tight.len() == 1);
    let report = glue_vertices(&gv).unwrap();
    let s0 = report.tight_subsets[0].clone();
    // groups of x(l; S0), l outside S0: the point vanishes off S0
    let on_s0: Vec<_> = report
        .merged_groups
        .iter()
        .filter(|g| g.members.iter().all(|f| f.subset == s0))
        .collect();
    let per_pattern = on_s0.len() == 1 << s0.len() && on_s0.iter().all(|g| g.members.len() == m + 1);
    let brute = oracle::brute_force_vertices(&voronoi_constraints(&gv), n);
    let count_ok = brute.len() == report.vertex_count && brute == report.vertices;
    outcome(
        single && per_pattern && count_ok,
        format!(
            "gamma (3,3,2,2,2), tight S0 {:?}; {} sign patterns each merging {} formula vertices; {} distinct vertices, oracle {}",
            s0.iter().map(|i| i + 1).collect::<Vec<_>>(),
            on_s0.len(),
            on_s0.first().map_or(0, |g| g.members.len()),
            report.vertex_count,
            brute.len()
        ),
    )
}

fn run_prop<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Check) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, |v| test(v).map_err(TestCaseError::fail)).map_err(|e| e.to_string())
}

fn facet_incidence(n: usize) -> Check {
    let h = gn_hrep(n).map_err(|e| e.to_string())?;
    let rays = extreme_rays(&h).map_err(|e| e.to_string())?;
    let table = incidence(&h, &rays).map_err(|e| e.to_string())?;
    let m = half(n);
    for ((row, split), s) in table.iter().zip(gn_facet_splits(n).unwrap()).zip(subsets(n, m)) {
        let tight: BTreeSet<&Ray> = rays.iter().zip(row).filter(|(_, &t)| t).map(|(r, _)| r).collect();
        let listed: BTreeSet<&Ray> = split.zero_rays.iter().chain(&split.one_rays).collect();
        if tight != listed || split.zero_rays.len() != m + 1 || split.one_rays.len() != m || split.subset != s {
            return Err(format!("facet {s:?}: {} tight rays", tight.len()));
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut record = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };
    record("minvec", run_prop(64, (1usize..=4).prop_flat_map(pd_form), |g| minvec_matches_box(&g)));
    let lattices: Vec<(Family, usize)> = (1..=5)
        .flat_map(|n| [(Family::A, n), (Family::Astar, n)])
        .chain([(Family::D, 4), (Family::D, 5), (Family::Dstar, 4), (Family::Dstar, 5)])
        .collect();
    for &(family, n) in &lattices {
        let g: GramMatrix = root_lattice(family, n).unwrap();
        let expected = nrd(&g).unwrap().nrd;
        let label = family.label(n);
        record(&format!("unimodular {label}"), run_prop(25, unimodular(n), |u| nrd_unimodular_invariant(&g, expected, &u)));
        record(&format!("scale {label}"), run_prop(4, (1i64..6, 1i64..6), |(p, q)| nrd_scale_invariant(&g, p, q)));
    }
    record("modes", run_prop(16, (2usize..=3).prop_flat_map(pd_form), |g| modes_agree(&g)));
    record("cones", run_prop(64, (2usize..=5).prop_flat_map(|d| small_cone(d, 8)), |h| cone_properties(&h)));
    record("pointed cones", run_prop(64, (2usize..=5).prop_flat_map(|d| pointed_cone(d, 12 - d)), |h| cone_properties(&h)));
    for n in [5, 7] {
        record(&format!("facets n={n}"), facet_incidence(n));
    }
    if failures.is_empty() {
        outcome(true, format!("minvec, invariance on {} lattices, modes, cones, facet incidence", lattices.len()))
    } else {
        outcome(false, failures.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("nrd table", criterion_1),
        ("G_n extreme rays", criterion_2),
        ("D_n domain dimension and extreme forms", criterion_3),
        ("span cross-check", criterion_4),
        ("Voronoi vertices", criterion_5),
        ("gluing", criterion_6),
        ("property suites", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        failed += usize::from(!out.passed);
        println!("criterion {} ({name}): {} - {}", i + 1, if out.passed { "PASS" } else { "FAIL" }, out.detail);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
