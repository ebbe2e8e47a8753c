//! Property checks and generators shared by the property and acceptance
//! targets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use latnrd_core::arith::{int, rat};
use latnrd_core::cone::{cone_dim, extreme_rays, ConeHRep, Ray};
use latnrd_core::linalg;
use latnrd_core::minvec::{coset_labels, coset_min_vectors};
use latnrd_core::nrd::{nrd, nrd_with, ConstraintMode};
use latnrd_core::oracle::{box_min_vectors, brute_force_rays};
use latnrd_core::{Error, GramMatrix, Rational, SymMatrix};
use num_traits::ToPrimitive;
use proptest::prelude::*;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// `BᵀB + I` for an integer matrix `B` with small entries.
pub fn pd_form(n: usize) -> impl Strategy<Value = GramMatrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |b| {
        let sym = SymMatrix::from_upper(n, |i, j| {
            let dot: i64 = (0..n).map(|k| b[k * n + i] * b[k * n + j]).sum();
            int(dot + i64::from(i == j))
        });
        GramMatrix::new(sym).expect("BᵀB + I is positive definite")
    })
}

/// Product of elementary column operations and sign flips.
pub fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let ops = prop::collection::vec((0..n, 0..n, prop::bool::ANY), 0..=2 * n);
    let flips = prop::collection::vec(prop::bool::ANY, n);
    (ops, flips).prop_map(move |(ops, flips)| {
        let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, plus) in ops.into_iter().filter(|(i, j, _)| i != j) {
            let c = if plus { 1 } else { -1 };
            for row in u.iter_mut() {
                row[j] += c * row[i];
            }
        }
        for (j, flip) in flips.into_iter().enumerate() {
            if flip {
                u.iter_mut().for_each(|row| row[j] = -row[j]);
            }
        }
        u
    })
}

/// Small random H-representation in dimension `d`.
pub fn small_cone(d: usize, max_rows: usize) -> impl Strategy<Value = ConeHRep> {
    let row = move || prop::collection::vec(-2i64..=2, d);
    (prop::collection::vec(row(), 0..=1), prop::collection::vec(row(), 1..=max_rows)).prop_map(move |(eq, ineq)| {
        let conv = |rs: Vec<Vec<i64>>| rs.into_iter().map(|r| r.into_iter().map(int).collect()).collect();
        ConeHRep::new(d, conv(eq), conv(ineq)).expect("rows have length d")
    })
}

/// Nonnegative orthant cut by random extra rows; always pointed.
pub fn pointed_cone(d: usize, extra: usize) -> impl Strategy<Value = ConeHRep> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, d), 0..=extra).prop_map(move |rows| {
        let mut ineq: Vec<Vec<Rational>> =
            (0..d).map(|i| (0..d).map(|j| int(-i64::from(i == j))).collect()).collect();
        ineq.extend(rows.into_iter().map(|r| r.into_iter().map(int).collect()));
        ConeHRep::new(d, vec![], ineq).expect("rows have length d")
    })
}

/// Ellipsoid bound `x_i² <= Q(x) · (G⁻¹)_ii` turned into a box radius.
fn box_radius(g: &GramMatrix, norm: &Rational) -> i64 {
    let inv = linalg::inverse(&g.as_sym().rows()).expect("PD forms are invertible");
    (0..g.dim())
        .map(|i| (norm * &inv[i][i]).to_f64().expect("finite").sqrt().ceil() as i64 + 1)
        .max()
        .unwrap_or(1)
}

pub fn minvec_matches_box(g: &GramMatrix) -> Check {
    for label in coset_labels(g.dim()) {
        let set = coset_min_vectors(g, &label).map_err(|e| e.to_string())?;
        let rep = label.representative();
        let rep_norm = g.as_sym().eval(rep.coords()).expect("dimension matches");
        let (norm, vectors) = box_min_vectors(g, &label, box_radius(g, &rep_norm));
        ensure!(set.min_norm == norm, "label {:?}: min norm {} vs box {}", label.bits(), set.min_norm, norm);
        ensure!(set.vectors == vectors, "label {:?}: {:?} vs box {:?}", label.bits(), set.vectors, vectors);
    }
    Ok(())
}

pub fn nrd_scale_invariant(g: &GramMatrix, p: i64, q: i64) -> Check {
    let base = nrd(g).map_err(|e| e.to_string())?;
    let scaled = g.scaled(&rat(p, q)).map_err(|e| e.to_string())?;
    let scaled = nrd(&scaled).map_err(|e| e.to_string())?;
    ensure!(base.nrd == scaled.nrd, "nrd {} vs {} after scaling by {p}/{q}", base.nrd, scaled.nrd);
    ensure!(base.span_basis == scaled.span_basis, "span changed after scaling by {p}/{q}");
    Ok(())
}

pub fn nrd_unimodular_invariant(g: &GramMatrix, expected: usize, u: &[Vec<i64>]) -> Check {
    let h = g.conjugate(u).map_err(|e| e.to_string())?;
    let got = nrd(&h).map_err(|e| e.to_string())?.nrd;
    ensure!(got == expected, "nrd {got} after conjugation by {u:?}, expected {expected}");
    Ok(())
}

pub fn modes_agree(g: &GramMatrix) -> Check {
    let star = nrd_with(g, ConstraintMode::Star).map_err(|e| e.to_string())?;
    let all = nrd_with(g, ConstraintMode::AllPairs).map_err(|e| e.to_string())?;
    ensure!(star.nrd == all.nrd && star.span_basis == all.span_basis, "star {} vs all pairs {}", star.nrd, all.nrd);
    Ok(())
}

/// Soundness, extremality, completeness against brute force, and order
/// independence under reversal of the rows.
pub fn cone_properties(h: &ConeHRep) -> Check {
    let rays = match extreme_rays(h) {
        Ok(rays) => rays,
        Err(Error::NotPointed { witness }) => {
            let line: Vec<Rational> = witness.iter().cloned().map(Rational::from_integer).collect();
            let neg: Vec<Rational> = line.iter().map(|x| -x).collect();
            ensure!(line.iter().any(|x| *x != int(0)), "zero witness");
            ensure!(h.contains(&line) && h.contains(&neg), "witness {witness:?} is not a line of the cone");
            return Ok(());
        }
        Err(e) => return Err(e.to_string()),
    };
    let d = h.dim();
    let mut sorted = rays.clone();
    sorted.sort();
    sorted.dedup();
    ensure!(sorted == rays, "rays not sorted and distinct");
    for r in &rays {
        let x = r.to_rationals();
        ensure!(h.contains(&x), "ray {:?} outside the cone", r.dir());
        ensure!(h.tight_rank(&x) == d - 1, "ray {:?} has tight rank {}", r.dir(), h.tight_rank(&x));
    }
    let dirs: Vec<Vec<Rational>> = rays.iter().map(Ray::to_rationals).collect();
    ensure!(linalg::rank(&dirs, d) == cone_dim(h), "rays span {} but cone_dim is {}", linalg::rank(&dirs, d), cone_dim(h));
    ensure!(brute_force_rays(h) == rays, "brute force disagrees");
    let eq: Vec<usize> = (0..h.equalities().len()).rev().collect();
    let ineq: Vec<usize> = (0..h.inequalities().len()).rev().collect();
    let again = extreme_rays(&h.permuted(&eq, &ineq)).map_err(|e| e.to_string())?;
    ensure!(again == rays, "row order changed the rays");
    Ok(())
}

pub fn as_set<T: Ord + Clone>(items: &[T]) -> BTreeSet<T> {
    items.iter().cloned().collect()
}
