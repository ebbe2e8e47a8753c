//! Exact enumeration of lattice points in an ellipsoid.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{floor_sqrt, Rational};
use crate::linalg::Ldl;

/// Walks the integer points `x` with `(x − c)ᵀ g (x − c) <= bound`, last
/// coordinate first, using the decomposition `ldl` of `g`.
///
/// With `parity` set only points congruent to it mod 2 are visited. With
/// `shrink` the bound drops to every smaller value met, so `found` ends up
/// holding exactly the minimal points; otherwise `found` holds the points
/// whose value equals the bound.
pub(crate) struct Ellipsoid<'a> {
    pub ldl: &'a Ldl,
    pub center: Option<&'a [Rational]>,
    pub parity: Option<&'a [u8]>,
    pub bound: Rational,
    pub shrink: bool,
    pub found: Vec<Vec<i64>>,
    x: Vec<i64>,
}

impl<'a> Ellipsoid<'a> {
    pub fn new(ldl: &'a Ldl, bound: Rational) -> Self {
        let n = ldl.diag.len();
        Self { ldl, center: None, parity: None, bound, shrink: false, found: Vec::new(), x: alloc::vec![0; n] }
    }

    pub fn run(mut self) -> (Rational, Vec<Vec<i64>>) {
        let n = self.x.len();
        if n > 0 {
            self.visit(n - 1, Rational::zero());
        }
        (self.bound, self.found)
    }

    fn offset(&self, j: usize) -> Rational {
        let xj = Rational::from_integer(BigInt::from(self.x[j]));
        match self.center {
            Some(c) => xj - &c[j],
            None => xj,
        }
    }

    fn visit(&mut self, i: usize, partial: Rational) {
        let n = self.x.len();
        let d = &self.ldl.diag[i];
        // y_i + shift is the i-th term, y = x − c
        let mut shift = Rational::zero();
        for j in i + 1..n {
            let mu = &self.ldl.mu[i][j];
            if !mu.is_zero() {
                shift += mu * self.offset(j);
            }
        }
        if let Some(c) = self.center {
            shift -= &c[i];
        }
        let slack = &self.bound - &partial;
        if slack.is_negative() {
            return;
        }
        let reach = floor_sqrt(&(slack / d)) + 1;
        let target = -&shift;
        let lo = to_i64(&(target.floor().to_integer() - &reach));
        let hi = to_i64(&(target.ceil().to_integer() + &reach));
        let mut xi = lo;
        if let Some(p) = self.parity {
            if xi.rem_euclid(2) != p[i] as i64 {
                xi += 1;
            }
        }
        let step = if self.parity.is_some() { 2 } else { 1 };
        while xi <= hi {
            let y = Rational::from_integer(BigInt::from(xi)) + &shift;
            let total = &partial + d * &y * &y;
            if total <= self.bound {
                self.x[i] = xi;
                if i == 0 {
                    self.record(total);
                } else {
                    self.visit(i - 1, total);
                }
            }
            xi += step;
        }
        self.x[i] = 0;
    }

    fn record(&mut self, value: Rational) {
        if value < self.bound {
            if !self.shrink {
                return;
            }
            self.bound = value;
            self.found.clear();
        }
        self.found.push(self.x.clone());
    }
}

fn to_i64(v: &BigInt) -> i64 {
    i64::try_from(v).expect("enumeration range exceeds i64")
}
