//! Gram matrices of the root lattices and their duals.
//!
//! Basis conventions:
//!
//! * `A_n`, `D_n`, `E_6`, `E_7`, `E_8`: the simple roots, so the Gram matrix
//!   is the Cartan matrix. `D_n` joins node `n` to node `n-2` of the chain
//!   `1 - 2 - … - (n-1)`. `E_n` uses Bourbaki numbering (node 2 hangs off
//!   node 4, the chain is `1 - 3 - 4 - 5 - …`).
//! * `A_n*`, `E_6*`, `E_7*`: the dual basis, i.e. the exact inverse of the
//!   Cartan matrix. Entries are rational and never rescaled.
//! * `D_n*`: the basis `e_1, …, e_{n-1}, b` with `b = ½ Σ e_i` and
//!   `e_i² = 2`, which is [`gamma_form`](crate::dnstar::gamma_form) at
//!   `γ = (1, …, 1)`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{int, Rational};
use crate::dnstar::{gamma_form, GammaVector};
use crate::form::{GramMatrix, SymMatrix};
use crate::linalg;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    Astar,
    D,
    Dstar,
    E6,
    E6star,
    E7,
    E7star,
    E8,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::Astar,
        Family::D,
        Family::Dstar,
        Family::E6,
        Family::E6star,
        Family::E7,
        Family::E7star,
        Family::E8,
    ];

    /// The fixed dimension of the exceptional families.
    pub fn fixed_dim(self) -> Option<usize> {
        match self {
            Family::E6 | Family::E6star => Some(6),
            Family::E7 | Family::E7star => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::Astar => "Astar",
            Family::D => "D",
            Family::Dstar => "Dstar",
            Family::E6 => "E6",
            Family::E6star => "E6star",
            Family::E7 => "E7",
            Family::E7star => "E7star",
            Family::E8 => "E8",
        }
    }

    /// Display label such as `D5*` or `E8`.
    pub fn label(self, n: usize) -> alloc::string::String {
        use alloc::format;
        match self {
            Family::A => format!("A{n}"),
            Family::Astar => format!("A{n}*"),
            Family::D => format!("D{n}"),
            Family::Dstar => format!("D{n}*"),
            Family::E6 => "E6".into(),
            Family::E6star => "E6*".into(),
            Family::E7 => "E7".into(),
            Family::E7star => "E7*".into(),
            Family::E8 => "E8".into(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let normalized = s.trim().replace('*', "star");
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(&normalized))
            .ok_or(UnknownFamily)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownFamily;

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown lattice family (expected one of A, Astar, D, Dstar, E6, E6star, E7, E7star, E8)")
    }
}

fn cartan(n: usize, edges: &[(usize, usize)]) -> SymMatrix {
    SymMatrix::from_upper(n, |i, j| {
        if i == j {
            int(2)
        } else if edges.contains(&(i, j)) || edges.contains(&(j, i)) {
            int(-1)
        } else {
            int(0)
        }
    })
}

fn chain_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn d_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = chain_edges(n - 1);
    edges.push((n - 3, n - 1));
    edges
}

fn e_edges(n: usize) -> Vec<(usize, usize)> {
    [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
        .into_iter()
        .filter(|&(i, j)| i < n && j < n)
        .collect()
}

fn dual(m: &SymMatrix) -> SymMatrix {
    let inv = linalg::inverse(&m.rows()).expect("Cartan matrices are invertible");
    SymMatrix::from_rows(inv).expect("inverse of a symmetric matrix is symmetric")
}

/// Gram matrix of a root lattice or its dual in the documented basis.
pub fn root_lattice(family: Family, n: usize) -> Result<GramMatrix> {
    let invalid = Err(Error::InvalidLattice { family, n });
    if let Some(fixed) = family.fixed_dim() {
        if n != fixed {
            return invalid;
        }
    }
    let sym = match family {
        Family::A if n >= 1 => cartan(n, &chain_edges(n)),
        Family::Astar if n >= 1 => dual(&cartan(n, &chain_edges(n))),
        Family::D if n >= 3 => cartan(n, &d_edges(n)),
        Family::Dstar if n >= 3 => {
            let ones: Vec<Rational> = (0..n).map(|_| int(1)).collect();
            return gamma_form(&GammaVector::new(ones)?);
        }
        Family::E6 | Family::E7 | Family::E8 => cartan(n, &e_edges(n)),
        Family::E6star | Family::E7star => dual(&cartan(n, &e_edges(n))),
        _ => return invalid,
    };
    GramMatrix::new(sym)
}
