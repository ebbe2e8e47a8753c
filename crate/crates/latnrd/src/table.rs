//! Reference nrd values of root lattices and their duals.

use latnrd_core::nrd::ConstraintMode;
use latnrd_core::{root_lattice, Family};
use serde::Serialize;

use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub family: Family,
    pub n: usize,
    pub expected: usize,
}

impl TableEntry {
    pub fn label(&self) -> String {
        self.family.label(self.n)
    }
}

/// Rows in display order.
pub fn entries() -> Vec<TableEntry> {
    use Family::*;
    let mut rows = vec![TableEntry { family: A, n: 1, expected: 1 }];
    rows.extend((2..=5).map(|n| TableEntry { family: A, n, expected: n + 1 }));
    rows.extend((1..=5).map(|n| TableEntry { family: Astar, n, expected: n * (n + 1) / 2 }));
    rows.extend((4..=7).map(|n| TableEntry { family: D, n, expected: 1 }));
    rows.push(TableEntry { family: Dstar, n: 5, expected: 5 });
    rows.push(TableEntry { family: Dstar, n: 7, expected: 7 });
    rows.push(TableEntry { family: Dstar, n: 4, expected: 1 });
    rows.push(TableEntry { family: Dstar, n: 6, expected: 1 });
    for (family, n) in [(E6, 6), (E6star, 6), (E7, 7), (E7star, 7), (E8, 8)] {
        rows.push(TableEntry { family, n, expected: 1 });
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub lattice: String,
    pub n: usize,
    pub expected: usize,
    /// `None` when the computation itself failed.
    pub computed: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TableRow {
    pub fn passed(&self) -> bool {
        self.computed == Some(self.expected)
    }
}

pub fn run(mode: ConstraintMode) -> Vec<TableRow> {
    parallel::map(&entries(), |e| {
        let result = root_lattice(e.family, e.n).map_err(crate::Error::from).and_then(|g| parallel::nrd(&g, mode));
        let (computed, error) = match result {
            Ok(r) => (Some(r.nrd), None),
            Err(err) => (None, Some(err.to_string())),
        };
        TableRow { lattice: e.label(), n: e.n, expected: e.expected, computed, error }
    })
}
