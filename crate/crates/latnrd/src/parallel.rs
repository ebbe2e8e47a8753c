//! Per-coset fan-out. `LATNRD_THREADS` caps the worker count.

use std::sync::OnceLock;

use latnrd_core::linalg;
use latnrd_core::minvec::{coset_labels, coset_min_vectors_with, CosetMinSet};
use latnrd_core::nrd::{nrd_from_sets, ConstraintMode, NrdResult};
use latnrd_core::{Error as CoreError, GramMatrix};
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::Result;

/// Value of `LATNRD_THREADS` if it is a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("LATNRD_THREADS").ok()?.trim().parse().ok().filter(|&t| t > 0)
}

/// Shared pool sized by [`thread_cap`], or by rayon's default.
pub fn pool() -> &'static ThreadPool {
    static POOL: OnceLock<ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = ThreadPoolBuilder::new();
        if let Some(t) = thread_cap() {
            builder = builder.num_threads(t);
        }
        builder.build().expect("thread pool")
    })
}

/// Same output as the sequential version; labels keep their order.
pub fn coset_min_sets(g: &GramMatrix) -> Result<Vec<CosetMinSet>> {
    let ldl = linalg::ldl(&g.as_sym().rows()).ok_or(CoreError::NotPositiveDefinite { index: 0 })?;
    let labels = coset_labels(g.dim());
    let sets = pool().install(|| {
        labels.par_iter().map(|label| coset_min_vectors_with(g, &ldl, label)).collect::<Result<Vec<_>, _>>()
    })?;
    Ok(sets)
}

pub fn nrd(g: &GramMatrix, mode: ConstraintMode) -> Result<NrdResult> {
    let sets = coset_min_sets(g)?;
    Ok(nrd_from_sets(g, &sets, mode)?)
}

/// Maps `f` over `items` on the shared pool, keeping order.
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    pool().install(|| items.par_iter().map(f).collect())
}
