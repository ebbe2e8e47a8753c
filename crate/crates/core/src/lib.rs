//! Exact computation of lattice non-rigidity degrees.
//!
//! The non-rigidity degree of a positive definite quadratic form is the
//! dimension of the L-type domain that contains it. It equals the corank of
//! the linear system obtained by equating the norms of the minimal vectors
//! inside each nonzero coset of `2L` in `L`.
//!
//! Everything in this crate is exact: rationals are arbitrary precision and
//! no floating point value ever enters a result. The crate is `no_std` and
//! only needs `alloc`.
//!
//! * [`form`]: symmetric matrices, Gram matrices and the coefficient space.
//! * [`roots`]: Gram matrices of the root lattices and their duals.
//! * [`minvec`]: minimal vectors of the cosets of `2L` in `L`.
//! * [`nrd`]: the norm-equality system, its corank and its solution space.
//! * [`delaunay`]: Delaunay polytopes around the origin and their affine
//!   relations.
//! * [`cone`]: exact polyhedral cones (double description).
//! * [`dnstar`]: the `L(γ)` family, the cones `G_n` and `D_n`, Voronoi
//!   vertices and their degenerations.
//! * [`oracle`]: brute-force cross-checks used by tests and the CLI.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod cone;
pub mod delaunay;
pub mod dnstar;
mod enumerate;
mod error;
pub mod form;
pub mod linalg;
pub mod minvec;
pub mod nrd;
pub mod oracle;
pub mod roots;

pub use arith::Rational;
pub use cone::{cone_dim, extreme_rays, incidence, ConeHRep, Ray};
pub use dnstar::{
    dn_ldomain_hrep, embed_gamma, gamma_form, glue_vertices, gn_extreme_rays_closed_form,
    gn_hrep, voronoi_vertices, GammaVector, GlueReport, VoronoiVertex,
};
pub use error::{Error, Result};
pub use form::{qform_eval, sym_coords, sym_uncoords, GramMatrix, LatticeVector, SymMatrix, SymVector};
pub use minvec::{coset_labels, coset_min_vectors, CosetLabel, CosetMinSet};
pub use nrd::{ldomain_span, norm_constraint, nrd, ConstraintMode, ConstraintRow, NrdResult};
pub use roots::{root_lattice, Family};
