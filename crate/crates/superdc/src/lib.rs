//! Superfast divide-and-conquer eigendecomposition for symmetric matrices in
//! hierarchically semiseparable (HSS) form.
//!
//! The solver splits an HSS matrix into block-diagonal pieces plus balanced
//! low-rank updates (dividing stage), then merges the pieces bottom-up through
//! sequences of diagonal-plus-rank-one eigenproblems (conquering stage). The
//! secular equations arising in each merge are solved with a triangular 1D
//! fast multipole method and per-root local shifting, which keeps the whole
//! pipeline stable for clustered spectra while retaining near-linear cost.
//! Eigenvalues come back dense; the eigenmatrix comes back in a structured
//! form that applies to vectors in `O(r n log n)` time.
//!
//! Main entry points:
//! - [`hss`]: build/reconstruct HSS matrices ([`hss::HssMatrix`]),
//! - [`divide::divide_stage`] and [`conquer::conquer_stage`]: the two solver
//!   stages,
//! - [`harness`]: end-to-end runs with accuracy/timing reports,
//! - [`fmm`], [`secular`], [`dense_oracle`]: the underlying machinery.

pub mod conquer;
pub mod dense_oracle;
pub mod divide;
pub mod error;
pub mod flops;
pub mod fmm;
pub mod harness;
pub mod hss;
pub mod io;
pub mod linalg;
pub mod secular;
pub mod tree;

pub use error::{Error, Result};
