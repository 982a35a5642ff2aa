//! Lowest eigenvalues of attractive Robin Laplacians (`∂_ν u + β u = 0` with
//! `β < 0`) on geodesic disks of constant curvature, on general planar
//! domains, and on unbounded three-dimensional cones, together with the
//! machinery needed to certify the corresponding perimeter-constrained
//! isoperimetric bounds numerically:
//!
//! * [`geometry`] — closed-form geodesic disks and the geometric
//!   isoperimetric deficit.
//! * [`domain`] — boundary-polyline domains (planar and spherical),
//!   distance-to-boundary and the empirical level-set profiles `A(t)`, `L(t)`.
//! * [`radial`] — shooting solver for the lowest Robin eigenpair of a
//!   geodesic disk, per angular fiber, plus a modified-Bessel oracle for the
//!   Euclidean disk and an independent finite-difference reference solver.
//! * [`fem2d`] — P1 finite elements on star-shaped planar domains with a
//!   banded shift-and-invert eigensolver and Richardson extrapolation.
//! * [`transplant`] — Rayleigh quotients of transplanted radial profiles
//!   evaluated through the level-set profiles; upper-bound certificates.
//! * [`cone`] — circular-cone ground state, essential-spectrum threshold and
//!   the transplanted upper bound for arbitrary spherical cross-sections.
//! * [`spectral`] — the eigenvalue curve `β ↦ λ_β`, Dirichlet-to-Neumann
//!   inversion, the weak-coupling slope and the beyond-hemisphere cap
//!   comparison.
//! * [`corpus`] — bundled families of benchmark domains.
//!
//! Heavy loops (rasterization, assembly, corpus sweeps) are data-parallel via
//! rayon when the `parallel` feature is enabled (default); every such entry
//! point also takes an explicit [`exec::Parallelism`] so the sequential path
//! stays reachable for benchmarking.

pub mod bessel;
pub mod cone;
pub mod corpus;
pub mod domain;
pub mod error;
pub mod exec;
pub mod fem2d;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod quad;
pub mod radial;
pub mod spectral;
pub mod spline;
pub mod testfns;
pub mod transplant;

pub use error::{Error, Result};
pub use exec::Parallelism;
