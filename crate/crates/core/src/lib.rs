//! Analysis and synthesis of delayed feedback controls (DFC) for discrete
//! dynamical systems.
//!
//! The crate decides Schur stability of complex polynomials, maps out the
//! admissible multiplier regions attached to a linear multi-delay control
//! (unit-disc image and its inversion, connected components, diameters),
//! synthesizes control gains (one-delay interval rule and Fejér-kernel
//! weights for the non-linear scheme), and simulates open- and closed-loop
//! orbits of a set of benchmark maps.

pub mod error;
pub mod geometry;
pub mod poly;

pub use error::CoreError;
pub use geometry::Window;
pub use poly::{ComplexPolynomial, StabilityVerdict};

/// Roots are accepted as "on or inside" the unit circle up to this slack;
/// a polynomial is reported stable only when every root modulus is below
/// `1.0 - BOUNDARY_TOL`.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Relative magnitude below which trailing coefficients are trimmed.
pub const DEGREE_TRIM_TOL: f64 = 1e-12;

/// Normalized root residual guaranteed by the companion-matrix solver.
pub const RESIDUAL_TOL: f64 = 1e-8;

pub type Complex = num_complex::Complex64;
