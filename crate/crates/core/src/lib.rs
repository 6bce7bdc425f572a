//! Exact Poincaré and Hodge polynomials of moduli spaces of vector bundles
//! on real algebraic curves.
//!
//! The crate is split into four layers:
//!
//! - [`series`]: truncated power series in one and two variables with
//!   arbitrary-precision integer coefficients.
//! - [`hn`]: Harder–Narasimhan types, their codimensions and a pruned
//!   enumerator for the types of bounded codimension.
//! - [`moduli`]: the stratification recursions (complex Poincaré, Hodge,
//!   specialised Hodge and real Poincaré), fixed-determinant reductions and
//!   per-cell reports with maximality / Hodge-expressivity verdicts.
//! - [`constructions`]: closed-form data for curves, Picard varieties,
//!   Grassmannians, products, projective bundles, blow-ups, symmetric powers
//!   and a small surface gallery.

pub mod constructions;
pub mod error;
pub mod hn;
pub mod moduli;
pub mod series;

pub use error::{Error, Result};
