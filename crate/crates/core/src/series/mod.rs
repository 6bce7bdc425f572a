//! Truncated formal power series over arbitrary-precision integers.
//!
//! [`UniSeries`] stores the coefficients of degrees `0..=cap`; [`BiSeries`]
//! stores a triangular array `c[i][j]` for `i + j <= cap`. Every arithmetic
//! result is truncated at the requested cap and never reports coefficients
//! above it. Both representations are dense.

mod bi;
mod kernel;
mod uni;

use std::fmt::Debug;

pub use bi::BiSeries;
pub use uni::UniSeries;

use crate::error::Result;

/// Point at which a polynomial is evaluated: `t = 1` or `t = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalPoint {
    One,
    MinusOne,
}

/// How a bivariate series collapses to one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `x = t, y = 1`
    T1,
    /// `x = y = t`
    TT,
}

/// Operations the stratification engine needs from a series type.
///
/// An exponent names a monomial: `t^k` for [`UniSeries`], `x^a y^b` for
/// [`BiSeries`].
pub trait TruncatedSeries: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Exponent: Copy + Debug + Send + Sync;

    fn one(cap: usize) -> Self;

    fn cap(&self) -> usize;

    /// Total degree of the monomial.
    fn exponent_degree(e: Self::Exponent) -> usize;

    /// Exponent of the `k`-th power of the monomial.
    fn scale_exponent(e: Self::Exponent, k: usize) -> Self::Exponent;

    fn mul(&self, rhs: &Self, cap: usize) -> Result<Self>;

    fn truncate(&self, cap: usize) -> Result<Self>;

    /// `self * (1 - monomial)^m` truncated at `cap`.
    fn geom_factor(&self, e: Self::Exponent, m: i64, cap: usize) -> Result<Self>;

    /// `self -= monomial * rhs`, truncated at `self.cap()`.
    fn sub_shifted(&mut self, rhs: &Self, e: Self::Exponent);
}
