//! Closed-form Hodge and real Betti data for varieties built from simple
//! pieces, each carrying a Hodge-expressivity verdict.
//!
//! Hodge data is kept only in the specialised form `H_{(t,1)}`; every rule
//! here (products, projective bundles, blow-ups) commutes with that
//! specialisation. Torsion-freeness of integral cohomology is a declared
//! attribute propagated by those rules, never computed.

pub mod catalog;
pub mod registry;

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{EvalPoint, UniSeries};

pub use catalog::{
    curve, grassmannian, harnack_double_cover, moduli_fixed_det, moduli_space, pic, point, projective_space,
    surface_gallery, sym_power_curve, GallerySurface,
};
pub use registry::{Construction, ConstructionParams, ConstructionRegistry};

#[derive(Clone, PartialEq, Eq)]
pub struct VarietyData {
    pub label: String,
    /// Complex dimension.
    pub dim: usize,
    /// `H_{(t,1)}(X)`, cap `dim`.
    pub hodge_t1: UniSeries,
    /// `P_t(RX)`, cap `dim`.
    pub poincare_real: UniSeries,
    pub torsion_free: bool,
}

impl VarietyData {
    /// Both polynomials are re-capped at `dim`; they must vanish above it.
    pub fn new(
        label: impl Into<String>,
        dim: usize,
        hodge_t1: UniSeries,
        poincare_real: UniSeries,
        torsion_free: bool,
    ) -> Result<Self> {
        hodge_t1.assert_polynomial(dim)?;
        poincare_real.assert_polynomial(dim)?;
        Ok(VarietyData {
            label: label.into(),
            dim,
            hodge_t1: hodge_t1.with_cap(dim),
            poincare_real: poincare_real.with_cap(dim),
            torsion_free,
        })
    }

    /// Torsion-free and `P_t(RX) = H_{(t,1)}(X)`.
    pub fn is_hodge_expressive(&self) -> bool {
        self.torsion_free && self.hodge_t1 == self.poincare_real
    }

    /// Sum of the Hodge numbers, which is the total Betti number of `X`.
    pub fn total_betti_complex(&self) -> BigInt {
        self.hodge_t1.eval_at(EvalPoint::One)
    }

    pub fn total_betti_real(&self) -> BigInt {
        self.poincare_real.eval_at(EvalPoint::One)
    }

    /// Equality in the Smith–Thom inequality. Only decidable from this data
    /// when the integral cohomology is torsion-free; `false` otherwise.
    pub fn is_maximal(&self) -> bool {
        self.torsion_free && self.total_betti_real() == self.total_betti_complex()
    }

    /// `chi(RX) = P_{-1}(RX)` against `sigma(X) = H_{(-1,1)}(X)`.
    pub fn chi_eq_sigma(&self) -> bool {
        self.poincare_real.eval_at(EvalPoint::MinusOne) == self.hodge_t1.eval_at(EvalPoint::MinusOne)
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl fmt::Debug for VarietyData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VarietyData")
            .field("label", &self.label)
            .field("dim", &self.dim)
            .field("hodge_t1", &self.hodge_t1.trimmed())
            .field("poincare_real", &self.poincare_real.trimmed())
            .field("torsion_free", &self.torsion_free)
            .finish()
    }
}

/// `t^start + ... + t^(end-1)`, cap `cap`.
pub(crate) fn geometric_sum(start: usize, end: usize, cap: usize) -> UniSeries {
    UniSeries::from_coeffs((0..=cap).map(|i| u8::from(i >= start && i < end)), cap)
}

fn lift(p: &UniSeries, cap: usize) -> UniSeries {
    p.with_cap(cap)
}

/// `X × Y` with the product real structure.
pub fn combine_product(a: &VarietyData, b: &VarietyData) -> VarietyData {
    let dim = a.dim + b.dim;
    let mul = |x: &UniSeries, y: &UniSeries| {
        lift(x, dim)
            .mul(&lift(y, dim), dim)
            .expect("both factors lifted to the product dimension")
    };
    VarietyData {
        label: format!("{} × {}", a.label, b.label),
        dim,
        hodge_t1: mul(&a.hodge_t1, &b.hodge_t1),
        poincare_real: mul(&a.poincare_real, &b.poincare_real),
        torsion_free: a.torsion_free && b.torsion_free,
    }
}

/// Projectivisation of a real rank `rank` bundle over `base`.
pub fn proj_bundle(base: &VarietyData, rank: u32) -> Result<VarietyData> {
    if rank < 1 {
        return Err(Error::inadmissible("bundle rank must satisfy r ≥ 1 (got r=0)"));
    }
    let fibre = rank as usize - 1;
    let dim = base.dim + fibre;
    let factor = geometric_sum(0, rank as usize, dim);
    let mul = |p: &UniSeries| {
        lift(p, dim)
            .mul(&factor, dim)
            .expect("factor and base lifted to the total dimension")
    };
    Ok(VarietyData {
        label: format!("P^{fibre}-bundle over {}", base.label),
        dim,
        hodge_t1: mul(&base.hodge_t1),
        poincare_real: mul(&base.poincare_real),
        torsion_free: base.torsion_free,
    })
}

/// Blow-up of `x` along a smooth real subvariety `y` of codimension `codim`.
pub fn blowup(x: &VarietyData, y: &VarietyData, codim: u32) -> Result<VarietyData> {
    if codim < 2 {
        return Err(Error::inadmissible(format!(
            "blow-up centre must have codimension r ≥ 2 (got r={codim})"
        )));
    }
    if y.dim + codim as usize != x.dim {
        return Err(Error::inadmissible(format!(
            "blow-up needs dim Y + r = dim X (got {} + {codim} ≠ {})",
            y.dim, x.dim
        )));
    }
    let dim = x.dim;
    let exceptional = geometric_sum(1, codim as usize, dim);
    let add = |px: &UniSeries, py: &UniSeries| {
        let extra = lift(py, dim).mul(&exceptional, dim).expect("lifted to dim X");
        &lift(px, dim) + &extra
    };
    Ok(VarietyData {
        label: format!("Bl_{{{}}} {}", y.label, x.label),
        dim,
        hodge_t1: add(&x.hodge_t1, &y.hodge_t1),
        poincare_real: add(&x.poincare_real, &y.poincare_real),
        torsion_free: x.torsion_free && y.torsion_free,
    })
}
