use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{dim_complex, dim_fixed_det, Calculator};
use crate::error::{Error, Result};
use crate::hn::CurveData;
use crate::series::{BiSeries, EvalPoint, UniSeries};

/// Polynomials of the fixed-determinant space `M(r, Λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedDeterminant {
    pub hodge_t1: UniSeries,
    pub poincare_real: UniSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    /// `P_t(RM) = H_{(t,1)}(M)`; torsion-freeness is known for these spaces.
    pub hodge_expressive: bool,
    /// Equality in the Smith–Thom inequality.
    pub maximal: bool,
    /// Euler characteristic of the real locus equals the signature.
    pub chi_eq_sigma: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Also run the bivariate recursion. When off, the signature is read from
    /// the `(t,1)` polynomial at `t = -1`.
    pub hodge_xy: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { hodge_xy: true }
    }
}

/// Everything computed for one cell `(g, n, r, d)` with `gcd(r, d) = 1`.
///
/// Polynomials are stored with cap equal to their degree bound: `2N` for
/// the complex Poincaré polynomial, `N` for the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliReport {
    pub g: u32,
    pub n: u32,
    pub r: u32,
    pub d: i64,
    pub dim_complex: usize,
    pub poincare_complex: UniSeries,
    pub hodge_t1: UniSeries,
    pub hodge_xy: Option<BiSeries>,
    pub poincare_real: UniSeries,
    pub fixed_det: FixedDeterminant,
    pub verdicts: Verdicts,
    pub b0_real: BigInt,
    pub total_betti_complex: BigInt,
    pub total_betti_real: BigInt,
    pub euler_real: BigInt,
    pub signature: BigInt,
}

fn require_coprime(r: u32, d: i64) -> Result<()> {
    if r == 0 {
        return Err(Error::inadmissible("r must satisfy r ≥ 1 (got r=0)"));
    }
    if d.gcd(&(r as i64)) != 1 {
        return Err(Error::inadmissible(format!(
            "moduli space is smooth projective only for gcd(r,d) = 1 (got r={r}, d={d})"
        )));
    }
    Ok(())
}

/// `2^k (1 + t)^g` as a polynomial.
fn picard_factor(k: u32, g: u32) -> UniSeries {
    UniSeries::pow_binom(1, g, g as usize).scale(&(BigInt::one() << k))
}

impl Calculator {
    /// `(hodge_t1, q_real)` at cap `N + 2`, asserted to be polynomials of
    /// degree at most `N`, returned with cap `N`.
    fn t1_and_real(&mut self, curve: CurveData, r: u32, d: i64) -> Result<(UniSeries, UniSeries)> {
        let g = curve.genus;
        let dim = dim_complex(g, r);
        let t1 = self.hodge_t1(g, r, d, dim + 2)?;
        t1.assert_polynomial(dim)?;
        let real = self.q_real(g, curve.real_components, r, d, dim + 2)?;
        real.assert_polynomial(dim)?;
        Ok((t1.truncate(dim)?, real.truncate(dim)?))
    }

    fn reduce(&self, curve: CurveData, r: u32, t1: &UniSeries, real: &UniSeries) -> Result<FixedDeterminant> {
        let g = curve.genus;
        let dim = dim_fixed_det(g, r);
        let hodge_t1 = t1.div_exact(&picard_factor(g, g))?.with_cap(dim);
        let poincare_real = real
            .div_exact(&picard_factor(curve.real_components - 1, g))?
            .with_cap(dim);
        hodge_t1.assert_polynomial(dim)?;
        poincare_real.assert_polynomial(dim)?;
        Ok(FixedDeterminant {
            hodge_t1,
            poincare_real,
        })
    }

    /// Divides out the Picard factors `2^g (1+t)^g` and `2^{n-1} (1+t)^g`;
    /// both divisions must be exact.
    pub fn fixed_det(&mut self, g: u32, n: u32, r: u32, d: i64) -> Result<FixedDeterminant> {
        let curve = CurveData::real(g, n)?;
        require_coprime(r, d)?;
        let (t1, real) = self.t1_and_real(curve, r, d)?;
        self.reduce(curve, r, &t1, &real)
    }

    pub fn report(&mut self, g: u32, n: u32, r: u32, d: i64, options: ReportOptions) -> Result<ModuliReport> {
        let curve = CurveData::real(g, n)?;
        require_coprime(r, d)?;
        let dim = dim_complex(g, r);

        let complex = self.q_complex(g, r, d, 2 * dim + 2)?;
        complex.assert_polynomial(2 * dim)?;
        let poincare_complex = complex.truncate(2 * dim)?;

        let (hodge_t1, poincare_real) = self.t1_and_real(curve, r, d)?;
        let fixed_det = self.reduce(curve, r, &hodge_t1, &poincare_real)?;

        let hodge_xy = if options.hodge_xy {
            let xy = self.hodge_biseries(g, r, d, 2 * dim + 2)?;
            xy.assert_polynomial(2 * dim)?;
            Some(xy.truncate(2 * dim)?)
        } else {
            None
        };
        let signature = match &hodge_xy {
            Some(xy) => xy.eval_at(EvalPoint::MinusOne, EvalPoint::One),
            None => hodge_t1.eval_at(EvalPoint::MinusOne),
        };

        let total_betti_complex = poincare_complex.eval_at(EvalPoint::One);
        let total_betti_real = poincare_real.eval_at(EvalPoint::One);
        let euler_real = poincare_real.eval_at(EvalPoint::MinusOne);
        let verdicts = Verdicts {
            hodge_expressive: poincare_real == hodge_t1,
            maximal: total_betti_real == total_betti_complex,
            chi_eq_sigma: euler_real == signature,
        };

        Ok(ModuliReport {
            g,
            n,
            r,
            d,
            dim_complex: dim,
            b0_real: poincare_real.coeff(0),
            poincare_complex,
            hodge_t1,
            hodge_xy,
            poincare_real,
            fixed_det,
            verdicts,
            total_betti_complex,
            total_betti_real,
            euler_real,
            signature,
        })
    }
}
