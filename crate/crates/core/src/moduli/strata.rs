//! The four stratifications of the moduli stack of bundles.
//!
//! Each one supplies a head term `(1 - w) P(Bun(r, d))` and a stratum weight
//! `w`. The engine in [`super::engine`] turns them into the recursion
//!
//! ```text
//! Q(r, d) = head(r) - sum_{mu != mu_ss} w^{d_mu} / (1 - w)^{l_mu - 1} prod_i Q(r_i, d_i)
//! ```
//!
//! | name        | series  | weight | genus-one answer |
//! |-------------|---------|--------|------------------|
//! | `poincare`  | `t`     | `t^2`  | `1 + 2t + t^2`   |
//! | `hodge-t1`  | `t`     | `t`    | `2 + 2t`         |
//! | `real`      | `t`     | `t`    | `n (1 + t)`      |
//! | `hodge-xy`  | `x, y`  | `xy`   | `1 + x + y + xy` |

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::hn::CurveData;
use crate::series::{BiSeries, TruncatedSeries, UniSeries};

/// One member of the family of stratification recursions.
pub trait Stratification: Send + Sync {
    type Series: TruncatedSeries;

    fn name(&self) -> &'static str;

    fn genus(&self) -> u32;

    /// `(1 - w)` times the series of the stack of all bundles of rank `rank`.
    /// At rank one this is the series of the Picard variety.
    fn head(&self, rank: u32, cap: usize) -> Result<Self::Series>;

    /// The weight monomial `w`; a stratum of codimension `c` contributes
    /// with factor `w^c`.
    fn weight(&self) -> <Self::Series as TruncatedSeries>::Exponent;

    /// The polynomial for genus one and coprime rank and degree, where the
    /// moduli space is the curve itself.
    fn genus_one(&self, cap: usize) -> Self::Series;
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// Multiplies `acc` by `(1 + t^k)^e` and by `(1 - t^k)^{-1}` factors.
struct UniProduct {
    acc: UniSeries,
    cap: usize,
}

impl UniProduct {
    fn new(start: UniSeries) -> Self {
        let cap = start.cap();
        UniProduct { acc: start, cap }
    }

    fn times_binom(mut self, k: usize, e: u32) -> Result<Self> {
        if e > 0 {
            self.acc = self.acc.mul(&UniSeries::pow_binom(k, e, self.cap), self.cap)?;
        }
        Ok(self)
    }

    fn over_one_minus(mut self, k: usize) -> Result<Self> {
        self.acc = self.acc.geom_factor(k, -1, self.cap)?;
        Ok(self)
    }
}

/// Complex Poincaré series, weight `t^2`.
#[derive(Debug, Clone, Copy)]
pub struct ComplexPoincare {
    pub genus: u32,
}

impl Stratification for ComplexPoincare {
    type Series = UniSeries;

    fn name(&self) -> &'static str {
        "poincare"
    }

    fn genus(&self) -> u32 {
        self.genus
    }

    fn head(&self, rank: u32, cap: usize) -> Result<UniSeries> {
        let g2 = 2 * self.genus;
        let mut p = UniProduct::new(UniSeries::pow_binom(1, g2, cap));
        for i in 2..=rank as usize {
            p = p
                .times_binom(2 * i - 1, g2)?
                .over_one_minus(2 * i - 2)?
                .over_one_minus(2 * i)?;
        }
        Ok(p.acc)
    }

    fn weight(&self) -> usize {
        2
    }

    fn genus_one(&self, cap: usize) -> UniSeries {
        UniSeries::pow_binom(1, 2, cap)
    }
}

/// Hodge series specialised at `x = t, y = 1`, weight `t`.
#[derive(Debug, Clone, Copy)]
pub struct HodgeT1 {
    pub genus: u32,
}

impl Stratification for HodgeT1 {
    type Series = UniSeries;

    fn name(&self) -> &'static str {
        "hodge-t1"
    }

    fn genus(&self) -> u32 {
        self.genus
    }

    fn head(&self, rank: u32, cap: usize) -> Result<UniSeries> {
        let g = self.genus;
        let start = UniSeries::pow_binom(1, g, cap).scale(&pow2(g));
        let mut p = UniProduct::new(start);
        for i in 2..=rank as usize {
            p = p
                .times_binom(i - 1, g)?
                .times_binom(i, g)?
                .over_one_minus(i - 1)?
                .over_one_minus(i)?;
        }
        Ok(p.acc)
    }

    fn weight(&self) -> usize {
        1
    }

    fn genus_one(&self, cap: usize) -> UniSeries {
        UniSeries::pow_binom(1, 1, cap).scale(&BigInt::from(2))
    }
}

/// Mod 2 Poincaré series of the real locus, weight `t`.
#[derive(Debug, Clone, Copy)]
pub struct RealPoincare {
    pub curve: CurveData,
}

impl Stratification for RealPoincare {
    type Series = UniSeries;

    fn name(&self) -> &'static str {
        "real"
    }

    fn genus(&self) -> u32 {
        self.curve.genus
    }

    fn head(&self, rank: u32, cap: usize) -> Result<UniSeries> {
        let g = self.curve.genus;
        let n = self.curve.real_components;
        let start = UniSeries::pow_binom(1, g, cap).scale(&pow2(n - 1));
        let mut p = UniProduct::new(start);
        for i in 2..=rank as usize {
            p = p
                .times_binom(2 * i - 1, g + 1 - n)?
                .times_binom(i - 1, n - 1)?
                .times_binom(i, n - 1)?
                .over_one_minus(i - 1)?
                .over_one_minus(i)?;
        }
        Ok(p.acc)
    }

    fn weight(&self) -> usize {
        1
    }

    fn genus_one(&self, cap: usize) -> UniSeries {
        UniSeries::pow_binom(1, 1, cap).scale(&BigInt::from(self.curve.real_components))
    }
}

/// Full Hodge series in `x, y`, weight `xy`.
#[derive(Debug, Clone, Copy)]
pub struct HodgeXy {
    pub genus: u32,
}

impl Stratification for HodgeXy {
    type Series = BiSeries;

    fn name(&self) -> &'static str {
        "hodge-xy"
    }

    fn genus(&self) -> u32 {
        self.genus
    }

    fn head(&self, rank: u32, cap: usize) -> Result<BiSeries> {
        let g = self.genus;
        let mut acc = BiSeries::pow_binom((1, 0), g, cap).mul(&BiSeries::pow_binom((0, 1), g, cap), cap)?;
        for i in 2..=rank as usize {
            acc = acc.mul(&BiSeries::pow_binom((i - 1, i), g, cap), cap)?;
            acc = acc.mul(&BiSeries::pow_binom((i, i - 1), g, cap), cap)?;
            acc = acc.geom_factor((i - 1, i - 1), -1, cap)?;
            acc = acc.geom_factor((i, i), -1, cap)?;
        }
        Ok(acc)
    }

    fn weight(&self) -> (usize, usize) {
        (1, 1)
    }

    fn genus_one(&self, cap: usize) -> BiSeries {
        BiSeries::from_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)], cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Specialization;

    fn s(c: &[i64], cap: usize) -> UniSeries {
        UniSeries::from_coeffs(c.iter().copied(), cap)
    }

    #[test]
    fn rank_one_heads_are_picard_series() {
        for g in 2..6u32 {
            let cap = 2 * g as usize + 3;
            assert_eq!(
                ComplexPoincare { genus: g }.head(1, cap).unwrap(),
                UniSeries::pow_binom(1, 2 * g, cap)
            );
            assert_eq!(
                HodgeT1 { genus: g }.head(1, cap).unwrap(),
                UniSeries::pow_binom(1, g, cap).scale(&pow2(g))
            );
            for n in 1..=g + 1 {
                let curve = CurveData::real(g, n).unwrap();
                assert_eq!(
                    RealPoincare { curve }.head(1, cap).unwrap(),
                    UniSeries::pow_binom(1, g, cap).scale(&pow2(n - 1))
                );
            }
        }
    }

    #[test]
    fn complex_head_rank_two_low_degrees() {
        // (1+t)^4 (1+t^3)^4 / ((1-t^2)(1-t^4)) from the oracle script
        assert_eq!(ComplexPoincare { genus: 2 }.head(2, 3).unwrap(), s(&[1, 4, 7, 12], 3));
    }

    #[test]
    fn maximal_real_head_is_the_t1_head() {
        for g in 2..4u32 {
            let curve = CurveData::real(g, g + 1).unwrap();
            for r in 1..5 {
                assert_eq!(
                    RealPoincare { curve }.head(r, 14).unwrap(),
                    HodgeT1 { genus: g }.head(r, 14).unwrap()
                );
            }
        }
    }

    #[test]
    fn bivariate_head_specialises_to_complex_head() {
        for r in 1..4 {
            let xy = HodgeXy { genus: 2 }.head(r, 12).unwrap();
            assert_eq!(
                xy.specialize(Specialization::TT),
                ComplexPoincare { genus: 2 }.head(r, 12).unwrap()
            );
        }
    }
}
