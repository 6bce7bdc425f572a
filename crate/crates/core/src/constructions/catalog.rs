use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{proj_bundle, VarietyData};
use crate::error::{Error, Result};
use crate::hn::check_genus;
use crate::moduli::{dim_fixed_det, Calculator, ReportOptions};
use crate::series::UniSeries;

fn check_components(g: u32, n: u32, min: u32) -> Result<()> {
    if n < min || n > g + 1 {
        return Err(Error::inadmissible(format!(
            "n must satisfy {min} ≤ n ≤ g+1 (got n={n}, g={g})"
        )));
    }
    Ok(())
}

pub fn point() -> VarietyData {
    VarietyData {
        label: "point".into(),
        dim: 0,
        hodge_t1: UniSeries::one(0),
        poincare_real: UniSeries::one(0),
        torsion_free: true,
    }
}

/// A real curve of genus `g` whose real locus has `n` circles.
pub fn curve(g: u32, n: u32) -> Result<VarietyData> {
    check_components(g, n, 0)?;
    let line = UniSeries::pow_binom(1, 1, 1);
    VarietyData::new(
        format!("C(g={g}, n={n})"),
        1,
        line.scale(&BigInt::from(g + 1)),
        line.scale(&BigInt::from(n)),
        true,
    )
}

/// `Pic^d(C)` for a curve of genus `g` with `n` real circles (`n = 0`
/// allowed).
pub fn pic(g: u32, n: u32, d: i64) -> Result<VarietyData> {
    check_genus(g)?;
    check_components(g, n, 0)?;
    let torus = UniSeries::pow_binom(1, g, g as usize);
    let real = if n >= 1 {
        torus.scale(&(BigInt::one() << (n - 1)))
    } else if g % 2 == 1 && d % 2 != 0 {
        UniSeries::zero(g as usize)
    } else if g % 2 == 1 {
        torus.scale(&BigInt::from(2))
    } else {
        torus.clone()
    };
    VarietyData::new(
        format!("Pic^{d}(C(g={g}, n={n}))"),
        g as usize,
        torus.scale(&(BigInt::one() << g)),
        real,
        true,
    )
}

/// Gaussian binomial `[m choose k]_t`, the generating polynomial of the
/// Schubert cell dimensions of `Gr(k, m)`.
pub fn gaussian_binomial(k: u32, m: u32) -> Result<UniSeries> {
    if k > m {
        return Err(Error::inadmissible(format!(
            "Grassmannian needs 0 ≤ k ≤ m (got k={k}, m={m})"
        )));
    }
    let (k, m) = (k as usize, m as usize);
    let cap = k * (m - k);
    // prod_{i=1..k} (1 - t^{m-k+i}) / (1 - t^i); exact since the quotient is
    // a polynomial of degree `cap`
    let mut acc = UniSeries::one(cap);
    for i in 1..=k {
        acc = acc.geom_factor(m - k + i, 1, cap)?;
        acc = acc.geom_factor(i, -1, cap)?;
    }
    Ok(acc)
}

/// `Gr(k, m)` with its standard real structure.
pub fn grassmannian(k: u32, m: u32) -> Result<VarietyData> {
    let cells = gaussian_binomial(k, m)?;
    VarietyData::new(format!("Gr({k},{m})"), cells.cap(), cells.clone(), cells, true)
}

pub fn projective_space(dim: u32) -> VarietyData {
    proj_bundle(&point(), dim + 1)
        .expect("rank is positive")
        .relabel(format!("P^{dim}"))
}

/// Symmetric power `C^[k]` for `k ≥ 2g - 1`, a projective bundle of rank
/// `k - g + 1` over the Picard variety.
pub fn sym_power_curve(g: u32, n: u32, k: u32) -> Result<VarietyData> {
    check_genus(g)?;
    check_components(g, n, 1)?;
    if k + 1 < 2 * g {
        return Err(Error::inadmissible(format!(
            "symmetric power formula needs k ≥ 2g−1 (got k={k}, g={g})"
        )));
    }
    let base = pic(g, n, k as i64)?;
    Ok(proj_bundle(&base, k - g + 1)?.relabel(format!("C(g={g}, n={n})^[{k}]")))
}

/// Row sums `sum_j h^{i,j}` of a Hodge diamond given as `h[i][j]`.
fn t1_from_diamond(h: &[[u32; 3]; 3]) -> UniSeries {
    UniSeries::from_coeffs(h.iter().map(|row| row.iter().sum::<u32>()), 2)
}

/// Mod 2 Poincaré polynomial of a disjoint union of closed orientable
/// surfaces, given as `(count, genus)` pairs.
fn surfaces(components: &[(u32, u32)]) -> UniSeries {
    components.iter().fold(UniSeries::zero(2), |acc, &(count, genus)| {
        let one = UniSeries::from_coeffs([1, 2 * genus, 1], 2);
        &acc + &one.scale(&BigInt::from(count))
    })
}

/// Double cover of the plane branched along a Harnack curve of degree `2k`.
pub fn harnack_double_cover(k: u32) -> Result<VarietyData> {
    if k < 1 {
        return Err(Error::inadmissible("Harnack double cover needs k ≥ 1 (got k=0)"));
    }
    let outer = (k - 1) * (k.saturating_sub(2)) / 2;
    let middle = 3 * k * (k - 1) + 2;
    let diamond = [[1, 0, outer], [0, middle, 0], [outer, 0, 1]];
    let real = UniSeries::from_coeffs([outer + 1, middle, outer + 1], 2);
    VarietyData::new(
        format!("Harnack double cover (k={k})"),
        2,
        t1_from_diamond(&diamond),
        real,
        true,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GallerySurface {
    /// Abelian surface whose real locus is four tori.
    AbelianMaximal,
    /// K3 surface, real locus a sphere and a genus 10 surface.
    K3Expressive,
    /// K3 surface, real locus five spheres and a genus 6 surface.
    K3Maximal5Spheres,
    /// K3 surface, real locus nine spheres and a genus 2 surface.
    K3Maximal9Spheres,
}

impl GallerySurface {
    pub const ALL: [GallerySurface; 4] = [
        GallerySurface::AbelianMaximal,
        GallerySurface::K3Expressive,
        GallerySurface::K3Maximal5Spheres,
        GallerySurface::K3Maximal9Spheres,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GallerySurface::AbelianMaximal => "abelian_maximal",
            GallerySurface::K3Expressive => "k3_expressive",
            GallerySurface::K3Maximal5Spheres => "k3_maximal_5spheres",
            GallerySurface::K3Maximal9Spheres => "k3_maximal_9spheres",
        }
    }
}

impl fmt::Display for GallerySurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GallerySurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GallerySurface::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "gallery surface",
                name: s.to_string(),
                known: GallerySurface::ALL.map(|g| g.name()).join(", "),
            })
    }
}

const ABELIAN: [[u32; 3]; 3] = [[1, 2, 1], [2, 4, 2], [1, 2, 1]];
const K3: [[u32; 3]; 3] = [[1, 0, 1], [0, 20, 0], [1, 0, 1]];

pub fn surface_gallery(which: GallerySurface) -> VarietyData {
    let (diamond, real) = match which {
        GallerySurface::AbelianMaximal => (&ABELIAN, surfaces(&[(4, 1)])),
        GallerySurface::K3Expressive => (&K3, surfaces(&[(1, 0), (1, 10)])),
        GallerySurface::K3Maximal5Spheres => (&K3, surfaces(&[(5, 0), (1, 6)])),
        GallerySurface::K3Maximal9Spheres => (&K3, surfaces(&[(9, 0), (1, 2)])),
    };
    VarietyData::new(which.name(), 2, t1_from_diamond(diamond), real, true).expect("gallery data are surfaces")
}

/// The moduli space `M(r, d)` over a curve with `n` real circles, as
/// variety data for the construction calculus.
pub fn moduli_space(calc: &mut Calculator, g: u32, n: u32, r: u32, d: i64) -> Result<VarietyData> {
    let rep = calc.report(g, n, r, d, ReportOptions { hodge_xy: false })?;
    VarietyData::new(
        format!("M(r={r}, d={d}) over C(g={g}, n={n})"),
        rep.dim_complex,
        rep.hodge_t1,
        rep.poincare_real,
        true,
    )
}

/// The fixed-determinant moduli space `M(r, Λ)`.
pub fn moduli_fixed_det(calc: &mut Calculator, g: u32, n: u32, r: u32, d: i64) -> Result<VarietyData> {
    let fd = calc.fixed_det(g, n, r, d)?;
    VarietyData::new(
        format!("M(r={r}, Λ, deg {d}) over C(g={g}, n={n})"),
        dim_fixed_det(g, r),
        fd.hodge_t1,
        fd.poincare_real,
        true,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::EvalPoint;

    fn poly(c: &[i64], cap: usize) -> UniSeries {
        UniSeries::from_coeffs(c.iter().copied(), cap)
    }

    #[test]
    fn picard_varieties() {
        let p = pic(2, 3, 0).unwrap();
        assert!(p.is_hodge_expressive());
        assert_eq!(p.hodge_t1, poly(&[4, 8, 4], 2));
        assert!(!pic(2, 2, 0).unwrap().is_hodge_expressive());
    }

    #[test]
    fn picard_varieties_of_curves_without_real_points() {
        assert!(pic(3, 0, 1).unwrap().poincare_real.is_zero());
        assert_eq!(pic(3, 0, 2).unwrap().poincare_real, poly(&[2, 6, 6, 2], 3));
        assert_eq!(pic(2, 0, 1).unwrap().poincare_real, poly(&[1, 2, 1], 2));
        let elliptic = pic(1, 0, 0).unwrap();
        assert_eq!(elliptic.poincare_real, poly(&[2, 2], 1));
        assert!(elliptic.is_maximal());
        assert!(!pic(3, 0, 2).unwrap().is_maximal());
    }

    #[test]
    fn grassmannians() {
        assert_eq!(grassmannian(1, 2).unwrap().hodge_t1, poly(&[1, 1], 1));
        assert_eq!(grassmannian(2, 4).unwrap().hodge_t1, poly(&[1, 1, 2, 1, 1], 4));
        assert_eq!(grassmannian(0, 5).unwrap().hodge_t1, poly(&[1], 0));
        assert_eq!(grassmannian(5, 5).unwrap().hodge_t1, poly(&[1], 0));
        assert!(grassmannian(2, 4).unwrap().is_hodge_expressive());
        assert!(grassmannian(3, 2).is_err());
    }

    #[test]
    fn symmetric_powers() {
        let s = sym_power_curve(2, 3, 3).unwrap();
        assert_eq!(s.hodge_t1, poly(&[4, 12, 12, 4], 3));
        assert!(s.is_hodge_expressive());
        assert!(!sym_power_curve(2, 2, 3).unwrap().is_hodge_expressive());
        let c = sym_power_curve(1, 2, 1).unwrap();
        assert_eq!(c.hodge_t1, poly(&[2, 2], 1));
        assert!(c.is_hodge_expressive());
        assert!(sym_power_curve(3, 4, 4).is_err());
    }

    #[test]
    fn harnack_surfaces() {
        assert_eq!(harnack_double_cover(1).unwrap().hodge_t1, poly(&[1, 2, 1], 2));
        assert_eq!(harnack_double_cover(2).unwrap().hodge_t1, poly(&[1, 8, 1], 2));
        let k3 = harnack_double_cover(3).unwrap();
        assert_eq!(k3.hodge_t1, poly(&[2, 20, 2], 2));
        assert!(k3.is_hodge_expressive());
        assert!(harnack_double_cover(0).is_err());
    }

    #[test]
    fn gallery() {
        let a = surface_gallery(GallerySurface::AbelianMaximal);
        assert_eq!(a.hodge_t1, poly(&[4, 8, 4], 2));
        assert_eq!(a.poincare_real, poly(&[4, 8, 4], 2));
        assert!(a.is_hodge_expressive());

        let k3 = surface_gallery(GallerySurface::K3Expressive);
        assert_eq!(k3.poincare_real, poly(&[2, 20, 2], 2));
        assert!(k3.is_hodge_expressive());
        assert_eq!(k3.poincare_real.eval_at(EvalPoint::MinusOne), BigInt::from(-16));

        let five = surface_gallery(GallerySurface::K3Maximal5Spheres);
        assert_eq!(five.poincare_real, poly(&[6, 12, 6], 2));
        assert!(five.is_maximal() && !five.is_hodge_expressive());

        let nine = surface_gallery(GallerySurface::K3Maximal9Spheres);
        assert_eq!(nine.poincare_real, poly(&[10, 4, 10], 2));
        assert!(nine.is_maximal() && !nine.is_hodge_expressive());

        assert!("enriques".parse::<GallerySurface>().is_err());
        assert_eq!(
            "k3_expressive".parse::<GallerySurface>(),
            Ok(GallerySurface::K3Expressive)
        );
    }

    #[test]
    fn curves() {
        assert!(curve(3, 4).unwrap().is_hodge_expressive());
        assert!(!curve(3, 2).unwrap().is_maximal());
        assert!(curve(3, 5).is_err());
    }
}
