//! Name-keyed registry of the built-in constructions, for the command line.

use std::collections::BTreeMap;

use super::catalog::{self, GallerySurface};
use super::VarietyData;
use crate::error::{Error, Result};
use crate::moduli::Calculator;

/// Integer parameters keyed by name (`g`, `n`, `d`, `k`, `m`, `r`, `dim`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructionParams {
    values: BTreeMap<&'static str, i64>,
}

impl ConstructionParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, name: &'static str, value: i64) -> Self {
        self.values.insert(name, value);
        self
    }

    pub fn insert(&mut self, name: &'static str, value: i64) {
        self.values.insert(name, value);
    }

    pub fn int(&self, name: &'static str) -> Result<i64> {
        self.values.get(name).copied().ok_or(Error::MissingParameter(name))
    }

    /// A parameter that must fit in `u32`.
    pub fn nat(&self, name: &'static str) -> Result<u32> {
        let v = self.int(name)?;
        u32::try_from(v).map_err(|_| Error::inadmissible(format!("{name} must be ≥ 0 (got {name}={v})")))
    }
}

pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Parameter names read by [`Construction::build`].
    fn params(&self) -> &'static [&'static str];
    fn build(&self, params: &ConstructionParams) -> Result<VarietyData>;
}

struct Builtin {
    name: &'static str,
    summary: &'static str,
    params: &'static [&'static str],
    build: fn(&ConstructionParams) -> Result<VarietyData>,
}

impl Construction for Builtin {
    fn name(&self) -> &'static str {
        self.name
    }

    fn summary(&self) -> &'static str {
        self.summary
    }

    fn params(&self) -> &'static [&'static str] {
        self.params
    }

    fn build(&self, params: &ConstructionParams) -> Result<VarietyData> {
        (self.build)(params)
    }
}

fn gallery(which: GallerySurface) -> Box<dyn Construction> {
    let build: fn(&ConstructionParams) -> Result<VarietyData> = match which {
        GallerySurface::AbelianMaximal => |_| Ok(catalog::surface_gallery(GallerySurface::AbelianMaximal)),
        GallerySurface::K3Expressive => |_| Ok(catalog::surface_gallery(GallerySurface::K3Expressive)),
        GallerySurface::K3Maximal5Spheres => |_| Ok(catalog::surface_gallery(GallerySurface::K3Maximal5Spheres)),
        GallerySurface::K3Maximal9Spheres => |_| Ok(catalog::surface_gallery(GallerySurface::K3Maximal9Spheres)),
    };
    let summary = match which {
        GallerySurface::AbelianMaximal => "abelian surface, real locus four tori",
        GallerySurface::K3Expressive => "K3 surface, real locus a sphere and a genus 10 surface",
        GallerySurface::K3Maximal5Spheres => "K3 surface, real locus five spheres and a genus 6 surface",
        GallerySurface::K3Maximal9Spheres => "K3 surface, real locus nine spheres and a genus 2 surface",
    };
    Box::new(Builtin {
        name: which.name(),
        summary,
        params: &[],
        build,
    })
}

pub struct ConstructionRegistry {
    entries: Vec<Box<dyn Construction>>,
}

impl Default for ConstructionRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl ConstructionRegistry {
    pub fn empty() -> Self {
        ConstructionRegistry { entries: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        let builtins = [
            Builtin {
                name: "point",
                summary: "a point",
                params: &[],
                build: |_| Ok(catalog::point()),
            },
            Builtin {
                name: "curve",
                summary: "real curve of genus g with n real circles",
                params: &["g", "n"],
                build: |p| catalog::curve(p.nat("g")?, p.nat("n")?),
            },
            Builtin {
                name: "pic",
                summary: "Picard variety Pic^d of a real curve",
                params: &["g", "n", "d"],
                build: |p| catalog::pic(p.nat("g")?, p.nat("n")?, p.int("d")?),
            },
            Builtin {
                name: "grassmannian",
                summary: "Grassmannian Gr(k, m)",
                params: &["k", "m"],
                build: |p| catalog::grassmannian(p.nat("k")?, p.nat("m")?),
            },
            Builtin {
                name: "projective_space",
                summary: "projective space P^dim",
                params: &["dim"],
                build: |p| Ok(catalog::projective_space(p.nat("dim")?)),
            },
            Builtin {
                name: "sym_power",
                summary: "symmetric power C^[k] of a real curve, k ≥ 2g-1",
                params: &["g", "n", "k"],
                build: |p| catalog::sym_power_curve(p.nat("g")?, p.nat("n")?, p.nat("k")?),
            },
            Builtin {
                name: "harnack_double_cover",
                summary: "double plane branched along a Harnack curve of degree 2k",
                params: &["k"],
                build: |p| catalog::harnack_double_cover(p.nat("k")?),
            },
            Builtin {
                name: "moduli",
                summary: "moduli space M(r, d) of bundles on a real curve",
                params: &["g", "n", "r", "d"],
                build: |p| {
                    let mut calc = Calculator::default();
                    catalog::moduli_space(&mut calc, p.nat("g")?, p.nat("n")?, p.nat("r")?, p.int("d")?)
                },
            },
            Builtin {
                name: "moduli_fixed_det",
                summary: "fixed-determinant moduli space M(r, Λ)",
                params: &["g", "n", "r", "d"],
                build: |p| {
                    let mut calc = Calculator::default();
                    catalog::moduli_fixed_det(&mut calc, p.nat("g")?, p.nat("n")?, p.nat("r")?, p.int("d")?)
                },
            },
        ];
        for b in builtins {
            reg.register(Box::new(b));
        }
        for which in GallerySurface::ALL {
            reg.register(gallery(which));
        }
        reg
    }

    /// Adds a construction, replacing any existing one with the same name.
    pub fn register(&mut self, c: Box<dyn Construction>) {
        self.entries.retain(|e| e.name() != c.name());
        self.entries.push(c);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.name())
    }

    pub fn entries(&self) -> impl Iterator<Item = &dyn Construction> + '_ {
        self.entries.iter().map(|e| e.as_ref())
    }

    pub fn get(&self, name: &str) -> Result<&dyn Construction> {
        self.entries().find(|e| e.name() == name).ok_or_else(|| Error::Unknown {
            kind: "construction",
            name: name.to_string(),
            known: self.names().collect::<Vec<_>>().join(", "),
        })
    }

    pub fn build(&self, name: &str, params: &ConstructionParams) -> Result<VarietyData> {
        self.get(name)?.build(params)
    }
}
