//! Poincaré and Hodge polynomials of moduli spaces of bundles on a curve.
//!
//! [`Calculator`] owns one memoizing [`Engine`] per recursion and curve, so
//! repeated queries (a report, a grid scan on one worker) share
//! sub-results. The free functions below build a throwaway calculator.

mod engine;
pub mod registry;
mod report;
pub mod strata;

use std::collections::HashMap;
use std::sync::Arc;

pub use engine::{Engine, ModuliKey};
pub use registry::CurveParams;
pub use report::{FixedDeterminant, ModuliReport, ReportOptions, Verdicts};
pub use strata::Stratification;

use crate::error::Result;
use crate::hn::{check_genus, CurveData};
use crate::series::{BiSeries, UniSeries};
use registry::Registry;
use strata::{ComplexPoincare, RealPoincare};

/// Complex dimension `r^2 (g - 1) + 1` of the moduli space of bundles.
pub fn dim_complex(g: u32, r: u32) -> usize {
    (r as usize).pow(2) * (g as usize).saturating_sub(1) + 1
}

/// Complex dimension `(r^2 - 1)(g - 1)` of the fixed-determinant space.
pub fn dim_fixed_det(g: u32, r: u32) -> usize {
    ((r as usize).pow(2) - 1) * (g as usize).saturating_sub(1)
}

/// Poincaré series of the stack of all rank `r` bundles, truncated at `cap`.
pub fn stack_series_complex(g: u32, r: u32, cap: usize) -> Result<UniSeries> {
    check_genus(g)?;
    ComplexPoincare { genus: g }.head(r, cap)?.geom_factor(2, -1, cap)
}

/// Mod 2 Poincaré series of the real locus of the stack of all rank `r`
/// bundles over a curve with `n` real components, truncated at `cap`.
pub fn stack_series_real(g: u32, n: u32, r: u32, cap: usize) -> Result<UniSeries> {
    let curve = CurveData::real(g, n)?;
    RealPoincare { curve }.head(r, cap)?.geom_factor(1, -1, cap)
}

pub fn q_complex(g: u32, r: u32, d: i64, cap: usize) -> Result<UniSeries> {
    Ok((*Calculator::default().q_complex(g, r, d, cap)?).clone())
}

pub fn hodge_t1(g: u32, r: u32, d: i64, cap: usize) -> Result<UniSeries> {
    Ok((*Calculator::default().hodge_t1(g, r, d, cap)?).clone())
}

pub fn q_real(g: u32, n: u32, r: u32, d: i64, cap: usize) -> Result<UniSeries> {
    Ok((*Calculator::default().q_real(g, n, r, d, cap)?).clone())
}

pub fn hodge_biseries(g: u32, r: u32, d: i64, cap: usize) -> Result<BiSeries> {
    Ok((*Calculator::default().hodge_biseries(g, r, d, cap)?).clone())
}

pub fn fixed_det(g: u32, n: u32, r: u32, d: i64) -> Result<FixedDeterminant> {
    Calculator::default().fixed_det(g, n, r, d)
}

pub fn report(g: u32, n: u32, r: u32, d: i64) -> Result<ModuliReport> {
    Calculator::default().report(g, n, r, d, ReportOptions::default())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CalculatorOptions {
    /// Memoize on `(r, d mod r, cap)`; see [`Engine::normalized`].
    pub normalize_memo: bool,
}

type EngineKey = (&'static str, CurveParams);

pub struct Calculator {
    options: CalculatorOptions,
    uni_registry: Registry<UniSeries>,
    bi_registry: Registry<BiSeries>,
    uni: HashMap<EngineKey, Engine<UniSeries>>,
    bi: HashMap<EngineKey, Engine<BiSeries>>,
}

impl Default for Calculator {
    fn default() -> Self {
        Calculator::new(CalculatorOptions::default())
    }
}

impl Calculator {
    pub fn new(options: CalculatorOptions) -> Self {
        Calculator::with_registries(options, registry::univariate(), registry::bivariate())
    }

    pub fn with_registries(
        options: CalculatorOptions,
        uni_registry: Registry<UniSeries>,
        bi_registry: Registry<BiSeries>,
    ) -> Self {
        Calculator {
            options,
            uni_registry,
            bi_registry,
            uni: HashMap::new(),
            bi: HashMap::new(),
        }
    }

    pub fn options(&self) -> CalculatorOptions {
        self.options
    }

    pub fn univariate_registry(&self) -> &Registry<UniSeries> {
        &self.uni_registry
    }

    /// Runs the univariate recursion registered as `kind`.
    pub fn series(&mut self, kind: &str, params: CurveParams, r: u32, d: i64, cap: usize) -> Result<Arc<UniSeries>> {
        let entry = self.uni_registry.get(kind)?;
        let params = strip_unused(params, entry.needs_real_components);
        let key = (entry.name, params);
        if !self.uni.contains_key(&key) {
            let strat = self.uni_registry.build(kind, &params)?;
            self.uni
                .insert(key, Engine::new(strat).normalized(self.options.normalize_memo));
        }
        self.uni.get_mut(&key).expect("inserted above").compute(r, d, cap)
    }

    /// Runs the bivariate recursion registered as `kind`.
    pub fn biseries(&mut self, kind: &str, params: CurveParams, r: u32, d: i64, cap: usize) -> Result<Arc<BiSeries>> {
        let entry = self.bi_registry.get(kind)?;
        let params = strip_unused(params, entry.needs_real_components);
        let key = (entry.name, params);
        if !self.bi.contains_key(&key) {
            let strat = self.bi_registry.build(kind, &params)?;
            self.bi
                .insert(key, Engine::new(strat).normalized(self.options.normalize_memo));
        }
        self.bi.get_mut(&key).expect("inserted above").compute(r, d, cap)
    }

    /// `Q^C_t(r, d)`, the complex Poincaré series.
    pub fn q_complex(&mut self, g: u32, r: u32, d: i64, cap: usize) -> Result<Arc<UniSeries>> {
        self.series("poincare", CurveParams::complex(g), r, d, cap)
    }

    /// `Q_{(t,1)}(r, d)`, the Hodge series at `x = t, y = 1`.
    pub fn hodge_t1(&mut self, g: u32, r: u32, d: i64, cap: usize) -> Result<Arc<UniSeries>> {
        self.series("hodge-t1", CurveParams::complex(g), r, d, cap)
    }

    /// `Q^R_t(n, r, d)`, the mod 2 Poincaré series of the real locus.
    pub fn q_real(&mut self, g: u32, n: u32, r: u32, d: i64, cap: usize) -> Result<Arc<UniSeries>> {
        self.series("real", CurveParams::real(g, n), r, d, cap)
    }

    /// `Q_{(x,y)}(r, d)`, the Hodge series truncated at total degree `cap`.
    pub fn hodge_biseries(&mut self, g: u32, r: u32, d: i64, cap: usize) -> Result<Arc<BiSeries>> {
        self.biseries("hodge-xy", CurveParams::complex(g), r, d, cap)
    }
}

fn strip_unused(params: CurveParams, needs_real: bool) -> CurveParams {
    if needs_real {
        params
    } else {
        CurveParams::complex(params.genus)
    }
}
