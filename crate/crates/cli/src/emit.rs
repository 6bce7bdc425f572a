//! JSON and CSV shapes. Every integer that can outgrow 64 bits is written as
//! a decimal string.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use hexpress::constructions::VarietyData;
use hexpress::moduli::ModuliReport;
use hexpress::series::{BiSeries, UniSeries};

pub fn coeffs(p: &UniSeries) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedDetJson {
    pub hodge_t1: Vec<String>,
    pub poincare_real: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictsJson {
    pub hodge_expressive: bool,
    pub maximal: bool,
    pub chi_eq_sigma: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub g: u32,
    pub r: u32,
    pub d: i64,
    pub n: u32,
    pub dim_complex: usize,
    pub poincare_complex: Vec<String>,
    pub hodge_t1: Vec<String>,
    pub poincare_real: Vec<String>,
    pub fixed_det: FixedDetJson,
    pub verdicts: VerdictsJson,
    pub b0_real: String,
    pub total_betti_complex: String,
    pub total_betti_real: String,
}

impl From<&ModuliReport> for ReportJson {
    fn from(rep: &ModuliReport) -> Self {
        ReportJson {
            g: rep.g,
            r: rep.r,
            d: rep.d,
            n: rep.n,
            dim_complex: rep.dim_complex,
            poincare_complex: coeffs(&rep.poincare_complex),
            hodge_t1: coeffs(&rep.hodge_t1),
            poincare_real: coeffs(&rep.poincare_real),
            fixed_det: FixedDetJson {
                hodge_t1: coeffs(&rep.fixed_det.hodge_t1),
                poincare_real: coeffs(&rep.fixed_det.poincare_real),
            },
            verdicts: VerdictsJson {
                hodge_expressive: rep.verdicts.hodge_expressive,
                maximal: rep.verdicts.maximal,
                chi_eq_sigma: rep.verdicts.chi_eq_sigma,
            },
            b0_real: rep.b0_real.to_string(),
            total_betti_complex: rep.total_betti_complex.to_string(),
            total_betti_real: rep.total_betti_real.to_string(),
        }
    }
}

pub const CSV_HEADER: &str =
    "g,r,d,n,dim_complex,b0_real,total_betti_complex,total_betti_real,hodge_expressive,maximal,chi_eq_sigma";

/// Header plus one row per report. Every field is an integer or a boolean,
/// so nothing needs quoting.
pub fn csv(reports: &[ModuliReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rep in reports {
        let v = rep.verdicts;
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            rep.g,
            rep.r,
            rep.d,
            rep.n,
            rep.dim_complex,
            rep.b0_real,
            rep.total_betti_complex,
            rep.total_betti_real,
            v.hodge_expressive,
            v.maximal,
            v.chi_eq_sigma
        )
        .expect("writing to a String");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyJson {
    pub label: String,
    pub dim: usize,
    pub hodge_t1: Vec<String>,
    pub poincare_real: Vec<String>,
    pub torsion_free: bool,
    pub verdicts: VerdictsJson,
    pub total_betti_complex: String,
    pub total_betti_real: String,
}

impl From<&VarietyData> for VarietyJson {
    fn from(x: &VarietyData) -> Self {
        VarietyJson {
            label: x.label.clone(),
            dim: x.dim,
            hodge_t1: coeffs(&x.hodge_t1),
            poincare_real: coeffs(&x.poincare_real),
            torsion_free: x.torsion_free,
            verdicts: VerdictsJson {
                hodge_expressive: x.is_hodge_expressive(),
                maximal: x.is_maximal(),
                chi_eq_sigma: x.chi_eq_sigma(),
            },
            total_betti_complex: x.total_betti_complex().to_string(),
            total_betti_real: x.total_betti_real().to_string(),
        }
    }
}

/// Output of `hodge`: a polynomial in one variable or the array `h^{p,q}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HodgeData {
    Polynomial(Vec<String>),
    Array(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeJson {
    pub g: u32,
    pub r: u32,
    pub d: i64,
    pub spec: String,
    pub dim_complex: usize,
    pub hodge: HodgeData,
}

pub fn hodge_array(xy: &BiSeries, n: usize) -> HodgeData {
    HodgeData::Array(
        xy.to_matrix(n)
            .into_iter()
            .map(|row| row.iter().map(BigInt::to_string).collect())
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub kind: String,
    pub g: u32,
    pub n: Option<u32>,
    pub r: u32,
    pub d: i64,
    pub cap: usize,
    pub coefficients: Vec<String>,
}
