use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;

use hexpress::moduli::{Calculator, CalculatorOptions, ModuliReport, ReportOptions};

/// Inclusive range written `A..B`, or a single value `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: u32,
    pub hi: u32,
}

impl IntRange {
    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("expected a non-negative integer, got `{t}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("range {lo}..{hi} is empty"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreePolicy {
    /// `d = 1`, coprime to every rank.
    CoprimeMin,
    /// A fixed `d`; ranks not coprime to it are skipped.
    Fixed(i64),
}

impl DegreePolicy {
    fn degree(self, r: u32) -> Option<i64> {
        match self {
            DegreePolicy::CoprimeMin => Some(1),
            DegreePolicy::Fixed(d) if d.gcd(&(r as i64)) == 1 => Some(d),
            DegreePolicy::Fixed(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub g: IntRange,
    pub r: IntRange,
    pub n: IntRange,
    pub d_policy: DegreePolicy,
    pub hodge_xy: bool,
    /// Worker count; 0 lets rayon decide.
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub g: u32,
    pub n: u32,
    pub r: u32,
    pub d: i64,
}

impl ScanSpec {
    /// Admissible cells in emission order: g, then r, then n. Cells with
    /// `n > g + 1`, `g = 0`, `r = 0` or `gcd(r, d) > 1` are dropped.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for g in self.g.iter().filter(|&g| g >= 1) {
            for r in self.r.iter().filter(|&r| r >= 1) {
                let Some(d) = self.d_policy.degree(r) else {
                    continue;
                };
                for n in self.n.iter().filter(|&n| n >= 1 && n <= g + 1) {
                    out.push(Cell { g, n, r, d });
                }
            }
        }
        out
    }

    /// Computes every cell on a worker pool. Each worker keeps its own
    /// memoizing calculator; results come back in cell order.
    pub fn run(&self) -> anyhow::Result<Vec<ModuliReport>> {
        let cells = self.cells();
        let options = ReportOptions {
            hodge_xy: self.hodge_xy,
        };
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build()?;
        let results: Vec<hexpress::Result<ModuliReport>> = pool.install(|| {
            cells
                .par_iter()
                .map_init(
                    || Calculator::new(CalculatorOptions { normalize_memo: true }),
                    |calc, c| calc.report(c.g, c.n, c.r, c.d, options),
                )
                .collect()
        });
        Ok(results.into_iter().collect::<hexpress::Result<Vec<_>>>()?)
    }
}
