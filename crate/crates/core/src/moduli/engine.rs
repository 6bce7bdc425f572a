use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;

use super::strata::Stratification;
use crate::error::{Error, Result};
use crate::hn::{self, check_genus};
use crate::series::TruncatedSeries;

/// Memo key: rank, degree and truncation degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuliKey {
    pub rank: u32,
    pub degree: i64,
    pub cap: usize,
}

/// Runs one stratification recursion and memoizes every `(r, d, cap)` it
/// touches. Owned by a single worker; share results, not engines.
pub struct Engine<S: TruncatedSeries> {
    strat: Box<dyn Stratification<Series = S>>,
    memo: HashMap<ModuliKey, Arc<S>>,
    normalize_degree: bool,
}

impl<S: TruncatedSeries> Engine<S> {
    pub fn new(strat: Box<dyn Stratification<Series = S>>) -> Self {
        Engine {
            strat,
            memo: HashMap::new(),
            normalize_degree: false,
        }
    }

    /// Memoize on `(r, d mod r, cap)` instead of the exact degree. Sound
    /// because twisting by a degree-one line bundle maps the types for
    /// `(r, d)` onto those for `(r, d + r)` with the same codimensions.
    pub fn normalized(mut self, on: bool) -> Self {
        self.normalize_degree = on;
        self
    }

    pub fn stratification(&self) -> &dyn Stratification<Series = S> {
        self.strat.as_ref()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `Q(r, d)` truncated at `cap`: the series `(1 - w) P(Bun^ss(r, d))`,
    /// which is the polynomial of the moduli space when `gcd(r, d) = 1`.
    pub fn compute(&mut self, rank: u32, degree: i64, cap: usize) -> Result<Arc<S>> {
        let g = self.strat.genus();
        check_genus(g)?;
        if rank == 0 {
            return Err(Error::inadmissible("r must satisfy r ≥ 1 (got r=0)"));
        }
        if g == 1 {
            if degree.gcd(&(rank as i64)) != 1 {
                return Err(Error::inadmissible(format!(
                    "genus 1 requires gcd(r,d) = 1 (got r={rank}, d={degree})"
                )));
            }
            return Ok(Arc::new(self.strat.genus_one(cap)));
        }
        self.recurse(rank, degree, cap)
    }

    fn recurse(&mut self, rank: u32, degree: i64, cap: usize) -> Result<Arc<S>> {
        let degree = if self.normalize_degree {
            degree.rem_euclid(rank as i64)
        } else {
            degree
        };
        let key = ModuliKey { rank, degree, cap };
        if let Some(hit) = self.memo.get(&key) {
            return Ok(Arc::clone(hit));
        }

        let weight = self.strat.weight();
        let step = S::exponent_degree(weight);
        let mut q = self.strat.head(rank, cap)?;
        let bound = (cap / step) as u64;
        for (mu, c) in hn::enumerate_with_codim(rank, degree, self.strat.genus(), bound) {
            let c = c as usize;
            // the term is divisible by w^c, so its factors are only needed
            // below the remaining degree
            let rem = cap - c * step;
            let blocks = mu.blocks();
            let first = self.recurse(blocks[0].rank, blocks[0].degree, cap)?;
            let mut term = first.truncate(rem)?;
            for b in &blocks[1..] {
                let sub = self.recurse(b.rank, b.degree, cap)?;
                term = term.mul(&sub, rem)?;
            }
            term = term.geom_factor(weight, -(blocks.len() as i64 - 1), rem)?;
            q.sub_shifted(&term, S::scale_exponent(weight, c));
        }

        let q = Arc::new(q);
        self.memo.insert(key, Arc::clone(&q));
        Ok(q)
    }
}
