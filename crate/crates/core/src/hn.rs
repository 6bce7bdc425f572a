//! Harder–Narasimhan types and the enumeration of the non-semistable types
//! of bounded codimension.
//!
//! A type for `(r, d)` is a sequence of blocks `(r_i, d_i)` with positive
//! ranks summing to `r`, degrees summing to `d`, and strictly decreasing
//! slopes `d_i / r_i`. Slopes are always compared by cross-multiplication.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// One semistable quotient of the filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub rank: u32,
    pub degree: i64,
}

impl Block {
    pub fn new(rank: u32, degree: i64) -> Self {
        Block { rank, degree }
    }

    /// Compares `self.degree / self.rank` with `other.degree / other.rank`.
    pub fn cmp_slope(&self, other: &Block) -> Ordering {
        let lhs = self.degree as i128 * other.rank as i128;
        let rhs = other.degree as i128 * self.rank as i128;
        lhs.cmp(&rhs)
    }
}

/// A Harder–Narasimhan type, ordered lexicographically by its blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnType {
    blocks: Vec<Block>,
}

impl HnType {
    pub fn new(blocks: Vec<Block>) -> Self {
        HnType { blocks }
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> Self {
        HnType {
            blocks: pairs.iter().map(|&(r, d)| Block::new(r, d)).collect(),
        }
    }

    /// The single-block semistable type `(r, d)`.
    pub fn semistable(rank: u32, degree: i64) -> Self {
        HnType {
            blocks: vec![Block::new(rank, degree)],
        }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.blocks.iter().map(|b| b.degree).sum()
    }

    /// Adds `rank_i` to every block degree, i.e. tensoring by a degree-one
    /// line bundle.
    pub fn twist(&self) -> Self {
        HnType {
            blocks: self
                .blocks
                .iter()
                .map(|b| Block::new(b.rank, b.degree + b.rank as i64))
                .collect(),
        }
    }
}

impl fmt::Display for HnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", b.rank, b.degree)?;
        }
        write!(f, ")")
    }
}

/// Genus of the curve and, for real computations, the number of connected
/// components of its real locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveData {
    pub genus: u32,
    pub real_components: u32,
}

impl CurveData {
    /// Checks `g >= 1` and the Harnack–Klein bound `1 <= n <= g + 1`.
    pub fn real(genus: u32, real_components: u32) -> Result<Self> {
        check_genus(genus)?;
        if real_components < 1 || real_components > genus + 1 {
            return Err(Error::inadmissible(format!(
                "n must satisfy 1 ≤ n ≤ g+1 (got n={real_components}, g={genus})"
            )));
        }
        Ok(CurveData { genus, real_components })
    }

    pub fn is_maximal(&self) -> bool {
        self.real_components == self.genus + 1
    }
}

pub(crate) fn check_genus(genus: u32) -> Result<()> {
    if genus == 0 {
        return Err(Error::inadmissible("g must satisfy g ≥ 1 (got g=0)"));
    }
    Ok(())
}

/// True iff the blocks sum to `(r, d)` and their slopes strictly decrease.
pub fn validate(mu: &HnType, r: u32, d: i64) -> bool {
    !mu.is_empty()
        && mu.blocks.iter().all(|b| b.rank > 0)
        && mu.rank() == r
        && mu.degree() == d
        && mu.blocks.windows(2).all(|w| w[0].cmp_slope(&w[1]) == Ordering::Greater)
}

/// Codimension `d_mu = sum_{i<j} (r_j d_i - r_i d_j + r_i r_j (g - 1))` of the
/// stratum of type `mu`. Only defined for types with at least two blocks.
pub fn codim(mu: &HnType, g: u32) -> Result<u64> {
    if mu.len() < 2 {
        return Err(Error::inadmissible(format!(
            "codimension is only defined for types with at least two blocks, got {mu}"
        )));
    }
    check_genus(g)?;
    let gm1 = g as i64 - 1;
    let mut total = 0i64;
    for (i, bi) in mu.blocks.iter().enumerate() {
        for bj in &mu.blocks[i + 1..] {
            let (ri, rj) = (bi.rank as i64, bj.rank as i64);
            total += rj * bi.degree - ri * bj.degree + ri * rj * gm1;
        }
    }
    u64::try_from(total).map_err(|_| Error::inadmissible(format!("type {mu} is not a valid Harder–Narasimhan type")))
}

/// Every type for `(r, d)` with at least two blocks and codimension at most
/// `cap`, in lexicographic order. Empty for `r <= 1`.
pub fn enumerate(r: u32, d: i64, g: u32, cap: u64) -> Vec<HnType> {
    enumerate_with_codim(r, d, g, cap)
        .into_iter()
        .map(|(mu, _)| mu)
        .collect()
}

/// As [`enumerate`], paired with each type's codimension.
///
/// Depth-first over blocks. For a leading block `(r1, d1)` of a remaining
/// tail `(R, D)`, its codimension against the rest of the tail is
/// `R d1 - r1 D + r1 (R - r1)(g - 1)`. Every pairwise term is positive, so
/// that partial sum alone must fit the remaining budget, and the leading
/// slope must exceed the tail average, giving `1 <= R d1 - r1 D`.
///
/// # Panics
///
/// If `g == 0`, where codimensions are no longer bounded below.
pub fn enumerate_with_codim(r: u32, d: i64, g: u32, cap: u64) -> Vec<(HnType, u64)> {
    assert!(g >= 1, "enumeration needs genus at least 1");
    let mut out = Vec::new();
    if r < 2 {
        return out;
    }
    let mut walk = Walk {
        gm1: g as i64 - 1,
        prefix: Vec::new(),
        out: &mut out,
    };
    walk.split(r as i64, d, None, cap.min(i64::MAX as u64) as i64, 0);
    out.sort();
    out
}

struct Walk<'a> {
    gm1: i64,
    prefix: Vec<Block>,
    out: &'a mut Vec<(HnType, u64)>,
}

impl Walk<'_> {
    /// Emits every completion of the current prefix by a tail of total
    /// `(rank, degree)` whose leading slope is below `prev`.
    fn split(&mut self, rank: i64, degree: i64, prev: Option<Block>, budget: i64, spent: i64) {
        if prev.is_some() {
            // the tail as one block: its slope is below the tail average's
            // bound, so it is automatically below `prev`
            self.prefix.push(Block::new(rank as u32, degree));
            self.out.push((HnType::new(self.prefix.clone()), spent as u64));
            self.prefix.pop();
        }
        for r1 in 1..rank {
            let base = r1 * (rank - r1) * self.gm1;
            if base + 1 > budget {
                continue;
            }
            let lo = Integer::div_ceil(&(r1 * degree + 1), &rank);
            let mut hi = Integer::div_floor(&(budget - base + r1 * degree), &rank);
            if let Some(p) = prev {
                // d1 / r1 < p.degree / p.rank
                let bound = Integer::div_floor(&(p.degree * r1 - 1), &(p.rank as i64));
                hi = hi.min(bound);
            }
            for d1 in lo..=hi {
                let cross = rank * d1 - r1 * degree + base;
                self.prefix.push(Block::new(r1 as u32, d1));
                self.split(
                    rank - r1,
                    degree - d1,
                    Some(Block::new(r1 as u32, d1)),
                    budget - cross,
                    spent + cross,
                );
                self.prefix.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(pairs: &[(u32, i64)]) -> HnType {
        HnType::from_pairs(pairs)
    }

    #[test]
    fn codim_by_substitution() {
        assert_eq!(codim(&t(&[(1, 1), (1, 0)]), 2), Ok(2));
        assert_eq!(codim(&t(&[(1, 1), (1, 0)]), 3), Ok(3));
        assert_eq!(codim(&t(&[(1, 2), (1, 1), (1, 0)]), 2), Ok(7));
        // 2k - d + g - 1
        for (g, d, k) in [(2, 1, 1), (3, 1, 4), (4, -3, 0), (2, 5, 7)] {
            let mu = t(&[(1, k), (1, d - k)]);
            assert_eq!(codim(&mu, g).unwrap() as i64, 2 * k - d + g as i64 - 1);
        }
    }

    #[test]
    fn codim_rejects_single_block() {
        assert!(matches!(codim(&t(&[(2, 1)]), 2), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn validation() {
        assert!(validate(&t(&[(1, 1), (1, 0)]), 2, 1));
        assert!(!validate(&t(&[(1, 0), (1, 1)]), 2, 1));
        assert!(validate(&t(&[(2, 1)]), 2, 1));
        assert!(!validate(&t(&[(1, 1), (1, 1)]), 2, 2));
        assert!(!validate(&t(&[(1, 1), (1, 0)]), 2, 2));
        assert!(!validate(&t(&[(0, 1), (2, 0)]), 2, 1));
        assert!(!validate(&HnType::new(vec![]), 0, 0));
    }

    #[test]
    fn rank_two_degree_one() {
        let got = enumerate_with_codim(2, 1, 2, 6);
        let expected = vec![
            (t(&[(1, 1), (1, 0)]), 2),
            (t(&[(1, 2), (1, -1)]), 4),
            (t(&[(1, 3), (1, -2)]), 6),
        ];
        assert_eq!(got, expected);
        assert!(enumerate(2, 1, 2, 1).is_empty());
    }

    #[test]
    fn rank_one_has_no_proper_types() {
        for d in -3..3 {
            assert!(enumerate(1, d, 2, 50).is_empty());
        }
    }

    #[test]
    fn rank_three_matches_oracle_list() {
        // values from the brute-force oracle in tests/oracles
        let got = enumerate_with_codim(3, 1, 2, 8);
        let expected = vec![
            (t(&[(1, 1), (2, 0)]), 4),
            (t(&[(1, 2), (2, -1)]), 7),
            (t(&[(2, 1), (1, 0)]), 3),
            (t(&[(2, 2), (1, -1)]), 6),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn curve_bounds() {
        assert!(CurveData::real(2, 3).is_ok());
        let err = CurveData::real(2, 4).unwrap_err();
        assert!(err.to_string().contains("n must satisfy 1 ≤ n ≤ g+1"));
        assert!(CurveData::real(2, 0).is_err());
        assert!(CurveData::real(0, 1).is_err());
        assert!(CurveData::real(3, 4).unwrap().is_maximal());
    }
}
