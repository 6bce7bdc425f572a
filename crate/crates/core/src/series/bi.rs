use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use super::kernel;
use super::{EvalPoint, Specialization, TruncatedSeries, UniSeries};
use crate::error::{Error, Result};

/// A power series in `x, y` truncated at total degree `cap` (inclusive).
///
/// Coefficients are stored row by row in total degree: the entry for
/// `x^i y^j` lives at `s(s+1)/2 + i` where `s = i + j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiSeries {
    cap: usize,
    coeffs: Vec<BigInt>,
}

#[inline]
fn row(s: usize) -> usize {
    s * (s + 1) / 2
}

#[inline]
fn index(i: usize, j: usize) -> usize {
    row(i + j) + i
}

impl BiSeries {
    pub fn zero(cap: usize) -> Self {
        BiSeries {
            cap,
            coeffs: kernel::zeros(row(cap + 1)),
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Sum of `c x^i y^j` terms; terms of total degree above `cap` are dropped.
    pub fn from_terms<C: Into<BigInt> + Clone>(terms: &[(usize, usize, C)], cap: usize) -> Self {
        let mut s = Self::zero(cap);
        for (i, j, c) in terms {
            if i + j <= cap {
                s.coeffs[index(*i, *j)] += c.clone().into();
            }
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Coefficient of `x^i y^j`; zero outside the stored triangle.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        if i + j <= self.cap {
            self.coeffs[index(i, j)].clone()
        } else {
            BigInt::zero()
        }
    }

    /// Stored entries as `(i, j, c)`, ordered by total degree then `i`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        (0..=self.cap).flat_map(move |s| (0..=s).map(move |i| (i, s - i, &self.coeffs[row(s) + i])))
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.coeffs.iter().any(Signed::is_negative)
    }

    /// `c[i][j] == c[j][i]` for every stored entry.
    pub fn is_swap_symmetric(&self) -> bool {
        self.terms().all(|(i, j, c)| *c == self.coeffs[index(j, i)])
    }

    /// Fails unless every coefficient of total degree above `degree` vanishes.
    pub fn assert_polynomial(&self, degree: usize) -> Result<()> {
        match self
            .terms()
            .filter(|(_, _, c)| !c.is_zero())
            .map(|(i, j, _)| i + j)
            .max()
        {
            Some(found) if found > degree => Err(Error::NotPolynomial { degree, found }),
            _ => Ok(()),
        }
    }

    /// The square array `c[i][j]` for `0 <= i, j <= n`; entries outside the
    /// stored triangle read as zero.
    pub fn to_matrix(&self, n: usize) -> Vec<Vec<BigInt>> {
        (0..=n).map(|i| (0..=n).map(|j| self.coeff(i, j)).collect()).collect()
    }

    pub fn truncate(&self, cap: usize) -> Result<Self> {
        if cap > self.cap {
            return Err(Error::CapTooLarge {
                requested: cap,
                available: self.cap,
            });
        }
        Ok(BiSeries {
            cap,
            coeffs: self.coeffs[..row(cap + 1)].to_vec(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        BiSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact product truncated at total degree `cap`.
    pub fn mul(&self, rhs: &Self, cap: usize) -> Result<Self> {
        let available = self.cap.min(rhs.cap);
        if cap > available {
            return Err(Error::CapTooLarge {
                requested: cap,
                available,
            });
        }
        let len = row(cap + 1);
        let a = &self.coeffs[..len];
        let b = &rhs.coeffs[..len];
        let nonzero = |v: &[BigInt]| v.iter().filter(|c| !c.is_zero()).count();
        let terms = nonzero(a).min(nonzero(b));
        if terms == 0 {
            return Ok(Self::zero(cap));
        }
        if kernel::fits_i128(kernel::max_bits(a), kernel::max_bits(b), terms) {
            let a = kernel::to_i128(a);
            let b = kernel::to_i128(b);
            let mut acc = vec![0i128; len];
            for s1 in 0..=cap {
                for i1 in 0..=s1 {
                    let x = a[row(s1) + i1];
                    if x == 0 {
                        continue;
                    }
                    for s2 in 0..=cap - s1 {
                        let dst = row(s1 + s2) + i1;
                        let src = &b[row(s2)..row(s2) + s2 + 1];
                        for (o, &y) in acc[dst..dst + s2 + 1].iter_mut().zip(src) {
                            *o += x * y;
                        }
                    }
                }
            }
            return Ok(BiSeries {
                cap,
                coeffs: kernel::from_i128(acc),
            });
        }
        let mut out = kernel::zeros(len);
        for s1 in 0..=cap {
            for i1 in 0..=s1 {
                let x = &a[row(s1) + i1];
                if x.is_zero() {
                    continue;
                }
                for s2 in 0..=cap - s1 {
                    let dst = row(s1 + s2) + i1;
                    let src = &b[row(s2)..row(s2) + s2 + 1];
                    for (o, y) in out[dst..dst + s2 + 1].iter_mut().zip(src) {
                        if !y.is_zero() {
                            *o += x * y;
                        }
                    }
                }
            }
        }
        Ok(BiSeries { cap, coeffs: out })
    }

    /// `self * (1 - x^a y^b)^m` truncated at total degree `cap`.
    pub fn geom_factor(&self, (a, b): (usize, usize), m: i64, cap: usize) -> Result<Self> {
        if a + b == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut out = self.truncate(cap)?;
        let step = a + b;
        let c = &mut out.coeffs;
        // Entry (i, j) pairs with (i - a, j - b), which sits in an earlier row.
        let apply = |c: &mut Vec<BigInt>, s: usize, add: bool| {
            for i in a..=s - b {
                let dst = row(s) + i;
                let src = row(s - step) + (i - a);
                let (lo, hi) = c.split_at_mut(dst);
                if add {
                    hi[0] += &lo[src];
                } else {
                    hi[0] -= &lo[src];
                }
            }
        };
        if m >= 0 {
            for _ in 0..m {
                for s in (step..=cap).rev() {
                    apply(c, s, false);
                }
            }
        } else {
            for _ in 0..m.unsigned_abs() {
                for s in step..=cap {
                    apply(c, s, true);
                }
            }
        }
        Ok(out)
    }

    /// `(1 + x^a y^b)^e` truncated at total degree `cap`.
    pub fn pow_binom((a, b): (usize, usize), e: u32, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        for k in 0..=e as usize {
            if k * (a + b) > cap {
                break;
            }
            out.coeffs[index(k * a, k * b)] += binomial(BigInt::from(e), BigInt::from(k));
        }
        out
    }

    /// Collapses to one variable. The result keeps the same cap; for
    /// [`Specialization::T1`] the coefficient of `t^i` sums `c[i][j]` over the
    /// stored `j` only, so it is complete only where the caller's cap covers
    /// every contributing `j`.
    pub fn specialize(&self, mode: Specialization) -> UniSeries {
        let mut out = kernel::zeros(self.cap + 1);
        for (i, j, c) in self.terms() {
            match mode {
                Specialization::TT => out[i + j] += c,
                Specialization::T1 => out[i] += c,
            }
        }
        UniSeries::from_vec(out)
    }

    /// `sum c[i][j] x^i y^j` at the given points.
    pub fn eval_at(&self, x: EvalPoint, y: EvalPoint) -> BigInt {
        let sign = |p: EvalPoint, k: usize| matches!(p, EvalPoint::MinusOne) && k % 2 == 1;
        self.terms().fold(
            BigInt::zero(),
            |acc, (i, j, c)| {
                if sign(x, i) != sign(y, j) {
                    acc - c
                } else {
                    acc + c
                }
            },
        )
    }
}

impl TruncatedSeries for BiSeries {
    type Exponent = (usize, usize);

    fn one(cap: usize) -> Self {
        BiSeries::one(cap)
    }

    fn cap(&self) -> usize {
        self.cap
    }

    fn exponent_degree((a, b): (usize, usize)) -> usize {
        a + b
    }

    fn scale_exponent((a, b): (usize, usize), k: usize) -> (usize, usize) {
        (a * k, b * k)
    }

    fn mul(&self, rhs: &Self, cap: usize) -> Result<Self> {
        BiSeries::mul(self, rhs, cap)
    }

    fn truncate(&self, cap: usize) -> Result<Self> {
        BiSeries::truncate(self, cap)
    }

    fn geom_factor(&self, e: (usize, usize), m: i64, cap: usize) -> Result<Self> {
        BiSeries::geom_factor(self, e, m, cap)
    }

    fn sub_shifted(&mut self, rhs: &Self, (a, b): (usize, usize)) {
        let step = a + b;
        for s in step..=self.cap.min(rhs.cap + step) {
            for i in a..=s - b {
                let src = row(s - step) + (i - a);
                self.coeffs[row(s) + i] -= &rhs.coeffs[src];
            }
        }
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (var, k) in [('x', i), ('y', j)] {
                match k {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{k}")?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(deg {})", self.cap + 1)
    }
}
