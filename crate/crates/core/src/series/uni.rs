use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};

use super::kernel;
use super::{EvalPoint, TruncatedSeries};
use crate::error::{Error, Result};

/// A power series in `t` truncated at degree `cap` (inclusive).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniSeries {
    coeffs: Vec<BigInt>,
}

impl UniSeries {
    pub fn zero(cap: usize) -> Self {
        UniSeries {
            coeffs: kernel::zeros(cap + 1),
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::monomial(BigInt::one(), 0, cap)
    }

    /// `coeff * t^degree`, or zero if `degree > cap`.
    pub fn monomial(coeff: BigInt, degree: usize, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if degree <= cap {
            s.coeffs[degree] = coeff;
        }
        s
    }

    /// Builds a series from coefficients listed by degree. Missing degrees up
    /// to `cap` are zero; listed degrees above `cap` are dropped.
    pub fn from_coeffs<I, C>(coeffs: I, cap: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(cap);
        for (c, slot) in coeffs.into_iter().zip(s.coeffs.iter_mut()) {
            *slot = c.into();
        }
        s
    }

    /// A polynomial whose cap is its own length minus one.
    pub fn from_vec(coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        UniSeries { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    /// Highest degree with a non-zero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.coeffs.iter().any(Signed::is_negative)
    }

    /// Coefficients up to the true degree (empty for the zero series).
    pub fn trimmed(&self) -> &[BigInt] {
        match self.degree() {
            Some(d) => &self.coeffs[..=d],
            None => &[],
        }
    }

    pub fn truncate(&self, cap: usize) -> Result<Self> {
        if cap > self.cap() {
            return Err(Error::CapTooLarge {
                requested: cap,
                available: self.cap(),
            });
        }
        Ok(UniSeries {
            coeffs: self.coeffs[..=cap].to_vec(),
        })
    }

    /// Same coefficients, padded with zeros or cut to the new cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(cap + 1, BigInt::zero());
        UniSeries { coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        UniSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact product truncated at `cap`.
    pub fn mul(&self, rhs: &Self, cap: usize) -> Result<Self> {
        let available = self.cap().min(rhs.cap());
        if cap > available {
            return Err(Error::CapTooLarge {
                requested: cap,
                available,
            });
        }
        let a = &self.coeffs[..=cap];
        let b = &rhs.coeffs[..=cap];
        let a_hi = a.iter().rposition(|c| !c.is_zero());
        let b_hi = b.iter().rposition(|c| !c.is_zero());
        let (Some(a_hi), Some(b_hi)) = (a_hi, b_hi) else {
            return Ok(Self::zero(cap));
        };
        let terms = (a_hi + 1).min(b_hi + 1);
        if kernel::fits_i128(kernel::max_bits(a), kernel::max_bits(b), terms) {
            let a = kernel::to_i128(&a[..=a_hi]);
            let b = kernel::to_i128(&b[..=b_hi]);
            let mut acc = vec![0i128; cap + 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().take(cap + 1 - i).enumerate() {
                    acc[i + j] += x * y;
                }
            }
            return Ok(UniSeries {
                coeffs: kernel::from_i128(acc),
            });
        }
        let mut out = kernel::zeros(cap + 1);
        for (i, x) in a[..=a_hi].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[..=b_hi].iter().take(cap + 1 - i).enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Ok(UniSeries { coeffs: out })
    }

    /// Multiplication by `t^k`, truncated at the current cap.
    pub fn shift(&self, k: usize) -> Self {
        let cap = self.cap();
        let mut out = Self::zero(cap);
        if k <= cap {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=cap - k]);
        }
        out
    }

    /// `self * (1 - t^k)^m` truncated at `cap`. Negative `m` multiplies by
    /// the expansion of the geometric series `|m|` times.
    pub fn geom_factor(&self, k: usize, m: i64, cap: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut out = self.truncate(cap)?;
        let c = &mut out.coeffs;
        if m >= 0 {
            for _ in 0..m {
                for i in (k..=cap).rev() {
                    let (lo, hi) = c.split_at_mut(i);
                    hi[0] -= &lo[i - k];
                }
            }
        } else {
            for _ in 0..m.unsigned_abs() {
                for i in k..=cap {
                    let (lo, hi) = c.split_at_mut(i);
                    hi[0] += &lo[i - k];
                }
            }
        }
        Ok(out)
    }

    /// `(1 + t^k)^e` truncated at `cap`.
    pub fn pow_binom(k: usize, e: u32, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        for j in 0..=e as usize {
            let deg = j * k;
            if deg > cap {
                break;
            }
            out.coeffs[deg] += binomial(BigInt::from(e), BigInt::from(j));
        }
        out
    }

    /// `sum c_i s^i` over every stored coefficient.
    pub fn eval_at(&self, s: EvalPoint) -> BigInt {
        match s {
            EvalPoint::One => self.coeffs.iter().sum(),
            EvalPoint::MinusOne => {
                self.coeffs
                    .iter()
                    .enumerate()
                    .fold(BigInt::zero(), |acc, (i, c)| if i % 2 == 0 { acc + c } else { acc - c })
            }
        }
    }

    /// Fails unless every coefficient above `degree` vanishes.
    pub fn assert_polynomial(&self, degree: usize) -> Result<()> {
        match self.degree() {
            Some(found) if found > degree => Err(Error::NotPolynomial { degree, found }),
            _ => Ok(()),
        }
    }

    /// [`eval_at`](Self::eval_at) after checking the series is a polynomial
    /// of degree at most `degree` within its cap.
    pub fn eval_polynomial(&self, s: EvalPoint, degree: usize) -> Result<BigInt> {
        self.assert_polynomial(degree)?;
        Ok(self.eval_at(s))
    }

    /// `c[i] == c[n - i]` for `i <= n` and `c[i] == 0` above `n`.
    pub fn palindrome_check(&self, n: usize) -> bool {
        if self.cap() < n {
            return false;
        }
        let c = &self.coeffs;
        c[n + 1..].iter().all(Zero::is_zero) && (0..=n / 2).all(|i| c[i] == c[n - i])
    }

    /// Exact polynomial division. Both operands are read as polynomials
    /// (trailing zeros ignored); the quotient's cap is its degree.
    pub fn div_exact(&self, divisor: &UniSeries) -> Result<Self> {
        let inexact = || Error::InexactDivision {
            divisor: divisor.to_string(),
        };
        let den = divisor.trimmed();
        let Some(lead) = den.last() else {
            return Err(inexact());
        };
        let mut rem: Vec<BigInt> = self.trimmed().to_vec();
        if rem.is_empty() {
            return Ok(Self::zero(0));
        }
        if rem.len() < den.len() {
            return Err(inexact());
        }
        let qlen = rem.len() - den.len() + 1;
        let mut quot = kernel::zeros(qlen);
        for qi in (0..qlen).rev() {
            let top = &rem[qi + den.len() - 1];
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            if !q.is_zero() {
                for (j, d) in den.iter().enumerate() {
                    rem[qi + j] -= &q * d;
                }
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact());
        }
        Ok(UniSeries { coeffs: quot })
    }

    /// Substitutes `t -> t^k`, truncated at `cap`.
    pub fn substitute_power(&self, k: usize, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k <= cap {
                out.coeffs[i * k] += c;
            }
        }
        out
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let cap = self.cap().min(rhs.cap());
        UniSeries {
            coeffs: (0..=cap).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect(),
        }
    }
}

impl TruncatedSeries for UniSeries {
    type Exponent = usize;

    fn one(cap: usize) -> Self {
        UniSeries::one(cap)
    }

    fn cap(&self) -> usize {
        UniSeries::cap(self)
    }

    fn exponent_degree(e: usize) -> usize {
        e
    }

    fn scale_exponent(e: usize, k: usize) -> usize {
        e * k
    }

    fn mul(&self, rhs: &Self, cap: usize) -> Result<Self> {
        UniSeries::mul(self, rhs, cap)
    }

    fn truncate(&self, cap: usize) -> Result<Self> {
        UniSeries::truncate(self, cap)
    }

    fn geom_factor(&self, e: usize, m: i64, cap: usize) -> Result<Self> {
        UniSeries::geom_factor(self, e, m, cap)
    }

    fn sub_shifted(&mut self, rhs: &Self, e: usize) {
        let cap = self.cap();
        for i in e..=cap.min(rhs.cap() + e) {
            self.coeffs[i] -= &rhs.coeffs[i - e];
        }
    }
}

/// Coefficientwise sum; the result's cap is the smaller of the two.
impl Add for &UniSeries {
    type Output = UniSeries;

    fn add(self, rhs: &UniSeries) -> UniSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

/// Coefficientwise difference; the result's cap is the smaller of the two.
impl Sub for &UniSeries {
    type Output = UniSeries;

    fn sub(self, rhs: &UniSeries) -> UniSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &UniSeries {
    type Output = UniSeries;

    fn neg(self) -> UniSeries {
        UniSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.cap() + 1)
    }
}

impl fmt::Debug for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], cap: usize) -> UniSeries {
        UniSeries::from_coeffs(c.iter().copied(), cap)
    }

    #[test]
    fn square_of_one_plus_t() {
        let a = s(&[1, 1], 4);
        assert_eq!(a.mul(&a, 4).unwrap(), s(&[1, 2, 1], 4));
    }

    #[test]
    fn telescoping_product() {
        let a = s(&[1, 1, 1, 1], 3);
        let b = s(&[1, -1], 3);
        assert_eq!(a.mul(&b, 2).unwrap(), s(&[1], 2));
        assert_eq!(a.mul(&b, 3).unwrap(), s(&[1, 0, 0, 0], 3));
    }

    #[test]
    fn mul_rejects_cap_above_operands() {
        let a = s(&[1, 1], 2);
        let b = s(&[1, 1], 5);
        assert_eq!(
            a.mul(&b, 3),
            Err(Error::CapTooLarge {
                requested: 3,
                available: 2
            })
        );
    }

    #[test]
    fn mul_big_coefficients_takes_slow_path() {
        let big: BigInt = BigInt::from(1u8) << 100;
        let a = UniSeries::from_coeffs([big.clone(), BigInt::one()], 2);
        let sq = a.mul(&a, 2).unwrap();
        assert_eq!(sq.coeff(0), &big * &big);
        assert_eq!(sq.coeff(1), &big * 2);
        assert_eq!(sq.coeff(2), BigInt::one());
    }

    #[test]
    fn geometric_series() {
        assert_eq!(
            UniSeries::one(5).geom_factor(2, -1, 5).unwrap(),
            s(&[1, 0, 1, 0, 1, 0], 5)
        );
        let a = UniSeries::pow_binom(1, 4, 4);
        assert_eq!(a.geom_factor(2, -1, 4).unwrap(), s(&[1, 4, 7, 8, 8], 4));
    }

    #[test]
    fn geom_factor_round_trip_and_zero_exponent() {
        let a = s(&[3, -1, 4, 1, -5, 9], 5);
        let there = a.geom_factor(3, -2, 5).unwrap();
        assert_eq!(there.geom_factor(3, 2, 5).unwrap(), a);
        assert_eq!(a.geom_factor(0, 1, 5), Err(Error::ZeroExponent));
    }

    #[test]
    fn binomial_rows() {
        assert_eq!(UniSeries::pow_binom(1, 0, 3), s(&[1], 3));
        assert_eq!(UniSeries::pow_binom(1, 4, 6), s(&[1, 4, 6, 4, 1], 6));
        assert_eq!(UniSeries::pow_binom(3, 2, 5), s(&[1, 0, 0, 2], 5));
    }

    #[test]
    fn evaluation() {
        assert_eq!(s(&[1, 2, 1], 2).eval_at(EvalPoint::One), BigInt::from(4));
        for g in 1..6 {
            let p = UniSeries::pow_binom(1, g, 8);
            assert!(p.eval_at(EvalPoint::MinusOne).is_zero());
        }
        assert_eq!(s(&[2, 20, 2], 2).eval_at(EvalPoint::MinusOne), BigInt::from(-16));
    }

    #[test]
    fn polynomial_assertion() {
        let p = s(&[1, 2, 1, 0, 0], 4);
        assert_eq!(p.eval_polynomial(EvalPoint::One, 2), Ok(BigInt::from(4)));
        let q = s(&[1, 2, 1, 0, 3], 4);
        assert_eq!(
            q.eval_polynomial(EvalPoint::One, 2),
            Err(Error::NotPolynomial { degree: 2, found: 4 })
        );
    }

    #[test]
    fn palindromes() {
        assert!(s(&[1, 2, 1], 2).palindrome_check(2));
        assert!(!s(&[1, 1], 2).palindrome_check(2));
        assert!(!s(&[1, 2, 1, 0, 1], 4).palindrome_check(2));
        assert!(!s(&[1, 2, 1], 2).palindrome_check(3));
    }

    #[test]
    fn exact_division() {
        let p = s(&[4, 20, 40, 40, 20, 4], 7);
        let d = UniSeries::pow_binom(1, 2, 2).scale(&BigInt::from(4));
        assert_eq!(
            p.div_exact(&d).unwrap(),
            UniSeries::from_vec(vec![1.into(), 3.into(), 3.into(), 1.into()])
        );
        assert!(matches!(
            s(&[1, 1, 1], 2).div_exact(&s(&[1, 1], 1)),
            Err(Error::InexactDivision { .. })
        ));
        assert!(matches!(
            s(&[2, 2], 1).div_exact(&s(&[4, 4], 1)),
            Err(Error::InexactDivision { .. })
        ));
    }

    #[test]
    fn shift_and_sub_shifted() {
        let a = s(&[1, 1], 3);
        assert_eq!(a.shift(2), s(&[0, 0, 1, 1], 3));
        assert_eq!(a.shift(3), s(&[0, 0, 0, 1], 3));
        let mut b = s(&[5, 5, 5, 5], 3);
        b.sub_shifted(&a, 1);
        assert_eq!(b, s(&[5, 4, 4, 5], 3));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -2, 0, 3], 3).to_string(), "1 - 2t + 3t^3 + O(t^4)");
        assert_eq!(UniSeries::zero(1).to_string(), "0 + O(t^2)");
    }
}
