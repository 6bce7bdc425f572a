//! Coefficient-level multiply-accumulate with a native fast path.
//!
//! When the operands are small enough that every accumulated sum provably
//! fits in an `i128`, products are formed natively and converted back once.
//! Otherwise the slow path works on `BigInt` directly. Both paths are exact.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

pub(crate) fn max_bits(coeffs: &[BigInt]) -> u64 {
    coeffs.iter().map(BigInt::bits).max().unwrap_or(0)
}

fn ceil_log2(n: usize) -> u64 {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as u64
}

/// Whether `terms` products of operands with the given bit widths can be
/// summed in an `i128` without overflow.
pub(crate) fn fits_i128(bits_a: u64, bits_b: u64, terms: usize) -> bool {
    bits_a + bits_b + ceil_log2(terms.max(1)) <= 126
}

pub(crate) fn to_i128(coeffs: &[BigInt]) -> Vec<i128> {
    coeffs
        .iter()
        .map(|c| c.to_i128().expect("fast path only taken for small coefficients"))
        .collect()
}

pub(crate) fn from_i128(acc: Vec<i128>) -> Vec<BigInt> {
    acc.into_iter().map(BigInt::from).collect()
}

pub(crate) fn zeros(len: usize) -> Vec<BigInt> {
    vec![BigInt::zero(); len]
}
