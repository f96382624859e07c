//! Exact coefficient arithmetic: a checked `u128` fast path and `BigUint`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Nonnegative integer type that engines accumulate counts in. Operations
/// return `None` on overflow so callers can restart in arbitrary precision.
pub(crate) trait Coeff: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
}

impl Coeff for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        u128::checked_add(*self, *other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        u128::checked_mul(*self, *other)
    }
}

impl Coeff for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

/// `acc[k + shift] += src[k]`, growing `acc` as needed.
pub(crate) fn add_shifted<C: Coeff>(acc: &mut Vec<C>, src: &[C], shift: usize) -> Result<(), Overflow> {
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, C::zero());
    }
    for (k, c) in src.iter().enumerate() {
        acc[k + shift] = acc[k + shift].checked_add(c).ok_or(Overflow)?;
    }
    Ok(())
}

/// Coefficient convolution, i.e. the product of two count sequences.
pub(crate) fn convolve<C: Coeff>(a: &[C], b: &[C]) -> Result<Vec<C>, Overflow> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = x.checked_mul(y).ok_or(Overflow)?;
            out[i + j] = out[i + j].checked_add(&t).ok_or(Overflow)?;
        }
    }
    Ok(out)
}

/// Run `f` in `u128`, falling back to `BigUint` if any step overflows.
pub(crate) fn with_promotion<E>(
    fast: impl FnOnce() -> Result<Result<Vec<u128>, Overflow>, E>,
    slow: impl FnOnce() -> Result<Result<Vec<BigUint>, Overflow>, E>,
) -> Result<Vec<BigUint>, E> {
    match fast()? {
        Ok(v) => Ok(v.into_iter().map(BigUint::from).collect()),
        Err(Overflow) => Ok(slow()?.expect("arbitrary precision cannot overflow")),
    }
}

/// Nearest `f64`, saturating to infinity above the exponent range.
pub fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// `log2(x)` for `x > 0`, valid far beyond the `f64` range.
pub fn big_log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return big_to_f64(x).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64).log2() + shift as f64
}
