//! Integer helpers. All semigroup values are `u64` restricted to the
//! non-negative half of `i64`, so that the classical Frobenius number
//! `C = F - 1` (which is `-1` for the full semigroup) is always representable.

use crate::error::{Error, Result};

/// Largest value any generator or semigroup element may take.
pub const MAX_VALUE: u64 = i64::MAX as u64;

/// Euclid. `gcd(x, 0) == x`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Greatest common divisor of a non-empty list of positive integers.
pub fn gcd_all(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::InvalidInput("empty list"));
    }
    if values.contains(&0) {
        return Err(Error::InvalidInput("values must be positive"));
    }
    Ok(values.iter().fold(0, |acc, &v| gcd(acc, v)))
}

/// Inverse of `a` modulo `m` for `gcd(a, m) == 1`, `m >= 1`. Returns `0` when `m == 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (i128::from(a % m), i128::from(m));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(i128::from(m)) as u64)
}

pub(crate) fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b)
        .filter(|&v| v <= MAX_VALUE)
        .ok_or(Error::Overflow)
}

pub(crate) fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b)
        .filter(|&v| v <= MAX_VALUE)
        .ok_or(Error::Overflow)
}

pub(crate) fn to_signed(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}
