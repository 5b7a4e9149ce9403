//! Frobenius numbers, gaps and two-generator membership.
//!
//! Convention: `F` is the conductor, the least `s` with every `k >= s` in S.
//! The classical Frobenius number (largest non-element) is `C = F - 1`.

use alloc::vec::Vec;

use crate::apery::{apery_table, AperyTable};
use crate::arith::{self, gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::generators::{GeneratorTuple, RepresentationWitness};
use crate::symmetry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemigroupSummary {
    /// Conductor.
    pub f: u64,
    /// Largest gap, `F - 1`; `-1` when S is all of Z+.
    pub c: i64,
    /// `F - 1 + sum(a_i)`.
    pub g: i64,
    pub genus: u64,
    pub symmetric: bool,
}

impl SemigroupSummary {
    pub(crate) fn from_parts(f: u64, genus: u64, symmetric: bool, sum: u64) -> Result<Self> {
        let c = arith::to_signed(f)? - 1;
        let g = c.checked_add(arith::to_signed(sum)?).ok_or(Error::Overflow)?;
        Ok(Self { f, c, g, genus, symmetric })
    }

    /// The largest-gap convention, i.e. `C`.
    pub fn classic_frobenius(&self) -> i64 {
        self.c
    }

    /// Checks the internal identities between the fields for generators summing to `sum`.
    pub fn is_consistent(&self, sum: u64) -> bool {
        let f = self.f as i64;
        self.c == f - 1
            && self.g == f - 1 + sum as i64
            && self.genus <= self.f
            && (!self.symmetric || 2 * self.genus == self.f)
    }
}

/// `(a1 - 1)(a2 - 1)` for a coprime pair.
pub fn sylvester_frobenius(a1: u64, a2: u64) -> Result<u64> {
    if a1 == 0 || a2 == 0 {
        return Err(Error::InvalidInput("generators must be positive"));
    }
    if gcd(a1, a2) != 1 {
        return Err(Error::NotCoprime);
    }
    arith::mul(a1 - 1, a2 - 1)
}

/// Whether `s = x1*b1 + x2*b2` has a non-negative solution. O(log b).
pub fn membership_two_gen(s: u64, b1: u64, b2: u64) -> Result<bool> {
    Ok(representation_two_gen(s, b1, b2)?.is_some())
}

/// Like [`membership_two_gen`], returning coefficients ordered as `(b1, b2)`.
///
/// With `b1 <= b2`, the smallest `x2 >= 0` satisfying `x2*b2 ≡ s (mod b1)` is
/// `s * b2^{-1} mod b1`; `s` is representable iff that `x2*b2` does not exceed `s`.
pub fn representation_two_gen(s: u64, b1: u64, b2: u64) -> Result<Option<RepresentationWitness>> {
    if b1 == 0 || b2 == 0 {
        return Err(Error::InvalidInput("generators must be positive"));
    }
    if gcd(b1, b2) != 1 {
        return Err(Error::NotCoprime);
    }
    let swapped = b1 > b2;
    let (small, large) = if swapped { (b2, b1) } else { (b1, b2) };
    let inv = mod_inverse(large % small, small).ok_or(Error::NotCoprime)?;
    let x_large = ((u128::from(s % small) * u128::from(inv)) % u128::from(small)) as u64;
    let used = u128::from(x_large) * u128::from(large);
    if used > u128::from(s) {
        return Ok(None);
    }
    let x_small = (s - used as u64) / small;
    let coefficients = if swapped {
        alloc::vec![x_large, x_small]
    } else {
        alloc::vec![x_small, x_large]
    };
    Ok(Some(RepresentationWitness { coefficients }))
}

/// F, C, G, genus and the symmetry flag, read off the Apéry table.
pub fn frobenius_number(gens: &GeneratorTuple) -> Result<SemigroupSummary> {
    let table = apery_table(gens)?;
    summarize(&table, gens.sum()?)
}

pub(crate) fn summarize(table: &AperyTable, sum: u64) -> Result<SemigroupSummary> {
    let f = match table.largest_gap() {
        Some(c) => c + 1,
        None => 0,
    };
    let symmetric = symmetry::table_is_symmetric(table);
    SemigroupSummary::from_parts(f, table.genus(), symmetric, sum)
}

/// All gaps in increasing order.
pub fn gaps(gens: &GeneratorTuple) -> Result<Vec<u64>> {
    let table = apery_table(gens)?;
    Ok(table_gaps(&table))
}

pub(crate) fn table_gaps(table: &AperyTable) -> Vec<u64> {
    let base = table.base();
    let mut out: Vec<u64> = table
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(residue, &w)| (residue as u64..w).step_by(base as usize))
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(values: &[u64]) -> SemigroupSummary {
        frobenius_number(&GeneratorTuple::new(values).unwrap()).unwrap()
    }

    fn gap_list(values: &[u64]) -> Vec<u64> {
        gaps(&GeneratorTuple::new(values).unwrap()).unwrap()
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester_frobenius(2, 3), Ok(2));
        assert_eq!(sylvester_frobenius(3, 5), Ok(8));
        for k in 1..50 {
            assert_eq!(sylvester_frobenius(1, k), Ok(0));
        }
        assert_eq!(sylvester_frobenius(4, 6), Err(Error::NotCoprime));
    }

    #[test]
    fn two_generator_membership() {
        assert_eq!(membership_two_gen(7, 3, 5), Ok(false));
        let w = representation_two_gen(8, 3, 5).unwrap().unwrap();
        assert_eq!(w.coefficients, [1, 1]);
        assert_eq!(representation_two_gen(0, 3, 5).unwrap().unwrap().coefficients, [0, 0]);
        assert_eq!(membership_two_gen(12345, 1, 77), Ok(true));
        assert_eq!(membership_two_gen(3, 4, 6), Err(Error::NotCoprime));
        // argument order only changes the coefficient order
        let w = representation_two_gen(13, 5, 3).unwrap().unwrap();
        assert_eq!(w.evaluate(&[5, 3]), Ok(13));
    }

    #[test]
    fn two_generator_membership_matches_exhaustion() {
        for b1 in 1..15u64 {
            for b2 in 1..15u64 {
                if gcd(b1, b2) != 1 {
                    continue;
                }
                for s in 0..120u64 {
                    let brute = (0..=s / b1).any(|x| (s - x * b1) % b2 == 0);
                    assert_eq!(membership_two_gen(s, b1, b2), Ok(brute), "{s} in <{b1},{b2}>");
                }
            }
        }
    }

    #[test]
    fn summaries() {
        let s = summary(&[2, 3]);
        assert_eq!((s.f, s.c, s.g, s.genus), (2, 1, 6, 1));
        let s = summary(&[3, 5, 7]);
        assert_eq!((s.f, s.c, s.genus, s.symmetric), (5, 4, 3, false));
        let s = summary(&[4, 6, 5]);
        assert_eq!((s.f, s.c, s.g, s.genus, s.symmetric), (8, 7, 22, 4, true));
        let s = summary(&[1, 10]);
        assert_eq!((s.f, s.c, s.g, s.genus, s.symmetric), (0, -1, 10, 0, true));
        assert_eq!(s.classic_frobenius(), -1);
    }

    #[test]
    fn gap_lists() {
        assert_eq!(gap_list(&[2, 3]), [1]);
        assert_eq!(gap_list(&[3, 5, 7]), [1, 2, 4]);
        assert_eq!(gap_list(&[4, 6, 7]), [1, 2, 3, 5, 9]);
        assert!(gap_list(&[1, 7]).is_empty());
    }

    #[test]
    fn non_coprime_rejected() {
        let g = GeneratorTuple::new(&[4, 6]).unwrap();
        assert_eq!(frobenius_number(&g), Err(Error::NotCoprime));
        assert_eq!(gaps(&g), Err(Error::NotCoprime));
    }
}
