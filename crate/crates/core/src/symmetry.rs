//! Symmetric semigroups: the reflection definition, the three-generator
//! membership criterion, and the closed form for F it yields.
//!
//! For a coprime triple, S is symmetric iff for some `i` the generator `a_i`
//! lies in `S(a_j / d, a_k / d)` with `d = gcd(a_j, a_k)`. When that holds
//! with `i = 3` and `b_l = a_l / d` (l = 1, 2),
//! `F(a_1, a_2, a_3) = d F(b_1, b_2) + F(d, a_3)`; otherwise that expression
//! strictly exceeds F for every choice of `i`.

use crate::apery::AperyTable;
use crate::arith::{self, gcd};
use crate::error::{Error, Result};
use crate::generators::GeneratorTuple;
use crate::semigroup::{self, membership_two_gen, sylvester_frobenius};

/// Lemma-criterion search order, so that `i = 3` is preferred when available.
const WITNESS_ORDER: [usize; 3] = [3, 1, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub by_definition: bool,
    pub by_lemma3: bool,
    /// 1-based index of the generator lying in the reduced pair semigroup.
    pub witness_index: Option<usize>,
    /// `gcd` of the pair used by the witness (pair `(1, 2)` when there is none).
    pub d_pair: u64,
    pub reduced_pair: (u64, u64),
    /// `pairings[i - 1]` is whether `a_i ∈ S(a_j / d_jk, a_k / d_jk)`.
    pub pairings: [bool; 3],
}

/// The other two 1-based indices, in increasing order.
fn complement(i: usize) -> (usize, usize) {
    match i {
        1 => (2, 3),
        2 => (1, 3),
        3 => (1, 2),
        _ => unreachable!("index out of range"),
    }
}

/// `(d_jk, (a_j / d_jk, a_k / d_jk))` for the pair complementary to `i`.
fn reduce_pair(a: &[u64; 3], i: usize) -> (u64, (u64, u64)) {
    let (j, k) = complement(i);
    let (x, y) = (a[j - 1], a[k - 1]);
    let d = gcd(x, y);
    (d, (x / d, y / d))
}

fn check_triple(a: &[u64; 3]) -> Result<()> {
    if a.contains(&0) {
        return Err(Error::InvalidInput("generators must be positive"));
    }
    if a.iter().any(|&v| v > arith::MAX_VALUE) {
        return Err(Error::Overflow);
    }
    if gcd(gcd(a[0], a[1]), a[2]) != 1 {
        return Err(Error::NotCoprime);
    }
    Ok(())
}

/// The three memberships `a_i ∈ S(a_j / d_jk, a_k / d_jk)`, i = 1, 2, 3.
pub fn lemma3_pairings(a: [u64; 3]) -> Result<[bool; 3]> {
    check_triple(&a)?;
    let mut out = [false; 3];
    for (i, slot) in out.iter_mut().enumerate() {
        let (_, (b1, b2)) = reduce_pair(&a, i + 1);
        *slot = membership_two_gen(a[i], b1, b2)?;
    }
    Ok(out)
}

/// Fast symmetry test for a coprime triple.
pub fn lemma3_holds(a: [u64; 3]) -> Result<bool> {
    Ok(lemma3_pairings(a)?.contains(&true))
}

pub(crate) fn table_is_symmetric(table: &AperyTable) -> bool {
    let Some(c) = table.largest_gap() else {
        return true;
    };
    semigroup::table_gaps(table)
        .into_iter()
        .all(|s| table.contains(c - s))
}

/// Every gap `s` has `C - s ∈ S`.
pub fn is_symmetric_by_definition(gens: &GeneratorTuple) -> Result<bool> {
    let table = crate::apery::apery_table(gens)?;
    Ok(table_is_symmetric(&table))
}

/// Evaluates the membership criterion on all three pairings and, for
/// comparison, the definition on the same triple.
pub fn is_symmetric_lemma3(a1: u64, a2: u64, a3: u64) -> Result<SymmetryVerdict> {
    let a = [a1, a2, a3];
    let pairings = lemma3_pairings(a)?;
    let witness_index = WITNESS_ORDER.into_iter().find(|&i| pairings[i - 1]);
    let (d_pair, reduced_pair) = reduce_pair(&a, witness_index.unwrap_or(3));
    let by_definition = is_symmetric_by_definition(&GeneratorTuple::new(&a)?)?;
    Ok(SymmetryVerdict {
        by_definition,
        by_lemma3: witness_index.is_some(),
        witness_index,
        d_pair,
        reduced_pair,
        pairings,
    })
}

/// `d F(a_j/d, a_k/d) + F(d, a_i)` with `d = gcd(a_j, a_k)`, for any `i`.
/// Exact F when pairing `i` holds, a strict upper bound otherwise.
pub fn closed_form(a: [u64; 3], i: usize) -> Result<u64> {
    if !(1..=3).contains(&i) {
        return Err(Error::InvalidInput("pairing index must be 1, 2 or 3"));
    }
    check_triple(&a)?;
    let (d, (b1, b2)) = reduce_pair(&a, i);
    let pair_part = arith::mul(d, sylvester_frobenius(b1, b2)?)?;
    arith::add(pair_part, sylvester_frobenius(d, a[i - 1])?)
}

/// F of a symmetric triple from two Sylvester terms, after relabeling so the
/// criterion witness sits in the third position.
pub fn theorem2_frobenius(a1: u64, a2: u64, a3: u64) -> Result<u64> {
    let a = [a1, a2, a3];
    let pairings = lemma3_pairings(a)?;
    let i = WITNESS_ORDER
        .into_iter()
        .find(|&i| pairings[i - 1])
        .ok_or(Error::NotSymmetric)?;
    closed_form(a, i)
}

/// [`theorem2_frobenius`] through a chosen witness `i` (1-based).
pub fn theorem2_frobenius_via(a: [u64; 3], i: usize) -> Result<u64> {
    if !(1..=3).contains(&i) {
        return Err(Error::InvalidInput("pairing index must be 1, 2 or 3"));
    }
    if !lemma3_pairings(a)?[i - 1] {
        return Err(Error::NotSymmetric);
    }
    closed_form(a, i)
}

/// For a non-symmetric coprime triple: whether `F < closed_form(a, i)` for all three `i`.
pub fn notice_inequality_check(a1: u64, a2: u64, a3: u64) -> Result<bool> {
    let a = [a1, a2, a3];
    check_triple(&a)?;
    let summary = semigroup::frobenius_number(&GeneratorTuple::new(&a)?)?;
    if summary.symmetric {
        return Err(Error::Symmetric);
    }
    for i in 1..=3 {
        if summary.f >= closed_form(a, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}
