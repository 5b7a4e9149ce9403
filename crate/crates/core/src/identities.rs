//! Exhaustive verifiers for the exact identities satisfied by Frobenius numbers.
//!
//! Each per-tuple check recomputes both sides independently from the core
//! engine. [`run_exhaustive`] sweeps every coprime tuple up to a bound in
//! lexicographic order; callers that want parallelism can split the same
//! enumeration with [`tuples`] and [`check_tuple`] and merge with
//! [`VerificationReport::merge`].

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{self, gcd};
use crate::error::{Error, Result};
use crate::generators::GeneratorTuple;
use crate::semigroup::{frobenius_number, sylvester_frobenius};
use crate::sieve::sieve_oracle;
use crate::symmetry::{self, is_symmetric_lemma3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `gcd(a_1, .., a_{n-1}, a_n - 1)` divides F, for every choice of `a_n`.
    Theorem1,
    /// `G(a_1, a_2, a_3) = d_12 G(a_1/d_12, a_2/d_12, a_3)`.
    Johnson,
    /// `C(a) = d C(a_1/d, .., a_{n-1}/d, a_n) + (d - 1) a_n`, `d = gcd(a_1..a_{n-1})`.
    BrauerShockley,
    /// Closed form of F for symmetric triples, through every witness.
    Theorem2,
    /// Strict inequality of the closed form for non-symmetric triples.
    Notice,
    /// Membership criterion agrees with the reflection definition.
    Lemma3Equivalence,
    /// `F(a_1, a_2) = (a_1 - 1)(a_2 - 1)`.
    Sylvester,
    /// Apéry engine agrees with the sieve oracle on F, C, G, genus and symmetry.
    Oracle,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Theorem1,
        Identity::Johnson,
        Identity::BrauerShockley,
        Identity::Theorem2,
        Identity::Notice,
        Identity::Lemma3Equivalence,
        Identity::Sylvester,
        Identity::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Theorem1 => "theorem1",
            Identity::Johnson => "johnson",
            Identity::BrauerShockley => "brauer-shockley",
            Identity::Theorem2 => "theorem2",
            Identity::Notice => "notice",
            Identity::Lemma3Equivalence => "lemma3-equivalence",
            Identity::Sylvester => "sylvester",
            Identity::Oracle => "oracle",
        }
    }

    /// Tuple sizes swept by default.
    pub fn default_arity(self) -> Arity {
        match self {
            Identity::Theorem1 | Identity::Oracle => Arity::PairsAndTriples,
            Identity::Sylvester => Arity::Pairs,
            _ => Arity::Triples,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or(Error::InvalidInput("unknown identity"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Pairs,
    Triples,
    PairsAndTriples,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub range_bound: u64,
    pub tuples_checked: u64,
    /// Offending tuples, sorted.
    pub failures: Vec<Vec<u64>>,
}

impl VerificationReport {
    pub fn new(identity: Identity, range_bound: u64) -> Self {
        Self {
            identity,
            range_bound,
            tuples_checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, tuple: &[u64], outcome: Outcome) {
        match outcome {
            Outcome::Skipped => {}
            Outcome::Passed => self.tuples_checked += 1,
            Outcome::Failed => {
                self.tuples_checked += 1;
                self.failures.push(tuple.to_vec());
            }
        }
    }

    /// Associative merge; failures stay sorted.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.tuples_checked += other.tuples_checked;
        self.failures.extend(other.failures);
        self.failures.sort_unstable();
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed,
    /// The tuple is outside the identity's hypotheses (e.g. symmetric for `Notice`).
    Skipped,
}

fn gcd_except(values: &[u64], skip: usize) -> u64 {
    values
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != skip)
        .fold(0, |acc, (_, &v)| gcd(acc, v))
}

/// `d | F` with `d = gcd(others, a_t - 1)`, for every position `t`.
pub fn verify_theorem1(gens: &GeneratorTuple) -> Result<bool> {
    let f = frobenius_number(gens)?.f;
    let values = gens.values();
    Ok((0..values.len()).all(|t| {
        let d = gcd(gcd_except(values, t), values[t] - 1);
        f % d == 0
    }))
}

/// `C` of the tuple with the other generators divided by their gcd and `a_t` kept.
fn reduced_classic(values: &[u64], t: usize) -> Result<(u64, i64)> {
    let d = gcd_except(values, t);
    let mut reduced: Vec<u64> = values
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != t)
        .map(|(_, &v)| v / d)
        .collect();
    reduced.push(values[t]);
    let c = frobenius_number(&GeneratorTuple::new(&reduced)?)?.c;
    Ok((d, c))
}

/// Checks the reduction identity for `C`, and the expression for F it implies,
/// with every generator in turn playing `a_n`.
pub fn verify_brauer_shockley(gens: &GeneratorTuple) -> Result<bool> {
    let summary = frobenius_number(gens)?;
    let values = gens.values();
    for t in 0..values.len() {
        let (d, reduced_c) = reduced_classic(values, t)?;
        let d = arith::to_signed(d)?;
        let a_n = arith::to_signed(values[t])?;
        let c = d
            .checked_mul(reduced_c)
            .and_then(|v| v.checked_add((d - 1).checked_mul(a_n)?))
            .ok_or(Error::Overflow)?;
        let f = d
            .checked_mul(reduced_c.checked_add(a_n).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?
            - (a_n - 1);
        if c != summary.c || f != summary.f as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reduction identity gives `F = d'(C' + a_n) - (a_n - 1)` with
/// `d' = gcd(others)`, so `gcd(d', a_n - 1)` divides F a second way. Returns
/// whether both routes reach the same divisibility verdict at every position.
pub fn divisibility_routes_agree(gens: &GeneratorTuple) -> Result<bool> {
    let f = frobenius_number(gens)?.f;
    let values = gens.values();
    for t in 0..values.len() {
        let (d_others, reduced_c) = reduced_classic(values, t)?;
        let a_n = arith::to_signed(values[t])?;
        let d = gcd(d_others, values[t] - 1);
        let via_reduction = arith::to_signed(d_others)?
            .checked_mul(reduced_c + a_n)
            .ok_or(Error::Overflow)?
            - (a_n - 1);
        let direct = f % d == 0;
        let second = via_reduction.rem_euclid(d as i64) == 0;
        if direct != second || via_reduction != f as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G(a_1, a_2, a_3) = d_12 G(a_1/d_12, a_2/d_12, a_3)`.
pub fn verify_johnson(a1: u64, a2: u64, a3: u64) -> Result<bool> {
    let lhs = frobenius_number(&GeneratorTuple::coprime(&[a1, a2, a3])?)?.g;
    let d = gcd(a1, a2);
    let reduced = frobenius_number(&GeneratorTuple::coprime(&[a1 / d, a2 / d, a3])?)?.g;
    let rhs = arith::to_signed(d)?
        .checked_mul(reduced)
        .ok_or(Error::Overflow)?;
    Ok(lhs == rhs)
}

/// Applies `identity` to one tuple (given in any order).
pub fn check_tuple(identity: Identity, tuple: &[u64]) -> Outcome {
    match check_tuple_inner(identity, tuple) {
        Ok(Some(true)) => Outcome::Passed,
        Ok(Some(false)) | Err(_) => Outcome::Failed,
        Ok(None) => Outcome::Skipped,
    }
}

fn check_tuple_inner(identity: Identity, tuple: &[u64]) -> Result<Option<bool>> {
    let gens = GeneratorTuple::coprime(tuple)?;
    let triple = || -> Result<[u64; 3]> {
        tuple
            .try_into()
            .map_err(|_| Error::InvalidInput("identity needs three generators"))
    };
    let ok = match identity {
        Identity::Theorem1 => verify_theorem1(&gens)? && divisibility_routes_agree(&gens)?,
        Identity::Johnson => {
            let [a1, a2, a3] = triple()?;
            verify_johnson(a1, a2, a3)? && verify_johnson(a2, a3, a1)? && verify_johnson(a1, a3, a2)?
        }
        Identity::BrauerShockley => verify_brauer_shockley(&gens)?,
        Identity::Theorem2 => {
            let a = triple()?;
            let truth = sieve_oracle(&gens)?;
            if !truth.symmetric {
                return Ok(None);
            }
            let pairings = symmetry::lemma3_pairings(a)?;
            let mut witnessed = false;
            for i in 1..=3 {
                if pairings[i - 1] {
                    witnessed = true;
                    if symmetry::theorem2_frobenius_via(a, i)? != truth.f {
                        return Ok(Some(false));
                    }
                }
            }
            witnessed && symmetry::theorem2_frobenius(a[0], a[1], a[2])? == truth.f
        }
        Identity::Notice => {
            let [a1, a2, a3] = triple()?;
            if frobenius_number(&gens)?.symmetric {
                return Ok(None);
            }
            symmetry::notice_inequality_check(a1, a2, a3)?
        }
        Identity::Lemma3Equivalence => {
            let [a1, a2, a3] = triple()?;
            let verdict = is_symmetric_lemma3(a1, a2, a3)?;
            let summary = frobenius_number(&gens)?;
            verdict.by_definition == verdict.by_lemma3
                && verdict.by_definition == summary.symmetric
                && summary.symmetric == (2 * summary.genus == summary.f)
        }
        Identity::Sylvester => {
            let [a1, a2]: [u64; 2] = tuple
                .try_into()
                .map_err(|_| Error::InvalidInput("identity needs two generators"))?;
            frobenius_number(&gens)?.f == sylvester_frobenius(a1, a2)?
        }
        Identity::Oracle => frobenius_number(&gens)? == sieve_oracle(&gens)?,
    };
    Ok(Some(ok))
}

/// All coprime non-decreasing tuples of the given sizes with entries in
/// `[1, bound]`, pairs before triples, each lexicographically ordered.
/// `first` restricts the leading entry, for splitting across workers.
pub fn tuples(arity: Arity, bound: u64, first: u64) -> impl Iterator<Item = Vec<u64>> {
    let pairs = matches!(arity, Arity::Pairs | Arity::PairsAndTriples);
    let triples = matches!(arity, Arity::Triples | Arity::PairsAndTriples);
    let pair_iter = (first..=bound)
        .filter(move |_| pairs)
        .flat_map(move |a1| (a1..=bound).map(move |a2| alloc::vec![a1, a2]));
    let triple_iter = (first..=bound)
        .filter(move |_| triples)
        .flat_map(move |a1| {
            (a1..=bound).flat_map(move |a2| (a2..=bound).map(move |a3| alloc::vec![a1, a2, a3]))
        });
    pair_iter
        .chain(triple_iter)
        .filter(|t| t.iter().fold(0, |acc, &v| gcd(acc, v)) == 1)
}

/// Sweeps `identity` over its default tuple sizes up to `bound`.
pub fn run_exhaustive(identity: Identity, bound: u64) -> Result<VerificationReport> {
    run_exhaustive_arity(identity, identity.default_arity(), bound)
}

pub fn run_exhaustive_arity(
    identity: Identity,
    arity: Arity,
    bound: u64,
) -> Result<VerificationReport> {
    let mut report = run_slice(identity, arity, bound, 1..=bound)?;
    report.failures.sort_unstable();
    Ok(report)
}

/// The part of the sweep whose leading entry lies in `leading`.
pub fn run_slice(
    identity: Identity,
    arity: Arity,
    bound: u64,
    leading: core::ops::RangeInclusive<u64>,
) -> Result<VerificationReport> {
    if bound < 3 {
        return Err(Error::InvalidInput("bound must be at least 3"));
    }
    let mut report = VerificationReport::new(identity, bound);
    let (lo, hi) = (*leading.start(), *leading.end());
    for tuple in tuples(arity, bound, lo.max(1)).filter(|t| t[0] <= hi) {
        report.record(&tuple, check_tuple(identity, &tuple));
    }
    Ok(report)
}
