//! Cube censuses around `N a` for a fixed base triple `a`.
//!
//! For each schedule point `(N, r)` every triple `A = N a + (r_1, r_2, r_3)`
//! with `|r_i| <= r` is enumerated (no sampling) and classified as coprime
//! and symmetric. The cube is split into slabs by `r_1`; slab counts are
//! plain integers and merge in any order, so results do not depend on how
//! the work was scheduled.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::arith::{self, gcd, mod_inverse};
use crate::bound::{self, BoundParams};
use crate::error::{Error, Result};
use crate::semigroup::membership_two_gen;
use crate::symmetry::lemma3_holds;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Divide by `(2r)^3`.
    Paper2rCubed,
    /// Divide by the number of enumerated points, `(2r + 1)^3`.
    ExactPointCount,
}

impl Normalization {
    pub fn denominator(self, r: u64) -> u64 {
        match self {
            Normalization::Paper2rCubed => (2 * r).pow(3),
            Normalization::ExactPointCount => (2 * r + 1).pow(3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum D0Rule {
    LnR,
    Explicit(f64),
}

impl D0Rule {
    pub fn value(self, r: u64) -> f64 {
        match self {
            D0Rule::LnR => bound::d0_ln(r),
            D0Rule::Explicit(v) => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchedulePoint {
    pub n: u64,
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusConfig {
    pub a: [u64; 3],
    pub schedule: Vec<SchedulePoint>,
    pub epsilon: f64,
    pub d0_rule: D0Rule,
    pub normalization: Normalization,
    /// Offset used for `A_1` in the analytic bound.
    pub r1: i64,
}

impl CensusConfig {
    pub fn new(a: [u64; 3], schedule: Vec<SchedulePoint>) -> Self {
        Self {
            a,
            schedule,
            epsilon: 0.01,
            d0_rule: D0Rule::LnR,
            normalization: Normalization::Paper2rCubed,
            r1: 0,
        }
    }

    /// Schedule strictly increasing in `N` and `r` with `r/N` strictly
    /// decreasing, every cube inside the positive octant.
    pub fn validate(&self) -> Result<()> {
        if self.a.contains(&0) {
            return Err(Error::InvalidInput("base triple must be positive"));
        }
        if self.schedule.is_empty() {
            return Err(Error::InvalidInput("schedule is empty"));
        }
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 {
            return Err(Error::InvalidInput("epsilon must be positive"));
        }
        if let D0Rule::Explicit(v) = self.d0_rule {
            if !v.is_finite() {
                return Err(Error::InvalidInput("D0 must be finite"));
            }
        }
        for w in self.schedule.windows(2) {
            let (p, q) = (w[0], w[1]);
            if q.n <= p.n || q.r <= p.r {
                return Err(Error::InvalidInput("schedule must increase in N and r"));
            }
            if u128::from(q.r) * u128::from(p.n) >= u128::from(p.r) * u128::from(q.n) {
                return Err(Error::InvalidInput("r/N must strictly decrease along the schedule"));
            }
        }
        for p in &self.schedule {
            cube_bounds(self.a, p.n, p.r)?;
        }
        Ok(())
    }
}

/// Per-coordinate `[N a_i - r, N a_i + r]`, checked to be positive and in range.
fn cube_bounds(a: [u64; 3], n: u64, r: u64) -> Result<[(u64, u64); 3]> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidInput("N and r must be positive"));
    }
    let mut out = [(0, 0); 3];
    for (slot, &ai) in out.iter_mut().zip(&a) {
        let center = arith::mul(ai, n)?;
        let lo = center
            .checked_sub(r)
            .filter(|&v| v > 0)
            .ok_or(Error::InvalidInput("cube touches non-positive coordinates"))?;
        *slot = (lo, arith::add(center, r)?);
    }
    Ok(out)
}

/// `#hits / denominator` kept as exact integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeAverage {
    pub hits: u64,
    pub denominator: u64,
}

impl CubeAverage {
    pub fn value(&self) -> f64 {
        self.hits as f64 / self.denominator as f64
    }
}

/// Average of an indicator over the `(2r + 1)^3` points of the cube around `N a`.
pub fn cube_average<F>(
    f: F,
    a: [u64; 3],
    r: u64,
    n: u64,
    normalization: Normalization,
) -> Result<CubeAverage>
where
    F: Fn([u64; 3]) -> bool,
{
    let [(l1, h1), (l2, h2), (l3, h3)] = cube_bounds(a, n, r)?;
    let mut hits = 0;
    for x in l1..=h1 {
        for y in l2..=h2 {
            hits += (l3..=h3).filter(|&z| f([x, y, z])).count() as u64;
        }
    }
    Ok(CubeAverage {
        hits,
        denominator: normalization.denominator(r),
    })
}

/// `1` for coprime symmetric triples, `0` otherwise (including non-coprime triples).
pub fn symmetric_indicator(a: [u64; 3]) -> bool {
    if a.contains(&0) || gcd(gcd(a[0], a[1]), a[2]) != 1 {
        return false;
    }
    lemma3_holds(a).unwrap_or(false)
}

/// Coprimality indicator.
pub fn coprime_indicator(a: [u64; 3]) -> bool {
    !a.contains(&0) && gcd(gcd(a[0], a[1]), a[2]) == 1
}

/// Integer tallies for a slab of the cube.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlabCounts {
    pub points: u64,
    pub coprime: u64,
    pub symmetric: u64,
    /// Coprime triples with `A_3 ∈ S(A_1/D, A_2/D)` and `D >= ceil(D_0)`.
    pub third_pairing_large_d: u64,
    /// Same with `D < ceil(D_0)`.
    pub third_pairing_small_d: u64,
}

impl SlabCounts {
    pub fn merge(self, o: SlabCounts) -> SlabCounts {
        SlabCounts {
            points: self.points + o.points,
            coprime: self.coprime + o.coprime,
            symmetric: self.symmetric + o.symmetric,
            third_pairing_large_d: self.third_pairing_large_d + o.third_pairing_large_d,
            third_pairing_small_d: self.third_pairing_small_d + o.third_pairing_small_d,
        }
    }
}

/// Membership in `S(b1, b2)` with the modular inverse hoisted out of the inner loop.
struct PairSemigroup {
    small: u64,
    large: u64,
    inv: u64,
}

impl PairSemigroup {
    fn new(b1: u64, b2: u64) -> Self {
        let (small, large) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        let inv = mod_inverse(large % small, small).expect("reduced pair is coprime");
        Self { small, large, inv }
    }

    fn contains(&self, s: u64) -> bool {
        if self.small == 1 {
            return true;
        }
        let x = (u128::from(s % self.small) * u128::from(self.inv)) % u128::from(self.small);
        x * u128::from(self.large) <= u128::from(s)
    }
}

/// The part of the cube at `(N, r)` with offset `r_1` in `offsets`.
pub fn count_slab(
    a: [u64; 3],
    n: u64,
    r: u64,
    offsets: RangeInclusive<i64>,
    d0_ceil: u64,
) -> Result<SlabCounts> {
    let [(l1, _), (l2, h2), (l3, h3)] = cube_bounds(a, n, r)?;
    let ri = i64::try_from(r).map_err(|_| Error::Overflow)?;
    let mut counts = SlabCounts::default();
    for off in offsets {
        if off < -ri || off > ri {
            return Err(Error::InvalidInput("slab offset outside the cube"));
        }
        let a1 = l1 + (off + ri) as u64;
        for a2 in l2..=h2 {
            let d = gcd(a1, a2);
            let pair = PairSemigroup::new(a1 / d, a2 / d);
            for a3 in l3..=h3 {
                counts.points += 1;
                if gcd(d, a3) != 1 {
                    continue;
                }
                counts.coprime += 1;
                let third = pair.contains(a3);
                if third {
                    if d >= d0_ceil {
                        counts.third_pairing_large_d += 1;
                    } else {
                        counts.third_pairing_small_d += 1;
                    }
                }
                if third || other_pairings(a1, a2, a3)? {
                    counts.symmetric += 1;
                }
            }
        }
    }
    Ok(counts)
}

fn other_pairings(a1: u64, a2: u64, a3: u64) -> Result<bool> {
    let d23 = gcd(a2, a3);
    if membership_two_gen(a1, a2 / d23, a3 / d23)? {
        return Ok(true);
    }
    let d13 = gcd(a1, a3);
    membership_two_gen(a2, a1 / d13, a3 / d13)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusRecord {
    pub n: u64,
    pub r: u64,
    pub points_total: u64,
    pub coprime_count: u64,
    pub symmetric_count: u64,
    /// `symmetric_count` over the configured normalization.
    pub w_all: f64,
    pub w_coprime: f64,
    pub coprime_fraction: f64,
    pub d0: f64,
    /// `None` when `D_0 <= 1` makes the estimates undefined.
    pub u1_bound: Option<f64>,
    pub u2_bound: Option<f64>,
    pub eq2_bound: Option<f64>,
    pub third_pairing_large_d: u64,
    pub third_pairing_small_d: u64,
    /// Exact integer bounds on the two counts above (see [`bound::counting_bounds`]).
    pub large_d_count_bound: u128,
    pub small_d_count_bound: u128,
}

/// Split threshold for the counts at a schedule point.
pub fn d0_threshold(config: &CensusConfig, r: u64) -> u64 {
    let d0 = config.d0_rule.value(r);
    if d0 > 1.0 {
        libm::ceil(d0) as u64
    } else {
        1
    }
}

/// Turns merged slab counts into a record.
pub fn assemble_record(
    config: &CensusConfig,
    point: SchedulePoint,
    counts: SlabCounts,
) -> Result<CensusRecord> {
    let SchedulePoint { n, r } = point;
    let d0 = config.d0_rule.value(r);
    let params = BoundParams {
        a: config.a,
        n,
        r,
        r1: config.r1,
        d0,
        epsilon: config.epsilon,
    };
    let (u1_bound, u2_bound, eq2_bound) = if d0 > 1.0 {
        (
            Some(bound::u1_sum(&params)?),
            Some(bound::u2_sum(&params)?),
            Some(bound::eq2_bound(&params)?),
        )
    } else {
        (None, None, None)
    };
    let (large_d_count_bound, small_d_count_bound) =
        bound::counting_bounds(config.a, n, r, d0_threshold(config, r))?;
    let ratio = |num: u64, den: u64| if den == 0 { 0.0 } else { num as f64 / den as f64 };
    Ok(CensusRecord {
        n,
        r,
        points_total: counts.points,
        coprime_count: counts.coprime,
        symmetric_count: counts.symmetric,
        w_all: ratio(counts.symmetric, config.normalization.denominator(r)),
        w_coprime: ratio(counts.symmetric, counts.coprime),
        coprime_fraction: ratio(counts.coprime, counts.points),
        d0,
        u1_bound,
        u2_bound,
        eq2_bound,
        third_pairing_large_d: counts.third_pairing_large_d,
        third_pairing_small_d: counts.third_pairing_small_d,
        large_d_count_bound,
        small_d_count_bound,
    })
}

/// Census of one schedule point on the current thread.
pub fn census_point(config: &CensusConfig, point: SchedulePoint) -> Result<CensusRecord> {
    let ri = i64::try_from(point.r).map_err(|_| Error::Overflow)?;
    let counts = count_slab(config.a, point.n, point.r, -ri..=ri, d0_threshold(config, point.r))?;
    assemble_record(config, point, counts)
}

/// One record per schedule point, single-threaded.
pub fn run_census(config: &CensusConfig) -> Result<Vec<CensusRecord>> {
    config.validate()?;
    config
        .schedule
        .iter()
        .map(|&p| census_point(config, p))
        .collect()
}

/// Members of `(4N + 2, 6N + 3, a_3 N + r_3)`: the first two share
/// `D = 2N + 1` with reduced pair `(2, 3)`, so every coprime member is
/// symmetric although `D` grows like `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyMember {
    pub a: [u64; 3],
    pub d: u64,
    pub reduced_pair: (u64, u64),
    pub coprime: bool,
    pub symmetric: bool,
}

pub fn family_member(n: u64, a3: u64, r3: i64) -> Result<FamilyMember> {
    if n == 0 || a3 == 0 {
        return Err(Error::InvalidInput("N and a3 must be positive"));
    }
    let third = i128::from(a3) * i128::from(n) + i128::from(r3);
    if third < 1 {
        return Err(Error::InvalidInput("A3 must be positive"));
    }
    let third = u64::try_from(third).map_err(|_| Error::Overflow)?;
    let a = [
        arith::add(arith::mul(4, n)?, 2)?,
        arith::add(arith::mul(6, n)?, 3)?,
        third,
    ];
    let d = gcd(a[0], a[1]);
    let coprime = gcd(d, a[2]) == 1;
    let symmetric = coprime && lemma3_holds(a)?;
    Ok(FamilyMember {
        a,
        d,
        reduced_pair: (a[0] / d, a[1] / d),
        coprime,
        symmetric,
    })
}

/// True iff `D = 2N + 1`, the reduced pair is `(2, 3)`, and the triple is
/// either not coprime or symmetric.
pub fn counterexample_family(n: u64, a3: u64, r3: i64) -> Result<bool> {
    let m = family_member(n, a3, r3)?;
    Ok(m.d == 2 * n + 1 && m.reduced_pair == (2, 3) && (!m.coprime || m.symmetric))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyReport {
    pub checked: u64,
    pub coprime_members: u64,
    pub failures: Vec<(u64, u64, i64)>,
}

/// Sweeps `N in [1, n_max]`, `a_3 in [1, a3_max]`, `r_3 in [-r3_span, r3_span]`,
/// skipping `A_3 < 1`.
pub fn counterexample_sweep(n_max: u64, a3_max: u64, r3_span: i64) -> Result<FamilyReport> {
    let mut report = FamilyReport::default();
    for n in 1..=n_max {
        for a3 in 1..=a3_max {
            for r3 in -r3_span..=r3_span {
                if i128::from(a3) * i128::from(n) + i128::from(r3) < 1 {
                    continue;
                }
                let member = family_member(n, a3, r3)?;
                report.checked += 1;
                report.coprime_members += u64::from(member.coprime);
                if !counterexample_family(n, a3, r3)? {
                    report.failures.push((n, a3, r3));
                }
            }
        }
    }
    Ok(report)
}
