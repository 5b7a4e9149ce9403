//! Counting estimates behind the vanishing of the symmetric fraction.
//!
//! Triples near `N a` are split by `D = gcd(A_1, A_2)` at a threshold `D_0`.
//! Large `D` is rare (about `(2r/D)^2` pairs per value of `D`); for small `D`
//! the third generator must hit one of few elements of `S(A_1/D, A_2/D)`
//! below `c_1 N`, at most `(T + 1)(T + 2)/2` of them.

use crate::apery::apery_table;
use crate::arith;
use crate::error::{Error, Result};
use crate::generators::GeneratorTuple;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoGenCount {
    /// `#(S(b_1, b_2) ∩ [0, X])`.
    pub count: u64,
    /// `floor(X / min(b_1, b_2))`.
    pub t: u64,
    /// `(T + 1)(T + 2) / 2`: pairs `x_1 + x_2 <= T`.
    pub triangular_bound: u64,
    /// `T (T + 1) / 2`, which undercounts by one solution per `x_2`.
    pub uncorrected_bound: u64,
}

/// Exact count of `S(b1, b2)` in `[0, x]` from the Apéry table: residue class
/// `i` contributes `floor((x - w_i) / b_1) + 1` elements when `w_i <= x`.
pub fn count_two_gen_upto(b1: u64, b2: u64, x: u64) -> Result<TwoGenCount> {
    let gens = GeneratorTuple::new(&[b1, b2])?;
    let table = apery_table(&gens)?;
    let base = table.base();
    let count = table
        .entries()
        .iter()
        .filter(|&&w| w <= x)
        .map(|&w| (x - w) / base + 1)
        .sum();
    let t = x / base;
    let triangular = |k: u64| -> Result<u64> {
        let v = u128::from(k) * u128::from(k + 1) / 2;
        u64::try_from(v).map_err(|_| Error::Overflow)
    };
    let out = TwoGenCount {
        count,
        t,
        triangular_bound: triangular(arith::add(t, 1)?)?,
        uncorrected_bound: triangular(t)?,
    };
    debug_assert!(out.count <= out.triangular_bound);
    Ok(out)
}

/// Natural log of `r`, the default split point `D_0`.
pub fn d0_ln(r: u64) -> f64 {
    libm::log(r as f64)
}

/// Shape parameters shared by the estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    pub a: [u64; 3],
    pub n: u64,
    pub r: u64,
    /// Offset of the smaller of the first two coordinates, `A_1 = a_1 N + r_1`.
    pub r1: i64,
    pub d0: f64,
    /// `c_1 = a_3 + epsilon`.
    pub epsilon: f64,
}

impl BoundParams {
    fn validate(&self) -> Result<()> {
        if self.a.contains(&0) || self.n == 0 || self.r == 0 {
            return Err(Error::InvalidInput("a, N and r must be positive"));
        }
        if !self.d0.is_finite() || self.d0 <= 1.0 {
            return Err(Error::InvalidInput("D0 must exceed 1"));
        }
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 {
            return Err(Error::InvalidInput("epsilon must be positive"));
        }
        if self.a1_value() <= 0.0 {
            return Err(Error::InvalidInput("a1 N + r1 must be positive"));
        }
        Ok(())
    }

    fn a1_value(&self) -> f64 {
        self.a[0] as f64 * self.n as f64 + self.r1 as f64
    }

    /// `c = min(a_1, a_2) + 1`; every `D <= min(A_1, A_2) < c N`.
    fn c(&self) -> u64 {
        self.a[0].min(self.a[1]) + 1
    }

    fn c1(&self) -> f64 {
        self.a[2] as f64 + self.epsilon
    }

    /// First integer `D` with `D >= D_0`.
    pub fn d0_ceil(&self) -> u64 {
        libm::ceil(self.d0) as u64
    }
}

/// `3 (1/(D_0 - 1) - 1/(cN) + D_0/(2r) c_1^2 (N / (a_1 N + r_1))^2)`.
pub fn eq2_bound(p: &BoundParams) -> Result<f64> {
    p.validate()?;
    let n = p.n as f64;
    let ratio = n / p.a1_value();
    let c1 = p.c1();
    Ok(3.0
        * (1.0 / (p.d0 - 1.0) - 1.0 / (p.c() as f64 * n)
            + p.d0 / (2.0 * p.r as f64) * c1 * c1 * ratio * ratio))
}

/// `sum_{D_0 <= D <= cN} (2r/D)^2`, summed exactly term by term.
pub fn u1_sum(p: &BoundParams) -> Result<f64> {
    p.validate()?;
    let two_r = 2.0 * p.r as f64;
    let top = arith::mul(p.c(), p.n)?;
    Ok((p.d0_ceil()..=top)
        .map(|d| {
            let q = two_r / d as f64;
            q * q
        })
        .sum())
}

/// `sum_{1 <= D < D_0} (2r/D)^2 (T_D + 1)(T_D + 2)/2` with `T_D = floor(c_1 N D / A_1)`.
pub fn u2_sum(p: &BoundParams) -> Result<f64> {
    p.validate()?;
    let two_r = 2.0 * p.r as f64;
    let scale = p.c1() * p.n as f64 / p.a1_value();
    Ok((1..p.d0_ceil())
        .map(|d| {
            let q = two_r / d as f64;
            let t = libm::floor(scale * d as f64);
            q * q * (t + 1.0) * (t + 2.0) / 2.0
        })
        .sum())
}

/// Multiples of `d` in `[lo, hi]`, `lo >= 1`.
pub(crate) fn multiples_in(d: u64, lo: u64, hi: u64) -> u64 {
    hi / d - (lo - 1) / d
}

/// Rigorous integer counterparts of the two estimates for the cube of
/// half-width `r` around `N a`, counting triples whose third coordinate lies
/// in the reduced semigroup of the first two:
/// `large`: pairs with both coordinates divisible by some `D >= d0_ceil`,
/// times the `2r + 1` choices of `A_3`;
/// `small`: for `D < d0_ceil`, pairs divisible by `D` times the bound on
/// `#(S(A_1/D, A_2/D) ∩ [0, max A_3])`.
pub fn counting_bounds(a: [u64; 3], n: u64, r: u64, d0_ceil: u64) -> Result<(u128, u128)> {
    let lo = |ai: u64| -> Result<u64> {
        arith::mul(ai, n)?
            .checked_sub(r)
            .filter(|&v| v > 0)
            .ok_or(Error::InvalidInput("cube touches non-positive coordinates"))
    };
    let hi = |ai: u64| arith::add(arith::mul(ai, n)?, r);
    let (lo1, hi1, lo2, hi2) = (lo(a[0])?, hi(a[0])?, lo(a[1])?, hi(a[1])?);
    let a3_max = hi(a[2])?;
    let min_pair = lo1.min(lo2);
    let side = u128::from(2 * r + 1);
    let max_d = hi1.min(hi2);

    let mut large = 0u128;
    let mut small = 0u128;
    for d in 1..=max_d {
        let pairs = u128::from(multiples_in(d, lo1, hi1)) * u128::from(multiples_in(d, lo2, hi2));
        if pairs == 0 {
            continue;
        }
        if d >= d0_ceil {
            large += pairs * side;
        } else {
            let t = u128::from(a3_max) * u128::from(d) / u128::from(min_pair);
            small += pairs * ((t + 1) * (t + 2) / 2).min(side);
        }
    }
    Ok((large, small))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;

    fn brute_count(b1: u64, b2: u64, x: u64) -> u64 {
        (0..=x)
            .filter(|&s| (0..=s / b1).any(|k| (s - k * b1) % b2 == 0))
            .count() as u64
    }

    #[test]
    fn count_examples() {
        let c = count_two_gen_upto(2, 3, 7).unwrap();
        assert_eq!((c.count, c.t, c.triangular_bound, c.uncorrected_bound), (7, 3, 10, 6));
        assert!(c.count > c.uncorrected_bound);
        let c = count_two_gen_upto(2, 3, 6).unwrap();
        assert_eq!((c.count, c.triangular_bound), (6, 10));
        for x in [0, 5, 100] {
            let c = count_two_gen_upto(1, 9, x).unwrap();
            assert_eq!((c.count, c.t), (x + 1, x));
        }
        assert_eq!(count_two_gen_upto(4, 6, 10), Err(Error::NotCoprime));
    }

    #[test]
    fn count_matches_brute_force_small() {
        for b1 in 1..12 {
            for b2 in b1..12 {
                if gcd(b1, b2) != 1 {
                    continue;
                }
                for x in 0..80 {
                    assert_eq!(count_two_gen_upto(b1, b2, x).unwrap().count, brute_count(b1, b2, x));
                }
            }
        }
    }

    fn params(n: u64, r: u64, d0: f64) -> BoundParams {
        BoundParams { a: [3, 5, 7], n, r, r1: 0, d0, epsilon: 0.01 }
    }

    #[test]
    fn eq2_reference_value() {
        // independent hand evaluation: c = 4, c1 = 7.01, N/(a1 N) = 1/3
        let d0 = libm::log(40.0);
        let expected = 3.0
            * (1.0 / (d0 - 1.0) - 1.0 / 6400.0 + d0 / 80.0 * 7.01 * 7.01 / 9.0);
        let got = eq2_bound(&params(1600, 40, d0)).unwrap();
        assert!((got - expected).abs() < 1e-12);
        assert!((got - 1.870_537_249_393).abs() < 1e-9, "{got}");
    }

    #[test]
    fn eq2_domain() {
        assert!(matches!(eq2_bound(&params(100, 10, 1.0)), Err(Error::InvalidInput(_))));
        assert!(eq2_bound(&params(100, 10, 0.5)).is_err());
        let mut p = params(100, 10, 2.0);
        p.epsilon = 0.0;
        assert!(eq2_bound(&p).is_err());
    }

    #[test]
    fn eq2_grows_with_d0_for_large_d0() {
        let mut prev = eq2_bound(&params(1600, 40, 10.0)).unwrap();
        for d0 in [20.0, 40.0, 80.0] {
            let v = eq2_bound(&params(1600, 40, d0)).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn eq2_decreases_along_sqrt_schedule() {
        let values: alloc::vec::Vec<f64> = [100u64, 400, 1600, 6400, 25600, 102400]
            .iter()
            .map(|&n| {
                let r = libm::sqrt(n as f64) as u64;
                eq2_bound(&params(n, r, d0_ln(r))).unwrap()
            })
            .collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]), "{values:?}");
    }

    #[test]
    fn partial_sums() {
        // D from 4 to 400 and D in 1..=3
        let p = params(100, 10, d0_ln(10) + 1.0);
        assert_eq!(p.d0_ceil(), 4);
        let u1: f64 = (4..=400).map(|d| 400.0 / (d * d) as f64).sum();
        assert!((u1_sum(&p).unwrap() - u1).abs() < 1e-9);
        let u2: f64 = (1..4u64)
            .map(|d| {
                let t = (7.01 * 100.0 * d as f64 / 300.0).floor();
                400.0 / (d * d) as f64 * (t + 1.0) * (t + 2.0) / 2.0
            })
            .sum();
        assert!((u2_sum(&p).unwrap() - u2).abs() < 1e-9);
    }

    #[test]
    fn multiples() {
        assert_eq!(multiples_in(3, 1, 9), 3);
        assert_eq!(multiples_in(3, 4, 8), 1);
        assert_eq!(multiples_in(7, 8, 13), 0);
    }
}
