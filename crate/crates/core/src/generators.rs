use alloc::vec::Vec;

use crate::arith::{self, MAX_VALUE};
use crate::error::{Error, Result};

/// Generators `a_1 <= ... <= a_n` of a numerical semigroup, sorted.
/// Repeated generators are kept: they do not change S, but `G` sums over the
/// listed generators and so does depend on them. Non-coprime tuples are accepted (they appear as
/// intermediate inputs when reducing by a common divisor), but every
/// Frobenius computation checks [`GeneratorTuple::is_coprime`] first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTuple {
    values: Vec<u64>,
    coprime: bool,
}

impl GeneratorTuple {
    /// Validates and sorts. At least two generators must be supplied.
    pub fn new(values: &[u64]) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidInput("at least two generators are required"));
        }
        if values.contains(&0) {
            return Err(Error::InvalidInput("generators must be positive"));
        }
        if values.iter().any(|&v| v > MAX_VALUE) {
            return Err(Error::Overflow);
        }
        let mut values = values.to_vec();
        values.sort_unstable();
        let coprime = arith::gcd_all(&values)? == 1;
        Ok(Self { values, coprime })
    }

    /// Like [`GeneratorTuple::new`] but fails with [`Error::NotCoprime`]
    /// unless the gcd of all generators is 1.
    pub fn coprime(values: &[u64]) -> Result<Self> {
        let gens = Self::new(values)?;
        gens.require_coprime()?;
        Ok(gens)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn smallest(&self) -> u64 {
        self.values[0]
    }

    pub fn largest(&self) -> u64 {
        self.values[self.values.len() - 1]
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime
    }

    pub fn require_coprime(&self) -> Result<()> {
        if self.coprime {
            Ok(())
        } else {
            Err(Error::NotCoprime)
        }
    }

    pub fn sum(&self) -> Result<u64> {
        self.values.iter().try_fold(0, |acc, &v| arith::add(acc, v))
    }
}

/// Non-negative coefficients `x_1..x_n` with `sum x_i a_i = s`, aligned
/// with the generator list they were produced for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationWitness {
    pub coefficients: Vec<u64>,
}

impl RepresentationWitness {
    /// Recomputes the represented element.
    pub fn evaluate(&self, generators: &[u64]) -> Result<u64> {
        if generators.len() != self.coefficients.len() {
            return Err(Error::InvalidInput("witness length differs from generator count"));
        }
        self.coefficients
            .iter()
            .zip(generators)
            .try_fold(0, |acc, (&x, &a)| arith::add(acc, arith::mul(x, a)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn normalizes() {
        let g = GeneratorTuple::new(&[6, 4, 5, 4]).unwrap();
        assert_eq!(g.values(), &[4, 4, 5, 6]);
        assert!(g.is_coprime());
        assert_eq!(g.smallest(), 4);
        assert_eq!(g.sum(), Ok(19));

        let g = GeneratorTuple::new(&[4, 6]).unwrap();
        assert!(!g.is_coprime());
        assert_eq!(GeneratorTuple::coprime(&[4, 6]), Err(Error::NotCoprime));

        assert_eq!(GeneratorTuple::new(&[1, 1]).unwrap().values(), &[1, 1]);
    }

    #[test]
    fn rejects() {
        assert!(matches!(GeneratorTuple::new(&[5]), Err(Error::InvalidInput(_))));
        assert!(matches!(GeneratorTuple::new(&[0, 5]), Err(Error::InvalidInput(_))));
        assert_eq!(GeneratorTuple::new(&[u64::MAX, 3]), Err(Error::Overflow));
    }

    #[test]
    fn witness_evaluates() {
        let w = RepresentationWitness { coefficients: vec![1, 1] };
        assert_eq!(w.evaluate(&[3, 5]), Ok(8));
        assert!(w.evaluate(&[3]).is_err());
    }
}
