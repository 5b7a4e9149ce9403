//! Apéry tables via shortest paths on the residue graph.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::arith;
use crate::error::Result;
use crate::generators::{GeneratorTuple, RepresentationWitness};

const NO_EDGE: usize = usize::MAX;

/// `entries[i]` is the least element of S congruent to `i` modulo `base`,
/// where `base` is the smallest generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    base: u64,
    entries: Vec<u64>,
    // Index (into `generators`) of the last edge on a shortest path, for witnesses.
    via: Vec<usize>,
    generators: Vec<u64>,
}

/// Dijkstra from residue 0 over edges `i -> (i + a_j) mod a_1` weighted `a_j`.
pub fn apery_table(gens: &GeneratorTuple) -> Result<AperyTable> {
    gens.require_coprime()?;
    let base = gens.smallest();
    let size = usize::try_from(base).map_err(|_| crate::Error::Overflow)?;
    let mut entries = vec![u64::MAX; size];
    let mut via = vec![NO_EDGE; size];
    let mut done = vec![false; size];
    entries[0] = 0;

    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((dist, residue))) = heap.pop() {
        if done[residue] {
            continue;
        }
        done[residue] = true;
        for (j, &a) in gens.values().iter().enumerate().skip(1) {
            let next = ((residue as u64 + a % base) % base) as usize;
            let candidate = arith::add(dist, a)?;
            if candidate < entries[next] {
                entries[next] = candidate;
                via[next] = j;
                heap.push(Reverse((candidate, next)));
            }
        }
    }

    Ok(AperyTable {
        base,
        entries,
        via,
        generators: gens.values().to_vec(),
    })
}

impl AperyTable {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Membership in O(1).
    pub fn contains(&self, s: u64) -> bool {
        s >= self.entries[(s % self.base) as usize]
    }

    /// Coefficients over [`AperyTable::generators`] representing `s`, if `s ∈ S`.
    pub fn witness(&self, s: u64) -> Option<RepresentationWitness> {
        if !self.contains(s) {
            return None;
        }
        let mut coefficients = vec![0u64; self.generators.len()];
        let mut residue = (s % self.base) as usize;
        coefficients[0] = (s - self.entries[residue]) / self.base;
        while residue != 0 {
            let j = self.via[residue];
            coefficients[j] += 1;
            let a = self.generators[j] % self.base;
            residue = ((residue as u64 + self.base - a) % self.base) as usize;
        }
        Some(RepresentationWitness { coefficients })
    }

    /// Largest non-element, or `None` when S is all of Z+.
    pub fn largest_gap(&self) -> Option<u64> {
        let max = *self.entries.iter().max()?;
        max.checked_sub(self.base)
    }

    /// Number of gaps: each residue class contributes `entry / base` of them.
    pub fn genus(&self) -> u64 {
        self.entries.iter().map(|&w| w / self.base).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn table(values: &[u64]) -> AperyTable {
        apery_table(&GeneratorTuple::new(values).unwrap()).unwrap()
    }

    #[test]
    fn known_tables() {
        let t = table(&[2, 3]);
        assert_eq!((t.base(), t.entries()), (2, &[0, 3][..]));
        let t = table(&[4, 5, 6]);
        assert_eq!((t.base(), t.entries()), (4, &[0, 5, 6, 11][..]));
        let t = table(&[1, 9]);
        assert_eq!((t.base(), t.entries()), (1, &[0][..]));
    }

    #[test]
    fn witnesses_reproduce_elements() {
        let t = table(&[5, 7, 9]);
        for s in 0..200 {
            match t.witness(s) {
                Some(w) => assert_eq!(w.evaluate(t.generators()), Ok(s)),
                None => assert!(!t.contains(s)),
            }
        }
        assert_eq!(t.witness(14).unwrap().coefficients, [1, 0, 1]);
        assert!(t.witness(13).is_none());
    }

    #[test]
    fn non_coprime_is_domain_error() {
        let g = GeneratorTuple::new(&[4, 6]).unwrap();
        assert_eq!(apery_table(&g), Err(Error::NotCoprime));
    }

    #[test]
    fn overflow_is_reported() {
        let big = crate::arith::MAX_VALUE;
        let g = GeneratorTuple::new(&[3, big]).unwrap();
        assert_eq!(apery_table(&g), Err(Error::Overflow));
    }
}
