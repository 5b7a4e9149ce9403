//! Brute-force oracle for [`crate::frobenius_number`], sharing none of its code path.

use alloc::vec;

use crate::error::{Error, Result};
use crate::generators::GeneratorTuple;
use crate::semigroup::SemigroupSummary;

/// Marks representable integers on `[0, M]` by dynamic programming, doubling
/// `M` until a run of `a_1` consecutive elements appears. The run start is F.
pub fn sieve_oracle(gens: &GeneratorTuple) -> Result<SemigroupSummary> {
    gens.require_coprime()?;
    let values = gens.values();
    let run_needed = usize::try_from(gens.smallest()).map_err(|_| Error::Overflow)?;
    let mut limit = usize::try_from(gens.largest())
        .map_err(|_| Error::Overflow)?
        .checked_mul(2)
        .ok_or(Error::Overflow)?;

    loop {
        let mut member = vec![false; limit + 1];
        member[0] = true;
        for s in 1..=limit {
            member[s] = values
                .iter()
                .any(|&a| (a as usize) <= s && member[s - a as usize]);
        }

        let mut run_start = 0usize;
        let mut run_len = 0usize;
        for (s, &m) in member.iter().enumerate() {
            if m {
                if run_len == 0 {
                    run_start = s;
                }
                run_len += 1;
                if run_len == run_needed {
                    let f = run_start as u64;
                    let genus = member[..run_start].iter().filter(|&&m| !m).count() as u64;
                    let symmetric = (0..run_start)
                        .filter(|&s| !member[s])
                        .all(|s| member[run_start - 1 - s]);
                    return SemigroupSummary::from_parts(f, genus, symmetric, gens.sum()?);
                }
            } else {
                run_len = 0;
            }
        }
        limit = limit.checked_mul(2).ok_or(Error::Overflow)?;
    }
}
