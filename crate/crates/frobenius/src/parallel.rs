//! Rayon drivers for the census and the exhaustive verifiers.
//!
//! Work is split into independent pieces whose integer results merge
//! associatively, so output does not depend on the thread count.

use frobenius_core::census::{self, CensusConfig, CensusRecord, SlabCounts};
use frobenius_core::identities::{self, Arity, Identity, VerificationReport};
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::error::CliError;

pub fn pool(threads: Option<usize>) -> Result<ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        builder = builder.num_threads(t);
    }
    builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start thread pool: {e}")))
}

/// One slab per `r_1` offset, summed in parallel.
pub fn run_census(config: &CensusConfig, pool: &ThreadPool) -> Result<Vec<CensusRecord>, CliError> {
    config.validate()?;
    let mut records = Vec::with_capacity(config.schedule.len());
    for &point in &config.schedule {
        let r = i64::try_from(point.r).map_err(|_| frobenius_core::Error::Overflow)?;
        let threshold = census::d0_threshold(config, point.r);
        let counts = pool.install(|| {
            (-r..=r)
                .into_par_iter()
                .map(|off| census::count_slab(config.a, point.n, point.r, off..=off, threshold))
                .try_reduce(SlabCounts::default, |x, y| Ok(x.merge(y)))
        })?;
        records.push(census::assemble_record(config, point, counts)?);
    }
    Ok(records)
}

/// Sweep split by leading entry.
pub fn run_exhaustive(
    identity: Identity,
    arity: Arity,
    bound: u64,
    pool: &ThreadPool,
) -> Result<VerificationReport, CliError> {
    let empty = VerificationReport::new(identity, bound);
    if bound < 3 {
        return Err(CliError::Usage("--max must be at least 3".into()));
    }
    let report = pool.install(|| {
        (1..=bound)
            .into_par_iter()
            .map(|lead| identities::run_slice(identity, arity, bound, lead..=lead))
            .try_reduce(|| empty.clone(), |x, y| Ok(x.merge(y)))
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobenius_core::census::SchedulePoint;

    #[test]
    fn parallel_matches_serial() {
        let config = CensusConfig::new(
            [3, 5, 7],
            vec![SchedulePoint { n: 64, r: 8 }, SchedulePoint { n: 256, r: 16 }],
        );
        let serial = census::run_census(&config).unwrap();
        let parallel = run_census(&config, &pool(Some(3)).unwrap()).unwrap();
        assert_eq!(serial, parallel);

        let serial = identities::run_exhaustive(Identity::Johnson, 12).unwrap();
        let parallel =
            run_exhaustive(Identity::Johnson, Arity::Triples, 12, &pool(Some(4)).unwrap()).unwrap();
        assert_eq!(serial, parallel);
    }
}
