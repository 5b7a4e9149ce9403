//! Exit criteria. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any fails. Tolerances are fixed here.

use std::process::ExitCode;
use std::time::Instant;

use frobenius::output::census_csv;
use frobenius::parallel;
use frobenius_core::bound::count_two_gen_upto;
use frobenius_core::census::{self, CensusConfig, CensusRecord, SchedulePoint};
use frobenius_core::identities::{Arity, Identity};

const PAIR_BOUND: u64 = 200;
const TRIPLE_BOUND: u64 = 40;
/// 1/zeta(3)
const INV_ZETA3: f64 = 0.831_907_372_580_707_5;
const DENSITY_TOLERANCE: f64 = 0.02;
/// W(last) must be at most W(first) / this factor (preliminary run: 6.77 and 7.52).
const VANISHING_FACTOR: f64 = 5.0;

type Outcome = Result<String, String>;

fn sweep(identity: Identity, arity: Arity, bound: u64) -> Result<u64, String> {
    let pool = parallel::pool(None).map_err(|e| e.to_string())?;
    let report = parallel::run_exhaustive(identity, arity, bound, &pool).map_err(|e| e.to_string())?;
    if report.tuples_checked == 0 {
        return Err(format!("{identity}: nothing checked"));
    }
    if !report.passed() {
        return Err(format!(
            "{identity} bound {bound}: {} failures, first {:?}",
            report.failures.len(),
            &report.failures[..report.failures.len().min(5)]
        ));
    }
    Ok(report.tuples_checked)
}

fn oracle_equivalence() -> Outcome {
    let pairs = sweep(Identity::Oracle, Arity::Pairs, PAIR_BOUND)?;
    let triples = sweep(Identity::Oracle, Arity::Triples, TRIPLE_BOUND)?;
    Ok(format!("{pairs} pairs <= {PAIR_BOUND}, {triples} triples <= {TRIPLE_BOUND} agree"))
}

fn sylvester() -> Outcome {
    let pairs = sweep(Identity::Sylvester, Arity::Pairs, PAIR_BOUND)?;
    Ok(format!("{pairs} coprime pairs exact"))
}

fn lemma3_equivalence() -> Outcome {
    let n = sweep(Identity::Lemma3Equivalence, Arity::Triples, TRIPLE_BOUND)?;
    Ok(format!("{n} triples, zero mismatches"))
}

fn theorem2_and_notice() -> Outcome {
    let sym = sweep(Identity::Theorem2, Arity::Triples, TRIPLE_BOUND)?;
    let non = sweep(Identity::Notice, Arity::Triples, TRIPLE_BOUND)?;
    Ok(format!("{sym} symmetric triples exact, {non} non-symmetric strict"))
}

fn theorem1_johnson_brauer() -> Outcome {
    let t1_pairs = sweep(Identity::Theorem1, Arity::Pairs, PAIR_BOUND)?;
    let t1 = sweep(Identity::Theorem1, Arity::Triples, TRIPLE_BOUND)?;
    let johnson = sweep(Identity::Johnson, Arity::Triples, TRIPLE_BOUND)?;
    let bs = sweep(Identity::BrauerShockley, Arity::Triples, TRIPLE_BOUND)?;
    Ok(format!(
        "theorem1 {t1_pairs} pairs + {t1} triples (all rotations), johnson {johnson}, brauer-shockley {bs}"
    ))
}

fn counterexample_family() -> Outcome {
    let report = census::counterexample_sweep(50, 10, 3).map_err(|e| e.to_string())?;
    if !report.failures.is_empty() {
        return Err(format!("failures: {:?}", report.failures));
    }
    if report.coprime_members == 0 {
        return Err("no coprime members".into());
    }
    Ok(format!(
        "{} members, {} coprime, all symmetric with D = 2N+1",
        report.checked, report.coprime_members
    ))
}

fn schedule_config() -> CensusConfig {
    let schedule = [100u64, 400, 1600, 6400]
        .into_iter()
        .map(|n| SchedulePoint { n, r: n.isqrt() })
        .collect();
    CensusConfig::new([3, 5, 7], schedule)
}

fn coprime_density(records: &[CensusRecord]) -> Outcome {
    let last = records.last().ok_or("empty census")?;
    let err = (last.coprime_fraction - INV_ZETA3).abs();
    let line = format!(
        "coprime_fraction {:.6} at N={}, |diff| = {err:.6} (tol {DENSITY_TOLERANCE})",
        last.coprime_fraction, last.n
    );
    if err <= DENSITY_TOLERANCE {
        Ok(line)
    } else {
        Err(line)
    }
}

fn vanishing(records: &[CensusRecord]) -> Outcome {
    let (first, last) = (&records[0], &records[records.len() - 1]);
    let mut problems = Vec::new();
    if last.w_coprime >= first.w_coprime {
        problems.push("W_coprime not strictly decreasing first to last".to_string());
    }
    if !records.windows(2).all(|w| w[1].w_coprime <= w[0].w_coprime && w[1].w_all <= w[0].w_all) {
        problems.push("W increases between consecutive points".to_string());
    }
    let ratio_coprime = first.w_coprime / last.w_coprime;
    let ratio_all = first.w_all / last.w_all;
    if ratio_coprime < VANISHING_FACTOR || ratio_all < VANISHING_FACTOR {
        problems.push(format!("decay factors {ratio_coprime:.3}/{ratio_all:.3} below {VANISHING_FACTOR}"));
    }
    let bounds: Vec<f64> = records.iter().filter_map(|r| r.eq2_bound).collect();
    if bounds.len() != records.len()
        || !bounds.windows(2).all(|w| w[1] < w[0])
        || bounds.iter().any(|&b| b <= 0.0)
    {
        problems.push(format!("eq2 bound not strictly decreasing and positive: {bounds:?}"));
    }
    for r in records {
        let ok = u128::from(r.third_pairing_large_d) <= r.large_d_count_bound
            && u128::from(r.third_pairing_small_d) <= r.small_d_count_bound;
        if !ok {
            problems.push(format!("counting bounds violated at N={}", r.n));
        }
    }
    let line = format!(
        "W_coprime {:.5} -> {:.5} (x{ratio_coprime:.2}), W_all x{ratio_all:.2}, eq2 {:.4} -> {:.4}",
        first.w_coprime,
        last.w_coprime,
        bounds.first().copied().unwrap_or(f64::NAN),
        bounds.last().copied().unwrap_or(f64::NAN)
    );
    if problems.is_empty() {
        Ok(line)
    } else {
        Err(format!("{line}; {}", problems.join("; ")))
    }
}

fn counting_inequalities() -> Outcome {
    const B: u64 = 30;
    const X: usize = 500;
    let mut cases = 0u64;
    for b1 in 1..=B {
        for b2 in 1..=B {
            if frobenius_core::gcd(b1, b2) != 1 {
                continue;
            }
            // brute force: mark every x1 b1 + x2 b2 <= X
            let mut member = vec![false; X + 1];
            for x1 in 0..=X / b1 as usize {
                let mut s = x1 * b1 as usize;
                while s <= X {
                    member[s] = true;
                    s += b2 as usize;
                }
            }
            let mut running = 0u64;
            for x in 0..=X {
                running += u64::from(member[x]);
                let c = count_two_gen_upto(b1, b2, x as u64).map_err(|e| e.to_string())?;
                if c.count != running {
                    return Err(format!("count mismatch at ({b1},{b2},{x}): {} vs {running}", c.count));
                }
                if c.count > c.triangular_bound {
                    return Err(format!("({b1},{b2},{x}) exceeds (T+1)(T+2)/2"));
                }
                cases += 1;
            }
        }
    }
    let c = count_two_gen_upto(2, 3, 7).map_err(|e| e.to_string())?;
    if !(c.count == 7 && c.uncorrected_bound == 6 && c.triangular_bound == 10) {
        return Err(format!("(2,3,7) reproduction wrong: {c:?}"));
    }
    Ok(format!(
        "{cases} cases within (T+1)(T+2)/2; (2,3,7): count 7 > T(T+1)/2 = 6"
    ))
}

fn determinism() -> Outcome {
    let config = schedule_config();
    let mut outputs = Vec::new();
    for threads in [1, 2, 4] {
        let pool = parallel::pool(Some(threads)).map_err(|e| e.to_string())?;
        let records = parallel::run_census(&config, &pool).map_err(|e| e.to_string())?;
        outputs.push(census_csv(&records));
    }
    let serial = census_csv(&census::run_census(&config).map_err(|e| e.to_string())?);
    if outputs.iter().all(|o| *o == serial) {
        Ok(format!("CSV identical for 1/2/4 threads and serial ({} bytes)", serial.len()))
    } else {
        Err("CSV differs across thread counts".into())
    }
}

fn main() -> ExitCode {
    let pool = parallel::pool(None).expect("thread pool");
    let records = parallel::run_census(&schedule_config(), &pool).expect("census runs");

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 oracle equivalence", Box::new(oracle_equivalence)),
        ("2 sylvester exactness", Box::new(sylvester)),
        ("3 lemma3 <=> definition", Box::new(lemma3_equivalence)),
        ("4 theorem2 exactness + notice", Box::new(theorem2_and_notice)),
        ("5 theorem1/johnson/brauer-shockley", Box::new(theorem1_johnson_brauer)),
        ("6 counterexample family", Box::new(counterexample_family)),
        ("7 coprime density", Box::new(|| coprime_density(&records))),
        ("8 vanishing symmetric fraction", Box::new(|| vanishing(&records))),
        ("9 counting inequalities", Box::new(counting_inequalities)),
        ("10 determinism", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{secs:.2}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{secs:.2}s]");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
