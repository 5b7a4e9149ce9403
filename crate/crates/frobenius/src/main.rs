use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frobenius::config::{self, CensusOptions, RRule};
use frobenius::output::{self, format_sig};
use frobenius::{parallel, CliError};
use frobenius_core::bound::{self, BoundParams};
use frobenius_core::census::{self, D0Rule};
use frobenius_core::identities::Identity;
use frobenius_core::{frobenius_number, gaps, is_symmetric_lemma3, GeneratorTuple};

#[derive(Parser)]
#[command(name = "frobenius", version, about = "Frobenius numbers, symmetric semigroups and weak-limit censuses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    /// F is the conductor (least s with all k >= s representable)
    Paper,
    /// F is the largest non-representable integer
    Classic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Definition,
    Lemma3,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Theorem1,
    Johnson,
    BrauerShockley,
    Theorem2,
    Notice,
    Lemma3Equivalence,
    Sylvester,
    Oracle,
}

impl From<VerifyTarget> for Identity {
    fn from(t: VerifyTarget) -> Self {
        match t {
            VerifyTarget::Theorem1 => Identity::Theorem1,
            VerifyTarget::Johnson => Identity::Johnson,
            VerifyTarget::BrauerShockley => Identity::BrauerShockley,
            VerifyTarget::Theorem2 => Identity::Theorem2,
            VerifyTarget::Notice => Identity::Notice,
            VerifyTarget::Lemma3Equivalence => Identity::Lemma3Equivalence,
            VerifyTarget::Sylvester => Identity::Sylvester,
            VerifyTarget::Oracle => Identity::Oracle,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print F, C, G, genus and symmetry of a semigroup
    Frobenius {
        #[arg(required = true, num_args = 2.., value_parser = clap::value_parser!(u64).range(1..))]
        generators: Vec<u64>,
        #[arg(long, value_enum, default_value = "paper")]
        convention: Convention,
    },
    /// List the gaps (non-representable non-negative integers)
    Gaps {
        #[arg(required = true, num_args = 2.., value_parser = clap::value_parser!(u64).range(1..))]
        generators: Vec<u64>,
    },
    /// Decide symmetry of a three-generator semigroup
    Symmetric {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        a1: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        a2: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        a3: u64,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Check an identity on every coprime tuple up to a bound
    Verify {
        #[arg(value_enum)]
        identity: VerifyTarget,
        #[arg(long = "max", value_parser = clap::value_parser!(u64).range(3..))]
        max: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Enumerate cubes around N*a and report symmetric and coprime fractions
    Census {
        /// Key-value config file; flags override its values
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        a: Option<String>,
        /// N:r pairs, comma-separated
        #[arg(long)]
        schedule: Option<String>,
        #[arg(long = "n-list")]
        n_list: Option<String>,
        #[arg(long = "r-rule")]
        r_rule: Option<String>,
        #[arg(long)]
        epsilon: Option<String>,
        /// 'ln' or a number
        #[arg(long)]
        d0: Option<String>,
        /// 'paper' ((2r)^3) or 'exact' ((2r+1)^3)
        #[arg(long)]
        normalization: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r1: Option<i64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Evaluate the analytic bound on the symmetric fraction
    Bound {
        #[arg(long)]
        a: String,
        #[arg(long = "N", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r1: i64,
        /// 'ln' or a number
        #[arg(long, default_value = "ln")]
        d0: String,
        #[arg(long, default_value = "0.01")]
        epsilon: String,
    },
    /// Check that every coprime (4N+2, 6N+3, a3 N + r3) is symmetric
    Counterexample {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long = "a3-max", default_value_t = 10)]
        a3_max: u64,
        #[arg(long = "r3-span", default_value_t = 3)]
        r3_span: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Frobenius { generators, convention } => {
            let gens = GeneratorTuple::coprime(&generators)?;
            let s = frobenius_number(&gens)?;
            match convention {
                Convention::Paper => println!(
                    "F={} C={} G={} genus={} symmetric={}",
                    s.f, s.c, s.g, s.genus, s.symmetric
                ),
                Convention::Classic => println!(
                    "F={} conductor={} G={} genus={} symmetric={}",
                    s.classic_frobenius(),
                    s.f,
                    s.g,
                    s.genus,
                    s.symmetric
                ),
            }
        }
        Command::Gaps { generators } => {
            let list = gaps(&GeneratorTuple::coprime(&generators)?)?;
            let text: Vec<String> = list.iter().map(u64::to_string).collect();
            println!("{}", text.join(" "));
        }
        Command::Symmetric { a1, a2, a3, method } => {
            let v = is_symmetric_lemma3(a1, a2, a3)?;
            let lemma = match v.witness_index {
                Some(i) => format!(
                    "lemma3={} witness={} d={} reduced=({},{})",
                    v.by_lemma3, i, v.d_pair, v.reduced_pair.0, v.reduced_pair.1
                ),
                None => format!("lemma3={}", v.by_lemma3),
            };
            match method {
                Method::Definition => println!("definition={}", v.by_definition),
                Method::Lemma3 => println!("{lemma}"),
                Method::Both => {
                    println!("definition={} {lemma}", v.by_definition);
                    if v.by_definition != v.by_lemma3 {
                        return Err(CliError::VerificationFailed(format!(
                            "definition and membership criterion disagree on ({a1}, {a2}, {a3})"
                        )));
                    }
                }
            }
        }
        Command::Verify { identity, max, threads } => {
            let identity = Identity::from(identity);
            let pool = parallel::pool(threads)?;
            let report = parallel::run_exhaustive(identity, identity.default_arity(), max, &pool)?;
            println!(
                "identity={} max={} checked={} failures={}",
                report.identity,
                report.range_bound,
                report.tuples_checked,
                report.failures.len()
            );
            for f in &report.failures {
                let t: Vec<String> = f.iter().map(u64::to_string).collect();
                println!("failure: {}", t.join(","));
            }
            if !report.passed() {
                return Err(CliError::VerificationFailed(format!(
                    "{} failed on {} tuples",
                    report.identity,
                    report.failures.len()
                )));
            }
        }
        Command::Census {
            config,
            a,
            schedule,
            n_list,
            r_rule,
            epsilon,
            d0,
            normalization,
            r1,
            format,
            out,
            threads,
        } => {
            let file = match config {
                Some(path) => CensusOptions::parse_file(&fs::read_to_string(path)?)?,
                None => CensusOptions::default(),
            };
            let flags = CensusOptions {
                a: a.as_deref().map(config::parse_triple).transpose()?,
                schedule: schedule.as_deref().map(config::parse_schedule).transpose()?,
                n_list: n_list.as_deref().map(config::parse_list).transpose()?,
                r_rule: r_rule.as_deref().map(str::parse::<RRule>).transpose()?,
                epsilon: epsilon.as_deref().map(config::parse_positive_f64).transpose()?,
                d0: d0.as_deref().map(config::parse_d0).transpose()?,
                normalization: normalization
                    .as_deref()
                    .map(config::parse_normalization)
                    .transpose()?,
                r1,
            };
            let config = file.overlay(flags).build()?;
            let records = parallel::run_census(&config, &parallel::pool(threads)?)?;
            let text = match format {
                Format::Csv => output::census_csv(&records),
                Format::Json => output::census_json(&records),
            };
            match out {
                Some(path) => fs::write(path, text)?,
                None => std::io::stdout().write_all(text.as_bytes())?,
            }
        }
        Command::Bound { a, n, r, r1, d0, epsilon } => {
            let d0 = match config::parse_d0(&d0)? {
                D0Rule::LnR => bound::d0_ln(r),
                D0Rule::Explicit(v) => v,
            };
            let params = BoundParams {
                a: config::parse_triple(&a)?,
                n,
                r,
                r1,
                d0,
                epsilon: config::parse_positive_f64(&epsilon)?,
            };
            println!(
                "D0={} U1={} U2={} eq2_bound={}",
                format_sig(d0),
                format_sig(bound::u1_sum(&params)?),
                format_sig(bound::u2_sum(&params)?),
                format_sig(bound::eq2_bound(&params)?)
            );
        }
        Command::Counterexample { n_max, a3_max, r3_span } => {
            let report = census::counterexample_sweep(n_max, a3_max, r3_span)?;
            println!(
                "n_max={} checked={} coprime={} failures={}",
                n_max,
                report.checked,
                report.coprime_members,
                report.failures.len()
            );
            for (n, a3, r3) in &report.failures {
                println!("failure: N={n} a3={a3} r3={r3}");
            }
            if !report.failures.is_empty() {
                return Err(CliError::VerificationFailed("family member not symmetric".into()));
            }
        }
    }
    Ok(())
}
