//! Census configuration from `key = value` text files and command-line flags.
//!
//! ```text
//! # base triple and schedule
//! a = 3,5,7
//! n_list = 100,400,1600,6400
//! r_rule = sqrt
//! epsilon = 0.01
//! d0 = ln
//! normalization = paper
//! ```
//!
//! `schedule = 100:10,400:20` may replace `n_list`/`r_rule`. Flags given on
//! the command line override values from the file.

use std::str::FromStr;

use frobenius_core::census::{CensusConfig, D0Rule, Normalization, SchedulePoint};

use crate::error::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RRule {
    /// `r = floor(sqrt(N))`
    Sqrt,
    /// `r = floor(ln(N))`
    Log,
}

impl RRule {
    pub fn radius(self, n: u64) -> u64 {
        match self {
            RRule::Sqrt => n.isqrt(),
            RRule::Log => (n as f64).ln().floor() as u64,
        }
    }
}

impl FromStr for RRule {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "sqrt" => Ok(RRule::Sqrt),
            "log" => Ok(RRule::Log),
            _ => Err(usage(format!("unknown r rule '{s}' (expected sqrt or log)"))),
        }
    }
}

pub fn parse_triple(s: &str) -> Result<[u64; 3], CliError> {
    let values = parse_list(s)?;
    let triple: [u64; 3] = values
        .try_into()
        .map_err(|_| usage(format!("expected three comma-separated integers, got '{s}'")))?;
    if triple.contains(&0) {
        return Err(usage("base triple must be positive"));
    }
    Ok(triple)
}

pub fn parse_list(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| usage(format!("'{}' is not a non-negative integer", v.trim())))
        })
        .collect()
}

pub fn parse_schedule(s: &str) -> Result<Vec<SchedulePoint>, CliError> {
    s.split(',')
        .map(|item| {
            let (n, r) = item
                .trim()
                .split_once(':')
                .ok_or_else(|| usage(format!("schedule entry '{item}' is not N:r")))?;
            let parse = |v: &str| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| usage(format!("schedule entry '{item}' is not N:r")))
            };
            Ok(SchedulePoint { n: parse(n)?, r: parse(r)? })
        })
        .collect()
}

pub fn parse_d0(s: &str) -> Result<D0Rule, CliError> {
    if s == "ln" {
        return Ok(D0Rule::LnR);
    }
    s.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .map(D0Rule::Explicit)
        .ok_or_else(|| usage(format!("D0 must be 'ln' or a number, got '{s}'")))
}

pub fn parse_normalization(s: &str) -> Result<Normalization, CliError> {
    match s {
        "paper" => Ok(Normalization::Paper2rCubed),
        "exact" => Ok(Normalization::ExactPointCount),
        _ => Err(usage(format!("normalization must be 'paper' or 'exact', got '{s}'"))),
    }
}

pub fn parse_positive_f64(s: &str) -> Result<f64, CliError> {
    s.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite() && *v > 0.0)
        .ok_or_else(|| usage(format!("expected a positive number, got '{s}'")))
}

/// Every field optional so that file values and flags can be layered.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CensusOptions {
    pub a: Option<[u64; 3]>,
    pub schedule: Option<Vec<SchedulePoint>>,
    pub n_list: Option<Vec<u64>>,
    pub r_rule: Option<RRule>,
    pub epsilon: Option<f64>,
    pub d0: Option<D0Rule>,
    pub normalization: Option<Normalization>,
    pub r1: Option<i64>,
}

impl CensusOptions {
    pub fn parse_file(text: &str) -> Result<Self, CliError> {
        let mut opts = CensusOptions::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("line {}: expected key = value", lineno + 1)))?;
            let value = value.trim();
            match key.trim() {
                "a" => opts.a = Some(parse_triple(value)?),
                "schedule" => opts.schedule = Some(parse_schedule(value)?),
                "n_list" => opts.n_list = Some(parse_list(value)?),
                "r_rule" => opts.r_rule = Some(value.parse()?),
                "epsilon" => opts.epsilon = Some(parse_positive_f64(value)?),
                "d0" => opts.d0 = Some(parse_d0(value)?),
                "normalization" => opts.normalization = Some(parse_normalization(value)?),
                "r1" => {
                    opts.r1 = Some(
                        value
                            .parse()
                            .map_err(|_| usage(format!("r1 must be an integer, got '{value}'")))?,
                    )
                }
                other => {
                    return Err(usage(format!("line {}: unknown key '{other}'", lineno + 1)));
                }
            }
        }
        Ok(opts)
    }

    /// Fields set in `top` win.
    pub fn overlay(self, top: CensusOptions) -> CensusOptions {
        CensusOptions {
            a: top.a.or(self.a),
            schedule: top.schedule.or(self.schedule),
            n_list: top.n_list.or(self.n_list),
            r_rule: top.r_rule.or(self.r_rule),
            epsilon: top.epsilon.or(self.epsilon),
            d0: top.d0.or(self.d0),
            normalization: top.normalization.or(self.normalization),
            r1: top.r1.or(self.r1),
        }
    }

    pub fn build(self) -> Result<CensusConfig, CliError> {
        let a = self.a.ok_or_else(|| usage("census needs --a"))?;
        let schedule = match (self.schedule, self.n_list) {
            (Some(_), Some(_)) => {
                return Err(usage("give either a schedule or an N list, not both"));
            }
            (Some(s), None) => s,
            (None, Some(ns)) => {
                let rule = self.r_rule.unwrap_or(RRule::Sqrt);
                ns.into_iter()
                    .map(|n| SchedulePoint { n, r: rule.radius(n) })
                    .collect()
            }
            (None, None) => return Err(usage("census needs --schedule or --n-list")),
        };
        let mut config = CensusConfig::new(a, schedule);
        if let Some(e) = self.epsilon {
            config.epsilon = e;
        }
        if let Some(d0) = self.d0 {
            config.d0_rule = d0;
        }
        if let Some(n) = self.normalization {
            config.normalization = n;
        }
        if let Some(r1) = self.r1 {
            config.r1 = r1;
        }
        config.validate()?;
        Ok(config)
    }
}
