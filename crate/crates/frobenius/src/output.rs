//! Decimal formatting and census serialization.

use std::fmt::Write as _;

use frobenius_core::census::CensusRecord;
use serde::Serialize;

pub const CSV_HEADER: &str = "N,r,points_total,coprime_count,symmetric_count,W_all,W_coprime,coprime_fraction,U1_bound,U2_bound,eq2_bound";

/// Plain decimal with 10 significant digits, `.` separator, no exponent.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.000000000".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit (9.9999999996 -> 10.000000000)
    let digits = s.chars().filter(char::is_ascii_digit).count();
    let leading_zeros = s
        .trim_start_matches('-')
        .chars()
        .take_while(|&c| c == '0' || c == '.')
        .filter(|&c| c == '0')
        .count();
    if digits - leading_zeros > 10 && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

pub fn census_csv(records: &[CensusRecord]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.r,
            r.points_total,
            r.coprime_count,
            r.symmetric_count,
            format_sig(r.w_all),
            format_sig(r.w_coprime),
            format_sig(r.coprime_fraction),
            opt(r.u1_bound),
            opt(r.u2_bound),
            opt(r.eq2_bound),
        )
        .expect("writing to a String");
    }
    out
}

#[derive(Serialize)]
struct JsonRecord {
    #[serde(rename = "N")]
    n: u64,
    r: u64,
    points_total: u64,
    coprime_count: u64,
    symmetric_count: u64,
    #[serde(rename = "W_all")]
    w_all: serde_json::Number,
    #[serde(rename = "W_coprime")]
    w_coprime: serde_json::Number,
    coprime_fraction: serde_json::Number,
    #[serde(rename = "U1_bound")]
    u1_bound: Option<serde_json::Number>,
    #[serde(rename = "U2_bound")]
    u2_bound: Option<serde_json::Number>,
    eq2_bound: Option<serde_json::Number>,
}

fn number(x: f64) -> serde_json::Number {
    format_sig(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .expect("finite census value")
}

pub fn census_json(records: &[CensusRecord]) -> String {
    let rows: Vec<JsonRecord> = records
        .iter()
        .map(|r| JsonRecord {
            n: r.n,
            r: r.r,
            points_total: r.points_total,
            coprime_count: r.coprime_count,
            symmetric_count: r.symmetric_count,
            w_all: number(r.w_all),
            w_coprime: number(r.w_coprime),
            coprime_fraction: number(r.coprime_fraction),
            u1_bound: r.u1_bound.map(number),
            u2_bound: r.u2_bound.map(number),
            eq2_bound: r.eq2_bound.map(number),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("serializable records");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(format_sig(1.157625), "1.157625000");
        assert_eq!(format_sig(0.8319073), "0.8319073000");
        assert_eq!(format_sig(0.0001234), "0.0001234000000");
        assert_eq!(format_sig(123.0), "123.0000000");
        assert_eq!(format_sig(0.0), "0.000000000");
        assert_eq!(format_sig(9.99999999996), "10.00000000");
        assert_eq!(format_sig(12345678901.0), "12345678901");
        assert_eq!(format_sig(-2.5), "-2.500000000");
    }
}
