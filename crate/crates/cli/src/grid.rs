//! Parsers for numeric flags: numbers with optional `p/q` fractions,
//! `A:B:tau` triples and coefficient lists.

use std::fs;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// A decimal number or a fraction `p/q`, e.g. `4/3`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
            if q == 0.0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            p / q
        }
        None => s.parse().map_err(|_| format!("not a number: {s:?}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not a finite number: {s:?}"))
    }
}

/// One `A:B:tau` triple, e.g. `1:-1:0.2`.
pub fn parse_triple(t: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = t.split(':').collect();
    match parts[..] {
        [a, b, tau] => Ok((parse_number(a)?, parse_number(b)?, parse_number(tau)?)),
        _ => Err(format!("expected A:B:tau, got {t:?}")),
    }
}

/// Coefficients `a_2, a_3, …` given inline as `[x, y, …]` or as a path to a
/// file holding such a list (brackets optional, commas or whitespace).
pub fn parse_coeffs(s: &str) -> CliResult<Vec<f64>> {
    let t = s.trim();
    let text = if t.starts_with('[') { t.to_string() } else { fs::read_to_string(Path::new(s))? };
    let body = text.trim().trim_start_matches('[').trim_end_matches(']');
    body.split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| parse_number(x).map_err(CliError::usage))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_and_fractions() {
        assert_eq!(parse_number("0.25").unwrap(), 0.25);
        assert_eq!(parse_number("4/3").unwrap(), 4.0 / 3.0);
        assert_eq!(parse_number(" -1 ").unwrap(), -1.0);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("inf").is_err());
        assert!(parse_number("x").is_err());
    }

    #[test]
    fn triples() {
        assert_eq!(parse_triple("1:-1:0.2").unwrap(), (1.0, -1.0, 0.2));
        assert_eq!(parse_triple("0.5:0:1/2").unwrap(), (0.5, 0.0, 0.5));
        assert!(parse_triple("1:2").is_err());
    }

    #[test]
    fn inline_coeffs() {
        assert_eq!(parse_coeffs("[]").unwrap(), Vec::<f64>::new());
        assert_eq!(parse_coeffs("[0.5, 0.25]").unwrap(), vec![0.5, 0.25]);
        assert_eq!(parse_coeffs("[-0.1]").unwrap(), vec![-0.1]);
        assert!(parse_coeffs("[a]").is_err());
    }
}
