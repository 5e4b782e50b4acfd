//! The `t,probability` series CSV.
//!
//! Probabilities are written in plain decimal notation with at least 17
//! significant digits, so parsing a written file reproduces every value
//! bit for bit.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub const SERIES_HEADER: &str = "t,probability";

/// Plain decimal with at least 17 significant digits and 10 decimals.
pub fn format_probability(x: f64) -> String {
    let decimals = if x == 0.0 || !x.is_finite() {
        10
    } else {
        let exp = x.abs().log10().floor() as i64;
        (16 - exp).clamp(10, 340) as usize
    };
    format!("{x:.decimals$}")
}

pub fn write_series_csv(fp: &[f64]) -> String {
    let mut out = String::with_capacity(32 * (fp.len() + 1));
    out.push_str(SERIES_HEADER);
    out.push('\n');
    for (t, p) in fp.iter().enumerate() {
        let _ = writeln!(out, "{t},{}", format_probability(*p));
    }
    out
}

/// Parses a series written by [`write_series_csv`]. Rows must start at
/// `t = 0` and be consecutive; probabilities must be finite and in `[0, 1]`.
pub fn parse_series_csv(text: &str) -> Result<Vec<f64>> {
    let bad = |msg: String| Error::MalformedSeries(msg);
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim_end_matches('\r') == SERIES_HEADER => {}
        other => {
            return Err(bad(format!(
                "expected header `{SERIES_HEADER}`, found {other:?}"
            )))
        }
    }
    let mut fp = Vec::new();
    for (row, line) in lines.enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let (t, p) = line
            .split_once(',')
            .ok_or_else(|| bad(format!("row {row}: missing comma")))?;
        let t: usize = t
            .parse()
            .map_err(|e| bad(format!("row {row}: bad step `{t}`: {e}")))?;
        if t != fp.len() {
            return Err(bad(format!(
                "row {row}: expected step {}, found {t}",
                fp.len()
            )));
        }
        let p: f64 = p
            .parse()
            .map_err(|e| bad(format!("row {row}: bad probability `{p}`: {e}")))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(bad(format!("row {row}: probability {p} outside [0, 1]")));
        }
        fp.push(p);
    }
    if fp.is_empty() {
        return Err(bad("no data rows".into()));
    }
    Ok(fp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_decimal_formatting() {
        assert_eq!(format_probability(0.0), "0.0000000000");
        assert_eq!(format_probability(0.5), "0.50000000000000000");
        assert!(!format_probability(2.0e-4).contains('e'));
        assert!(!format_probability(1e-30).contains('e'));
    }

    #[test]
    fn round_trips_bitwise() {
        let values = [
            0.0,
            1.0,
            1.0 / 3.0,
            2.0 / 9900.0,
            0.9777214767735,
            1e-17,
            0.1 + 0.2,
        ];
        let parsed = parse_series_csv(&write_series_csv(&values)).unwrap();
        for (a, b) in values.iter().zip(&parsed) {
            assert_eq!(a.to_bits(), b.to_bits(), "{a}");
        }
    }

    #[test]
    fn rejects_malformed() {
        for text in [
            "",
            "t,p\n0,0.1\n",
            "t,probability\n",
            "t,probability\n1,0.1\n",
            "t,probability\n0,0.1\n2,0.1\n",
            "t,probability\n0,1.5\n",
            "t,probability\n0,NaN\n",
            "t,probability\n0;0.1\n",
            "t,probability\n-1,0.1\n",
        ] {
            assert!(
                matches!(parse_series_csv(text), Err(Error::MalformedSeries(_))),
                "{text:?}"
            );
        }
    }
}
