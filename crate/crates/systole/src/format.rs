//! Deterministic `key = value` text reports.
//!
//! All command output goes through a [`Report`] so that repeated runs with the
//! same inputs produce byte-identical text: floats are printed with a fixed
//! shortest-roundtrip rule (Rust's `Display` for `f64`), sequences in a fixed
//! order, and nothing depends on hash-map iteration.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

/// An ordered list of `key = value` lines plus optional multiline blocks.
#[derive(Debug, Default, Clone)]
pub struct Report {
    lines: Vec<String>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn field(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.lines.push(format!("{key} = {value}"));
        self
    }

    pub fn float(&mut self, key: &str, value: f64) -> &mut Self {
        self.field(key, fmt_f64(value))
    }

    pub fn floats(&mut self, key: &str, values: &[f64]) -> &mut Self {
        let body: Vec<String> = values.iter().map(|&v| fmt_f64(v)).collect();
        self.field(key, format!("[{}]", body.join(", ")))
    }

    pub fn integers<T: std::fmt::Display>(&mut self, key: &str, values: &[T]) -> &mut Self {
        let body: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        self.field(key, format!("[{}]", body.join(", ")))
    }

    /// A labelled block of pre-formatted rows, one per line, indented.
    pub fn block<T: std::fmt::Display>(&mut self, key: &str, rows: &[T]) -> &mut Self {
        self.lines.push(format!("{key} = ["));
        for row in rows {
            self.lines.push(format!("  {row}"));
        }
        self.lines.push("]".to_string());
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

/// Fixed float formatting: shortest string that round-trips, with an explicit
/// `inf` / `-inf` spelling and `-0` collapsed to `0`.
pub fn fmt_f64(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let a = value.abs();
    if a >= 1e16 || a < 1e-5 {
        format!("{value:e}")
    } else {
        format!("{value}")
    }
}

/// `p/q` (or just `p` when the denominator is 1).
pub fn fmt_rational(value: &BigRational) -> String {
    if value.denom() == &BigInt::from(1) {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// A matrix row of rationals: `p/q p r/s ...`.
pub fn fmt_rational_row(row: &[BigRational]) -> String {
    let parts: Vec<String> = row.iter().map(fmt_rational).collect();
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn report_layout() {
        let mut r = Report::new();
        r.field("name", "lehmer").float("mahler", 1.1762808182599175);
        r.integers("coeffs", &[1i64, -1, 0]);
        r.block("rows", &["1 0", "0 1"]);
        assert_eq!(
            r.render(),
            "name = lehmer\nmahler = 1.1762808182599176\ncoeffs = [1, -1, 0]\nrows = [\n  1 0\n  0 1\n]\n"
        );
    }

    #[test]
    fn float_spelling() {
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(-0.0), "0");
        assert_eq!(fmt_f64(f64::INFINITY), "inf");
        assert_eq!(fmt_f64(f64::NEG_INFINITY), "-inf");
        assert_eq!(fmt_f64(0.1), "0.1");
        assert_eq!(fmt_f64(1e300), "1e300");
        assert_eq!(fmt_f64(-2.5e-9), "-2.5e-9");
        assert_eq!(fmt_f64(12345.678), "12345.678");
    }

    #[test]
    fn rational_spelling() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(fmt_rational(&half), "1/2");
        assert_eq!(fmt_rational(&BigRational::one()), "1");
        let neg = BigRational::new(BigInt::from(-3), BigInt::from(4));
        assert_eq!(fmt_rational(&neg), "-3/4");
        assert_eq!(fmt_rational_row(&[half, neg]), "1/2 -3/4");
    }
}
