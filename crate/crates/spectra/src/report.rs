//! Deterministic report serialization.
//!
//! JSON output is byte-stable: struct field order is fixed by declaration
//! and every float prints as `{:.16e}` (17 significant digits, lossless for
//! f64), so identical inputs yield identical bytes regardless of platform
//! or thread count. Human-facing formatting rounds to 6 decimals instead.

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter, Serializer};
use std::io;

/// Schema tag carried by every emitted JSON document.
pub const SCHEMA: &str = "spectra-report/1";

/// Serializes any report as a single-line JSON document with 17-significant
/// digit floats.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, SciFloatFormatter(CompactFormatter));
    value.serialize(&mut ser).expect("report serialization cannot fail");
    String::from_utf8(out).expect("serde_json emits utf-8")
}

/// Lossless float text, also used for CSV cells.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// 6-decimal rounding for human-readable output.
pub fn fmt_human(x: f64) -> String {
    format!("{x:.6}")
}

struct SciFloatFormatter(CompactFormatter);

impl Formatter for SciFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Sample {
        a: f64,
        b: Option<f64>,
        c: u64,
    }

    #[test]
    fn floats_print_with_17_significant_digits() {
        let s = to_json_string(&Sample { a: 3.0, b: None, c: 7 });
        assert_eq!(s, r#"{"a":3.0000000000000000e0,"b":null,"c":7}"#);
    }

    #[test]
    fn scientific_notation_round_trips() {
        let x = (1.0 + 17.0f64.sqrt()) / 2.0;
        let s = fmt_float(x);
        let back: f64 = s.parse().unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn json_floats_parse_back() {
        let s = to_json_string(&Sample { a: 2.0f64.sqrt(), b: Some(-1.5e-12), c: 0 });
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["a"].as_f64().unwrap(), 2.0f64.sqrt());
        assert_eq!(v["b"].as_f64().unwrap(), -1.5e-12);
    }
}
