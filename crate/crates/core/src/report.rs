//! Plain-table, CSV and JSON renderings of every result type.
//!
//! All three formats are byte-deterministic. CSV fields never contain commas:
//! partitions are written as `(21;16;12)` and several of them are separated by
//! spaces. Big integers appear in JSON as decimal strings.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::optimizer::Optimum;
use crate::partition::Partition;
use crate::rates::RateSeries;
use crate::schur_weyl::DecompositionTable;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected table, csv or json)")),
        }
    }
}

pub(crate) fn serialize_decimal<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `x` rounded to 12 significant digits.
pub fn round_rate(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Fixed-point rendering with 12 significant digits.
pub fn fmt_rate(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{cell:<w$}");
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn tuples_csv(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_csv_tuple).collect::<Vec<_>>().join(" ")
}

fn tuples(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

pub fn render_decomposition(t: &DecompositionTable, format: Format) -> String {
    let sum = t.dimension_sum();
    let total = t.total_dimension();
    let marker = if sum == total { "consistent" } else { "inconsistent" };
    match format {
        Format::Json => to_json(&json!({
            "d": t.d,
            "n": t.n,
            "blocks": serde_json::to_value(&t.blocks).expect("blocks serialize"),
            "dimension_sum": sum.to_string(),
            "total": total.to_string(),
            "consistent": sum == total,
        })),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = t
                .blocks
                .iter()
                .map(|b| {
                    vec![b.partition.to_csv_tuple(), b.multiplicity.to_string(), b.dimension.to_string()]
                })
                .collect();
            rows.push(vec!["total".into(), sum.to_string(), marker.into()]);
            csv(&["partition", "multiplicity", "dimension"], &rows)
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = t
                .blocks
                .iter()
                .map(|b| {
                    vec![b.partition.to_string(), b.multiplicity.to_string(), b.dimension.to_string()]
                })
                .collect();
            let mut out = table(&["partition", "f", "g"], &rows);
            let _ = writeln!(out, "total = {}^{} = {total} (sum f*g = {sum}, {marker})", t.d, t.n);
            out
        }
    }
}

pub fn optimum_json(o: &Optimum) -> Value {
    serde_json::to_value(o).expect("optimum serializes")
}

pub fn render_optimum(o: &Optimum, format: Format) -> String {
    match format {
        Format::Json => to_json(&optimum_json(o)),
        Format::Csv => csv(
            &["d", "n", "method", "max_multiplicity", "tie", "argmax"],
            &[vec![
                o.d.to_string(),
                o.n.to_string(),
                o.method.to_string(),
                o.max_multiplicity.to_string(),
                o.tie.to_string(),
                tuples_csv(&o.argmax),
            ]],
        ),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "d = {}, n = {}, method = {}", o.d, o.n, o.method);
            let _ = writeln!(out, "max multiplicity = {}", o.max_multiplicity);
            let _ = writeln!(out, "argmax = {}", tuples(&o.argmax));
            let _ = writeln!(out, "tie = {}", o.tie);
            out
        }
    }
}

/// Rate of a single block.
#[derive(Clone, Debug, PartialEq)]
pub struct RateRow {
    pub partition: Partition,
    pub multiplicity: BigUint,
    pub rate: f64,
}

pub fn render_rate(r: &RateRow, format: Format) -> String {
    let (d, n) = (r.partition.d(), r.partition.n());
    match format {
        Format::Json => to_json(&json!({
            "d": d,
            "n": n,
            "partition": r.partition,
            "multiplicity": r.multiplicity.to_string(),
            "rate": round_rate(r.rate),
        })),
        Format::Csv => csv(
            &["d", "n", "partition", "multiplicity", "rate"],
            &[vec![
                d.to_string(),
                n.to_string(),
                r.partition.to_csv_tuple(),
                r.multiplicity.to_string(),
                fmt_rate(r.rate),
            ]],
        ),
        Format::Table => format!(
            "d = {d}, n = {n}, partition = {}\nmultiplicity = {}\nrate = {}\n",
            r.partition,
            r.multiplicity,
            fmt_rate(r.rate)
        ),
    }
}

pub fn render_rate_series(s: &RateSeries, format: Format) -> String {
    match format {
        Format::Json => {
            let entries: Vec<Value> = s
                .entries
                .iter()
                .map(|e| json!({"k": e.k, "n": e.n, "rate": round_rate(e.rate), "f_bits": e.f_bits}))
                .collect();
            to_json(&json!({"d": s.d, "entries": entries}))
        }
        Format::Csv | Format::Table => {
            let rows: Vec<Vec<String>> = s
                .entries
                .iter()
                .map(|e| vec![e.k.to_string(), e.n.to_string(), fmt_rate(e.rate), e.f_bits.to_string()])
                .collect();
            let header = ["k", "n", "rate", "f_bits"];
            if format == Format::Csv {
                csv(&header, &rows)
            } else {
                table(&header, &rows)
            }
        }
    }
}

/// One row of the qubit optimum table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QubitRow {
    pub n: u32,
    pub r_star: u32,
    #[serde(serialize_with = "serialize_decimal")]
    pub f: BigUint,
    pub floor_log2_f: u64,
}

pub fn render_qubit_table(rows: &[QubitRow], format: Format) -> String {
    match format {
        Format::Json => to_json(&serde_json::to_value(rows).expect("rows serialize")),
        Format::Csv | Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![r.n.to_string(), r.r_star.to_string(), r.f.to_string(), r.floor_log2_f.to_string()]
                })
                .collect();
            if format == Format::Csv {
                csv(&["n", "r_star", "f", "floor_log2_f"], &cells)
            } else {
                table(&["n", "r*", "f(n-r*,r*)", "floor(log2 f)"], &cells)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check_name: String,
    pub range: String,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(
        check_name: impl Into<String>,
        range: impl Into<String>,
        counterexamples: Vec<Counterexample>,
        elapsed: Duration,
    ) -> Self {
        let status = if counterexamples.is_empty() { Status::Pass } else { Status::Fail };
        Self {
            check_name: check_name.into(),
            range: range.into(),
            status,
            counterexamples,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Renders a report. Elapsed time is left out so output stays reproducible.
pub fn render_report(r: &VerificationReport, format: Format) -> String {
    let status = if r.passed() { "pass" } else { "fail" };
    match format {
        Format::Json => to_json(&json!({
            "check": r.check_name,
            "range": r.range,
            "status": r.status,
            "counterexamples": r.counterexamples,
        })),
        Format::Csv => {
            let mut rows = vec![vec![
                r.check_name.clone(),
                r.range.replace(',', ";"),
                status.into(),
                String::new(),
                String::new(),
                String::new(),
            ]];
            for c in &r.counterexamples {
                rows.push(vec![
                    r.check_name.clone(),
                    r.range.replace(',', ";"),
                    status.into(),
                    c.input.replace(',', ";"),
                    c.expected.replace(',', ";"),
                    c.actual.replace(',', ";"),
                ]);
            }
            csv(&["check", "range", "status", "input", "expected", "actual"], &rows)
        }
        Format::Table => {
            let mut out = format!(
                "{}: {} over {} ({} counterexamples)\n",
                r.check_name,
                status,
                r.range,
                r.counterexamples.len()
            );
            for c in &r.counterexamples {
                let _ = writeln!(out, "  {}: expected {}, got {}", c.input, c.expected, c.actual);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::maximize_qubit_closed;
    use crate::schur_weyl::decomposition;

    #[test]
    fn rate_formatting() {
        assert_eq!(fmt_rate(0.0), "0");
        assert_eq!(fmt_rate(0.649_212_002_014_23), "0.649212002014");
        assert_eq!(fmt_rate(1.0), "1.00000000000");
        assert_eq!(round_rate(0.123_456_789_012_345), 0.123_456_789_012);
    }

    #[test]
    fn decomposition_csv_has_no_inner_commas() {
        let out = render_decomposition(&decomposition(3, 4).unwrap(), Format::Csv);
        for line in out.lines() {
            assert_eq!(line.matches(',').count(), 2, "{line}");
        }
        assert!(out.ends_with("total,81,consistent\n"));
    }

    #[test]
    fn optimum_json_shape() {
        let o = maximize_qubit_closed(7).unwrap();
        let text = render_optimum(&o, Format::Json);
        let v: Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["d", "n", "max_multiplicity", "argmax", "tie", "method"]);
        assert_eq!(v["max_multiplicity"], "14");
        assert_eq!(v["argmax"], json!([[5, 2], [4, 3]]));
        assert_eq!(v["method"], "closed_d2");
    }

    #[test]
    fn optimum_csv() {
        let o = maximize_qubit_closed(7).unwrap();
        assert_eq!(
            render_optimum(&o, Format::Csv),
            "d,n,method,max_multiplicity,tie,argmax\n2,7,closed_d2,14,true,(5;2) (4;3)\n"
        );
    }

    #[test]
    fn report_status_follows_counterexamples() {
        let ok = VerificationReport::new("x", "n <= 3", vec![], Duration::ZERO);
        assert_eq!(ok.status, Status::Pass);
        let bad = VerificationReport::new(
            "x",
            "n <= 3",
            vec![Counterexample { input: "a".into(), expected: "1".into(), actual: "2".into() }],
            Duration::from_secs(1),
        );
        assert_eq!(bad.status, Status::Fail);
        assert!(render_report(&bad, Format::Table).contains("expected 1, got 2"));
    }
}
