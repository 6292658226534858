//! CSV and JSON sweep reports.
//!
//! Rows appear in grid order. Floats are written with 17 significant digits
//! (`{:.16e}`), which round-trips every `f64`; non-finite values are written
//! as `inf`, `-inf` and `NaN` (as strings in JSON).

use std::io::{self, Write};

use clausen_core::{SweepPoint, SweepReport, Theorem, TheoremVerdict};
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

const POINT_COLUMNS: [&str; 5] = ["a_abs", "b", "c", "lambda", "alpha"];
const JANOWSKI_COLUMNS: [&str; 3] = ["A", "B", "tau_abs"];
const VERDICT_COLUMNS: [&str; 8] = [
    "cond_stated",
    "cond_derived",
    "criterion_brute",
    "deficit",
    "tail_bound",
    "terms_used",
    "closed_value",
    "skip_reason",
];

/// Column names of a report for `which`, in output order.
pub fn columns(which: Theorem) -> Vec<&'static str> {
    let mut cols: Vec<&str> = POINT_COLUMNS.to_vec();
    if which.uses_janowski() {
        cols.extend(JANOWSKI_COLUMNS);
    }
    cols.extend(VERDICT_COLUMNS);
    cols
}

pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.16e}")
    }
}

fn parse_f64(s: &str) -> CliResult<f64> {
    s.parse().map_err(|_| CliError::Parse(format!("bad float {s:?}")))
}

fn parse_bool(s: &str) -> CliResult<bool> {
    s.parse().map_err(|_| CliError::Parse(format!("bad boolean {s:?}")))
}

enum Cell {
    Float(f64),
    Bool(bool),
    Count(usize),
    Text(Option<String>),
}

fn cells(v: &TheoremVerdict, which: Theorem) -> Vec<Cell> {
    let p = &v.point;
    let mut out =
        vec![Cell::Float(p.a_abs), Cell::Float(p.b), Cell::Float(p.c), Cell::Float(p.lambda), Cell::Float(p.alpha)];
    if which.uses_janowski() {
        let (a, b, t) = p.janowski.unwrap_or((f64::NAN, f64::NAN, f64::NAN));
        out.extend([Cell::Float(a), Cell::Float(b), Cell::Float(t)]);
    }
    out.extend([
        Cell::Bool(v.condition_as_stated),
        Cell::Bool(v.condition_derived),
        Cell::Bool(v.criterion_brute),
        Cell::Float(v.deficit),
        Cell::Float(v.tail_bound),
        Cell::Count(v.terms_used),
        Cell::Float(v.closed_value),
        Cell::Text(v.skip_reason.clone()),
    ]);
    out
}

pub fn write_report<W: Write>(w: W, report: &SweepReport, format: Format) -> CliResult<()> {
    match format {
        Format::Csv => write_csv(w, report),
        Format::Json => write_json(w, report).map_err(CliError::from),
    }
}

fn write_csv<W: Write>(w: W, report: &SweepReport) -> CliResult<()> {
    let mut wr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
    wr.write_record(columns(report.theorem))?;
    for v in &report.verdicts {
        let row: Vec<String> = cells(v, report.theorem)
            .into_iter()
            .map(|c| match c {
                Cell::Float(x) => fmt_f64(x),
                Cell::Bool(b) => b.to_string(),
                Cell::Count(n) => n.to_string(),
                Cell::Text(t) => t.unwrap_or_default(),
            })
            .collect();
        wr.write_record(&row)?;
    }
    wr.flush()?;
    Ok(())
}

fn json_cell(c: Cell) -> String {
    match c {
        Cell::Float(x) if x.is_finite() => fmt_f64(x),
        Cell::Float(x) => format!("\"{}\"", fmt_f64(x)),
        Cell::Bool(b) => b.to_string(),
        Cell::Count(n) => n.to_string(),
        Cell::Text(None) => "null".into(),
        Cell::Text(Some(t)) => Value::String(t).to_string(),
    }
}

// Written by hand so that key order and float text are fixed.
fn write_json<W: Write>(mut w: W, report: &SweepReport) -> io::Result<()> {
    let cols = columns(report.theorem);
    if report.verdicts.is_empty() {
        return w.write_all(b"[]\n");
    }
    w.write_all(b"[\n")?;
    for (i, v) in report.verdicts.iter().enumerate() {
        let fields: Vec<String> =
            cols.iter().zip(cells(v, report.theorem)).map(|(k, c)| format!("\"{k}\":{}", json_cell(c))).collect();
        let sep = if i + 1 < report.verdicts.len() { "," } else { "" };
        writeln!(w, "  {{{}}}{sep}", fields.join(","))?;
    }
    w.write_all(b"]\n")
}

/// Parse a report emitted by [`write_report`] back into verdicts.
pub fn parse_report(text: &str, which: Theorem, format: Format) -> CliResult<Vec<TheoremVerdict>> {
    match format {
        Format::Csv => parse_csv(text, which),
        Format::Json => parse_json(text, which),
    }
}

fn verdict_from(get: &dyn Fn(&str) -> CliResult<Field>, which: Theorem) -> CliResult<TheoremVerdict> {
    let f = |k: &str| get(k)?.float();
    let janowski = if which.uses_janowski() { Some((f("A")?, f("B")?, f("tau_abs")?)) } else { None };
    let point =
        SweepPoint { a_abs: f("a_abs")?, b: f("b")?, c: f("c")?, lambda: f("lambda")?, alpha: f("alpha")?, janowski };
    Ok(TheoremVerdict {
        point,
        condition_as_stated: get("cond_stated")?.boolean()?,
        condition_derived: get("cond_derived")?.boolean()?,
        criterion_brute: get("criterion_brute")?.boolean()?,
        deficit: f("deficit")?,
        tail_bound: f("tail_bound")?,
        terms_used: get("terms_used")?.count()?,
        closed_value: f("closed_value")?,
        skip_reason: get("skip_reason")?.text(),
    })
}

enum Field {
    Raw(String),
    Json(Value),
}

impl Field {
    fn float(self) -> CliResult<f64> {
        match self {
            Field::Raw(s) | Field::Json(Value::String(s)) => parse_f64(&s),
            Field::Json(Value::Number(n)) => n.as_f64().ok_or_else(|| CliError::Parse(format!("bad float {n}"))),
            Field::Json(v) => Err(CliError::Parse(format!("expected a float, got {v}"))),
        }
    }

    fn boolean(self) -> CliResult<bool> {
        match self {
            Field::Raw(s) => parse_bool(&s),
            Field::Json(Value::Bool(b)) => Ok(b),
            Field::Json(v) => Err(CliError::Parse(format!("expected a boolean, got {v}"))),
        }
    }

    fn count(self) -> CliResult<usize> {
        match self {
            Field::Raw(s) => s.parse().map_err(|_| CliError::Parse(format!("bad count {s:?}"))),
            Field::Json(Value::Number(n)) => {
                n.as_u64().map(|n| n as usize).ok_or_else(|| CliError::Parse(format!("bad count {n}")))
            }
            Field::Json(v) => Err(CliError::Parse(format!("expected a count, got {v}"))),
        }
    }

    fn text(self) -> Option<String> {
        match self {
            Field::Raw(s) if s.is_empty() => None,
            Field::Raw(s) | Field::Json(Value::String(s)) => Some(s),
            Field::Json(_) => None,
        }
    }
}

fn parse_csv(text: &str, which: Theorem) -> CliResult<Vec<TheoremVerdict>> {
    let mut rd = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    if header != columns(which) {
        return Err(CliError::Parse(format!("unexpected header {header:?}")));
    }
    let mut out = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let get = |k: &str| -> CliResult<Field> {
            let i = header.iter().position(|h| h == k).expect("header checked above");
            Ok(Field::Raw(rec.get(i).unwrap_or_default().to_string()))
        };
        out.push(verdict_from(&get, which)?);
    }
    Ok(out)
}

fn parse_json(text: &str, which: Theorem) -> CliResult<Vec<TheoremVerdict>> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let rows = v.as_array().ok_or_else(|| CliError::Parse("expected a JSON array".into()))?;
    let cols = columns(which);
    rows.iter()
        .map(|row| {
            let obj = row.as_object().ok_or_else(|| CliError::Parse("expected an object".into()))?;
            if obj.len() != cols.len() || cols.iter().any(|k| !obj.contains_key(*k)) {
                return Err(CliError::Parse(format!("unexpected keys {:?}", obj.keys().collect::<Vec<_>>())));
            }
            let get = |k: &str| -> CliResult<Field> { Ok(Field::Json(obj[k].clone())) };
            verdict_from(&get, which)
        })
        .collect()
}

fn same_f64(x: f64, y: f64) -> bool {
    x.to_bits() == y.to_bits() || (x.is_nan() && y.is_nan())
}

/// Field-for-field equality with NaN equal to itself.
pub fn same_verdict(x: &TheoremVerdict, y: &TheoremVerdict) -> bool {
    let (p, q) = (&x.point, &y.point);
    let jan = match (p.janowski, q.janowski) {
        (None, None) => true,
        (Some(a), Some(b)) => same_f64(a.0, b.0) && same_f64(a.1, b.1) && same_f64(a.2, b.2),
        _ => false,
    };
    jan && same_f64(p.a_abs, q.a_abs)
        && same_f64(p.b, q.b)
        && same_f64(p.c, q.c)
        && same_f64(p.lambda, q.lambda)
        && same_f64(p.alpha, q.alpha)
        && x.condition_as_stated == y.condition_as_stated
        && x.condition_derived == y.condition_derived
        && x.criterion_brute == y.criterion_brute
        && same_f64(x.deficit, y.deficit)
        && same_f64(x.tail_bound, y.tail_bound)
        && x.terms_used == y.terms_used
        && same_f64(x.closed_value, y.closed_value)
        && x.skip_reason == y.skip_reason
}
