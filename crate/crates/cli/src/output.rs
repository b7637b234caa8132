//! Rendering of reports and command bodies as JSON, CSV or text.

use serde::Serialize;
use serde_json::Value as Json;

use dirac_maxwell::report::{CheckReport, DiscrepancyEntry, Value};
use dirac_maxwell::suites::{OutputFormat, Report};

fn split(v: &Value) -> (f64, f64) {
    match v {
        Value::Real(x) => (*x, 0.0),
        Value::Complex([a, b]) => (*a, *b),
    }
}

#[derive(Serialize)]
struct Row<'a> {
    kind: &'a str,
    id: &'a str,
    claim: &'a str,
    claimed_re: f64,
    claimed_im: f64,
    computed_re: f64,
    computed_im: f64,
    abs_err: Option<f64>,
    rel_err: Option<f64>,
    tol_abs: Option<f64>,
    tol_rel: Option<f64>,
    ratio: Option<f64>,
    verdict: &'a str,
    notes: &'a str,
}

fn check_row(c: &CheckReport) -> Row<'_> {
    let (a, b) = split(&c.claimed);
    let (x, y) = split(&c.computed);
    Row {
        kind: "check",
        id: &c.id,
        claim: &c.claim,
        claimed_re: a,
        claimed_im: b,
        computed_re: x,
        computed_im: y,
        abs_err: Some(c.abs_err),
        rel_err: Some(c.rel_err),
        tol_abs: Some(c.tol_abs),
        tol_rel: Some(c.tol_rel),
        ratio: None,
        verdict: c.verdict.as_str(),
        notes: &c.notes,
    }
}

fn ledger_row(e: &DiscrepancyEntry) -> Row<'_> {
    let (a, b) = split(&e.stated);
    let (x, y) = split(&e.computed);
    Row {
        kind: "ledger",
        id: &e.id,
        claim: &e.equation,
        claimed_re: a,
        claimed_im: b,
        computed_re: x,
        computed_im: y,
        abs_err: None,
        rel_err: None,
        tol_abs: None,
        tol_rel: None,
        ratio: e.ratio,
        verdict: "ledgered",
        notes: &e.notes,
    }
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(|e| e.to_string())?;
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn fmt_value(v: &Value) -> String {
    match v {
        Value::Real(x) => format!("{x:e}"),
        Value::Complex([a, b]) => format!("{a:e}{b:+e}i"),
    }
}

pub fn render_report(report: &Report, format: OutputFormat) -> Result<String, String> {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => csv_string(|w| {
            for c in &report.checks {
                w.serialize(check_row(c))?;
            }
            for e in &report.ledger {
                w.serialize(ledger_row(e))?;
            }
            Ok(())
        }),
        OutputFormat::Text => {
            let mut out = String::new();
            for c in &report.checks {
                out.push_str(&format!(
                    "{:<8} {}  claimed={} computed={} rel_err={:e}\n",
                    c.verdict.as_str().to_uppercase(),
                    c.id,
                    fmt_value(&c.claimed),
                    fmt_value(&c.computed),
                    c.rel_err
                ));
            }
            for e in &report.ledger {
                out.push_str(&format!(
                    "LEDGER   {}  stated={} computed={}  {}\n",
                    e.id,
                    fmt_value(&e.stated),
                    fmt_value(&e.computed),
                    e.notes
                ));
            }
            let count = |v: &str| report.checks.iter().filter(|c| c.verdict.as_str() == v).count();
            out.push_str(&format!(
                "suite {}: {} pass, {} fail, {} ledgered, {} ledger entries\n",
                report.meta.suite,
                count("pass"),
                count("fail"),
                count("ledgered"),
                report.ledger.len()
            ));
            Ok(out)
        }
    }
}

pub fn to_json(body: &impl Serialize) -> Result<String, String> {
    serde_json::to_string_pretty(body)
        .map(|s| s + "\n")
        .map_err(|e| e.to_string())
}

/// Flattens nested JSON into `(dotted.path, scalar)` pairs in document order.
fn flatten(prefix: &str, v: &Json, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Json::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Json::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Json::String(s) => out.push((prefix.to_string(), s.clone())),
        Json::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// A command body as JSON, as `key,value` CSV rows, or as `key = value` text.
pub fn render_body(body: &impl Serialize, format: OutputFormat) -> Result<String, String> {
    if format == OutputFormat::Json {
        return to_json(body);
    }
    let v = serde_json::to_value(body).map_err(|e| e.to_string())?;
    let mut pairs = Vec::new();
    flatten("", &v, &mut pairs);
    match format {
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["key", "value"])?;
            for (k, x) in &pairs {
                w.write_record([k, x])?;
            }
            Ok(())
        }),
        _ => Ok(pairs.iter().map(|(k, x)| format!("{k} = {x}\n")).collect()),
    }
}

/// A list of flat records as a CSV table (header from the first record), a
/// JSON document, or aligned text.
pub fn render_table<T: Serialize>(meta: &impl Serialize, rows: &[T], format: OutputFormat) -> Result<String, String> {
    match format {
        OutputFormat::Json => to_json(&serde_json::json!({ "meta": meta, "rows": rows })),
        OutputFormat::Csv => csv_string(|w| {
            for r in rows {
                w.serialize(r)?;
            }
            Ok(())
        }),
        OutputFormat::Text => {
            let mut out = String::new();
            for r in rows {
                let v = serde_json::to_value(r).map_err(|e| e.to_string())?;
                let mut pairs = Vec::new();
                flatten("", &v, &mut pairs);
                let line: Vec<String> = pairs.iter().map(|(k, x)| format!("{k}={x}")).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            Ok(out)
        }
    }
}
