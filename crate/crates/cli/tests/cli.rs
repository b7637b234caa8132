//! End-to-end behaviour of the `dmv` binary.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::process::{Command, Output};

use serde_json::Value;

fn dmv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmv")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn verdicts(v: &Value) -> HashMap<String, usize> {
    let mut n = HashMap::new();
    for c in v["checks"].as_array().unwrap() {
        *n.entry(c["verdict"].as_str().unwrap().to_string()).or_default() += 1;
    }
    n
}

#[test]
fn algebra_suite_exits_zero() {
    let out = dmv(&["verify", "--suite", "algebra"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.iter().any(|id| id.contains("anticommutation")));
    assert!(ids.iter().any(|id| id.contains("group")));
}

#[test]
fn fierz_thousand_samples() {
    let out = dmv(&["verify", "--suite", "fierz", "--samples", "1000", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 1000);
    assert_eq!(verdicts(&v).get("pass"), Some(&1000));
}

#[test]
fn torus_suite_carries_ledger() {
    let out = dmv(&["verify", "--suite", "torus"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let ids: Vec<&str> = v["ledger"].as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    for want in ["torus/half-wave-charge/printed-prefactor", "torus/mass/amplitude-exponent", "planewave/special-values/off-shell"] {
        assert!(ids.contains(&want), "missing {want}");
    }
    assert!(verdicts(&v).get("ledgered").copied().unwrap_or(0) > 0);
    assert_eq!(verdicts(&v).get("fail"), None);
}

#[test]
fn sweep_rows_follow_closed_form() {
    let out = dmv(&["sweep-zeta", "--min", "0.05", "--max", "1.0", "--steps", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    let zi = headers.iter().position(|h| h == "zeta").unwrap();
    let ai = headers.iter().position(|h| h == "alpha_q").unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 20);
    for r in &rows {
        let z: f64 = r[zi].parse().unwrap();
        let a: f64 = r[ai].parse().unwrap();
        assert!((a - 2.0 * z * z / PI).abs() <= 1e-15 * a.max(1e-300) + 1e-18);
    }
}

#[test]
fn dump_canonical_matrices() {
    let out = dmv(&["dump-matrices", "--set", "canonical"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["set"]["a2"][0][3], serde_json::json!([0.0, -1.0]));
    for set in ["primed", "similarity", "two-sided"] {
        assert_eq!(dmv(&["dump-matrices", "--set", set]).status.code(), Some(0));
    }
}

#[test]
fn torus_body_radius() {
    let out = dmv(&["torus", "--units", "natural", "--zeta", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["model"]["r_s"], serde_json::json!(0.5));
}

#[test]
fn other_commands_run() {
    for args in [&["planewave", "--py", "1"][..], &["dynamics"], &["--units", "gaussian_cgs", "torus"]] {
        let out = dmv(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        json(&out);
    }
    let out = dmv(&["--format", "text", "dynamics"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains(" = "));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dmv(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(dmv(&["--zeta", "2", "torus"]).status.code(), Some(2));
    assert_eq!(dmv(&["--zeta", "0", "torus"]).status.code(), Some(2));
    assert_eq!(dmv(&["--samples", "0", "verify"]).status.code(), Some(2));
    assert_eq!(dmv(&["--quad-points", "8", "torus"]).status.code(), Some(2));
    assert_eq!(dmv(&["--tol-rel", "-1", "verify"]).status.code(), Some(2));
    assert_eq!(dmv(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn csv_report_round_trips() {
    let out = dmv(&["--format", "csv", "verify", "--suite", "torus"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers[0], "kind");
    assert!(headers.contains(&"rel_err".to_string()) && headers.contains(&"verdict".to_string()));
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    let js = json(&dmv(&["verify", "--suite", "torus"]));
    let n_checks = js["checks"].as_array().unwrap().len();
    let n_ledger = js["ledger"].as_array().unwrap().len();
    assert_eq!(rows.len(), n_checks + n_ledger);
    assert_eq!(rows.iter().filter(|r| &r[0] == "ledger").count(), n_ledger);
    // numeric columns parse back to the JSON values
    let first = &rows[0];
    let ci = headers.iter().position(|h| h == "computed_re").unwrap();
    let parsed: f64 = first[ci].parse().unwrap();
    assert_eq!(parsed, js["checks"][0]["computed"].as_f64().unwrap_or_else(|| js["checks"][0]["computed"][0].as_f64().unwrap()));
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("dmv-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("torus.json");
    let out = dmv(&["--out", path.to_str().unwrap(), "torus"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), dmv(&["torus"]).stdout);
    std::fs::remove_dir_all(&dir).ok();
}
