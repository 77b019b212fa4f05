//! End-to-end runs of the `semiramsey` binary: exit codes, JSON output and
//! certificate round trips.

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiramsey"))
        .args(args)
        .env_remove("RAMSEY_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let stdout = String::from_utf8(out.stdout).unwrap();
    (out.status.code().unwrap(), serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}")))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn emit_and_verify(dir: &Path, name: &str, args: &[&str]) -> Value {
    let cert = dir.join(name);
    let mut full = vec!["--emit-cert", path_str(&cert)];
    full.extend_from_slice(args);
    assert_eq!(code(&full), 0, "{args:?}");
    let (c, report) = json(&["verify", "--cert", path_str(&cert)]);
    assert_eq!((c, &report["verified"]), (0, &Value::Bool(true)), "{args:?}");
    serde_json::from_str(&std::fs::read_to_string(cert).unwrap()).unwrap()
}

#[test]
fn certificates_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = emit_and_verify(dir.path(), "g.json", &["grunwald", "--q", "2", "--F", "0,1,2"]);
    assert_eq!(g["kind"], "grunwald");
    assert_eq!(g["result"]["N"], 9);
    emit_and_verify(dir.path(), "m.json", &["mono", "--colors", "112211221", "--F", "0,1,2"]);
    emit_and_verify(dir.path(), "d.json", &["diffset", "--colors", "1212121212", "--F", "0,1", "--color", "1"]);
    emit_and_verify(dir.path(), "h.json", &["hitting", "--maps", "[[1,2,3,4,5,0]]", "--U", "0,1", "--T", "1", "--T", "2"]);
    emit_and_verify(dir.path(), "s.json", &["syndetic", "--D", "0,3,6,9,12,15,18", "--window", "0:18"]);
    emit_and_verify(dir.path(), "w.json", &["subshift", "--colors", "121212121212", "--shape", "0,1", "--periodic"]);
}

#[test]
fn forged_certificates_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut g = emit_and_verify(dir.path(), "g.json", &["grunwald", "--q", "2", "--F", "0,1,2"]);
    g["result"]["extremal"]["colors"] = Value::String("11221121".into());
    let forged = dir.path().join("forged.json");
    std::fs::write(&forged, g.to_string()).unwrap();
    let (c, report) = json(&["verify", "--cert", path_str(&forged)]);
    assert_eq!((c, &report["verified"]), (2, &Value::Bool(false)));
}

#[test]
fn grunwald_output_is_thread_independent() {
    let one = run(&["--json", "--threads", "1", "grunwald", "--q", "2", "--F", "0,1,3"]);
    let three = run(&["--json", "--threads", "3", "grunwald", "--q", "2", "--F", "0,1,3"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn budget_flag_and_environment() {
    assert_eq!(code(&["--budget", "5", "grunwald", "--q", "3", "--F", "0,1,2"]), 1);
    let out = Command::new(env!("CARGO_BIN_EXE_semiramsey"))
        .args(["grunwald", "--q", "3", "--F", "0,1,2"])
        .env("RAMSEY_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lower bound"));
}

#[test]
fn exit_codes() {
    // property holds
    assert_eq!(code(&["validate", "--preset", "nat:20"]), 0);
    assert_eq!(code(&["minimal", "--maps", "[[1,2,0]]"]), 0);
    // violation or counterexample
    assert_eq!(code(&["mono", "--colors", "11221122", "--F", "0,1,2"]), 2);
    assert_eq!(code(&["tds-validate", "--maps", "[[1,0],[0,0]]"]), 2);
    assert_eq!(code(&["lemma21", "--maps", "[[1,2,2]]", "--T", "1"]), 2);
    // malformed input and usage errors
    assert_eq!(code(&["no-such-command"]), 1);
    assert_eq!(code(&["grunwald", "--q", "2", "--F", "0,1", "--no-such-flag"]), 1);
    assert_eq!(code(&["hitting", "--maps", "[[1,0]]", "--U", "", "--T", "1"]), 1);
    assert_eq!(code(&["equidist", "--coeffs", "0.5,0", "--T", "10"]), 1);
}

#[test]
fn structure_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("z4.json");
    let add: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a * b) % 4).collect()).collect();
    let file = serde_json::json!({"kind": "semiring", "size": 4, "add": add, "mul": mul, "zero": 0, "unit": 1});
    std::fs::write(&good, file.to_string()).unwrap();
    let (c, report) = json(&["validate", "--file", path_str(&good)]);
    assert_eq!((c, &report["valid"]), (0, &Value::Bool(true)));

    let mut broken = file.clone();
    broken["add"][1][1] = 3.into();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, broken.to_string()).unwrap();
    let (c, report) = json(&["validate", "--file", path_str(&bad)]);
    assert_eq!(c, 2);
    assert!(!report["violations"].as_array().unwrap().is_empty());
}

#[test]
fn dynamics_commands() {
    let (c, h) = json(&["hitting", "--maps", "[[1,2,3,4,5,0]]", "--U", "0,1", "--T", "1", "--T", "2", "--window", "0:12"]);
    assert_eq!(c, 0);
    assert_eq!(h["N"], serde_json::json!([0, 6, 12]));

    let (c, s) = json(&["semigroup", "--maps", "[[2,3,4,5,0,1],[3,4,5,0,1,2]]"]);
    assert_eq!(c, 0);
    assert_eq!(s["elements"].as_array().unwrap().len(), 6);

    let (c, r) = json(&["lemma21", "--maps", "[[1,2,3,0]]", "--T", "1", "--T", "3"]);
    assert_eq!(c, 0);
    assert_eq!(r["sigma"].as_array().unwrap().len(), 8);
    assert_eq!(r["minimal"], true);

    let (c, e) = json(&["equidist", "--coeffs", "0,1.4142135623730951", "--T", "1000"]);
    assert_eq!(c, 0);
    assert!(e["time_average"].as_f64().unwrap().abs() < 0.01);
}

#[test]
fn oracle_diff_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("diff.json");
    assert_eq!(code(&["oracle-diff", "--suite", "mono", "--seed", "3", "--count", "10", "--out", path_str(&out)]), 0);
    let reports: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert!(reports.as_array().unwrap().iter().all(|r| r["agree"] == true));
}
