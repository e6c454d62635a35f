use std::process::{Command, Output};

use serde_json::Value;
use verma_lab::report::n_record;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verma-lab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn decompose_n4() {
    let out = lab(&["decompose", "--n", "4", "--depth", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["indexSets"]["iPrime"], serde_json::json!([0, 2]));
    assert_eq!(doc["indexSets"]["iTriplePrime"], serde_json::json!([4]));
    let audit = doc["audit"].as_array().unwrap();
    assert!(!audit.is_empty() && audit.iter().all(|r| r["lhs"] == r["rhs"]));
}

#[test]
fn hwv_n4_s0() {
    let out = lab(&["hwv", "--n", "4", "--s", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["p"], serde_json::json!(["16", "8"]));
}

#[test]
fn projgen_renders_rationals_as_strings() {
    let out = lab(&["projgen", "--n", "2", "--s", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["omegaImage"], serde_json::json!(["-8/1", "-8/1", "0/1"]));
    assert_eq!(doc["shiftM"], "0");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lab(&["decompose", "--n", "-1"]).status.code(), Some(2));
    assert_eq!(lab(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(lab(&["hwv", "--n", "4"]).status.code(), Some(2));
    assert_eq!(lab(&["projgen", "--n", "4", "--s", "4"]).status.code(), Some(2));
    assert_eq!(lab(&["report", "--n-max", "-3"]).status.code(), Some(2));
    let out = lab(&["bogus"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn csv_is_crlf_with_header() {
    let out = lab(&["decompose", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,mu,lhs,rhs,casimir_ok\r\n"));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("verma-lab-{}.json", std::process::id()));
    let out = lab(&["hwv", "--n", "6", "--s", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(doc["p"], serde_json::json!(["24", "8"]));
}

#[test]
fn sweep_up_to_two() {
    let records: Vec<_> = (0..=2).map(|n| n_record(n).unwrap()).collect();
    assert_eq!(records.len(), 3);
    assert!(records.iter().all(|r| r.passed && r.audit.iter().all(|a| a.lhs == a.rhs)));
    // n = 0 is the single summand V_0.
    assert_eq!(records[0].cases.len(), 1);
    assert_eq!(records[0].cases[0].s, 0);
}
