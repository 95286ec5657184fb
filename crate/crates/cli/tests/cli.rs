use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("schurq").chain(args.iter().copied());
    let code = schurq_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn compute_counts() {
    assert_eq!(run(&["compute", "--lambda", "3,1", "--n", "4", "--method", "qc"]), (0, "320\n".into(), String::new()));
    assert_eq!(run(&["compute", "--lambda", "3,1", "--n", "4", "--method", "fdc"]).1, "320\n");
    assert_eq!(run(&["compute", "--lambda", "1", "--n", "1", "--method", "qc"]).1, "2\n");
    assert_eq!(run(&["compute", "--lambda", "2,1", "--n", "2", "--method", "count"]).1, "8\n");
}

#[test]
fn compute_geometric() {
    let (code, out, _) = run(&["compute", "--lambda", "1", "--n", "1", "--method", "th"]);
    assert_eq!((code, out.as_str()), (0, "2 + 2*q\n"));
    let (code, out, _) = run(&["compute", "--lambda", "2,1", "--n", "1", "--method", "dft-eb"]);
    assert_eq!((code, out.as_str()), (0, "4*q + 4*q^2\n"));
}

#[test]
fn enumerate_gf_and_list() {
    assert_eq!(run(&["enumerate", "--lambda", "1", "--n", "2", "--gf"]).1, "2 + 2*q\n");
    let (code, out, _) = run(&["--json", "enumerate", "--lambda", "2,1", "--n", "2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
    assert_eq!(v[0][0], serde_json::json!([0, 0, 1, true]));
}

#[test]
fn osc_table() {
    let (code, out, _) = run(&["table", "osc", "--m-max", "4", "--n-max", "8"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[2].split('\t').nth(5), Some("320"));
}

#[test]
fn crosscheck_json_is_sorted_and_reproducible() {
    let args = ["--json", "crosscheck", "--max-part", "3", "--max-len", "2", "--max-n", "3", "--all"];
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(run(&args).1, out, "output must be byte-identical across runs");
    let v: Value = serde_json::from_str(&out).unwrap();
    let recs = v.as_array().unwrap();
    assert!(recs.iter().all(|r| r["ok"] == Value::Bool(true)));
    let keys: Vec<&str> = recs[0].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["lambda", "n", "method", "value", "micros", "ok"]);
}

#[test]
fn crosscheck_csv_header() {
    let (code, out, _) = run(&["--csv", "crosscheck", "--max-part", "2", "--max-len", "1", "--max-n", "2", "--methods", "multisum"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("lambda,n,method,value,micros,ok"));
    assert!(lines.any(|l| l == "1,1,multisum,2 + 2*q,,true"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["compute", "--lambda", "2,2", "--n", "3"]).0, 2);
    assert_eq!(run(&["compute", "--lambda", "2,1", "--n", "2", "--method", "nope"]).0, 2);
    assert_eq!(run(&["compute", "--lambda", "2,1", "--n", "2", "--method", "dft-eb"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--json", "--csv", "table", "osc"]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_schurq");
    let ok = Command::new(bin).args(["compute", "--lambda", "3,1", "--n", "4", "--method", "qc"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "320\n");
    let bad = Command::new(bin).args(["compute", "--lambda", "x"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
