//! End-to-end tests of the binary: exit codes, JSON shapes, stdin handling,
//! and byte-level determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn qextend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qextend"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qextend_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qextend"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn q_of_k4_from_literal() {
    let out = qextend(&["q", "C~", "--format", "json"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["graph6"], "C~");
    assert_eq!(record["n"], 4);
    assert_eq!(record["edges"], 6);
    assert!((record["q"].as_f64().unwrap() - 6.0).abs() <= 1e-9);
}

#[test]
fn q_reads_stdin_in_order() {
    let out = qextend_stdin(&["q", "-", "--format", "json"], "A_\nC~\nA?\n");
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["graph6"], "A_");
    assert_eq!(lines[1]["graph6"], "C~");
    assert_eq!(lines[2]["graph6"], "A?");
    assert!((lines[0]["q"].as_f64().unwrap() - 2.0).abs() <= 1e-9);
    assert!(lines[2]["q"].as_f64().unwrap().abs() <= 1e-9);
}

#[test]
fn malformed_line_gets_error_record_and_exit_1() {
    let out = qextend_stdin(&["q", "-", "--format", "json"], "C~\nnot graph6!\n");
    assert_eq!(out.status.code(), Some(1));
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1]["error"].is_string());
    assert_eq!(lines[1]["line"], 2);
}

#[test]
fn theta_values_and_preconditions() {
    let out = qextend(&["theta", "0", "6", "--format", "json"]);
    assert!(out.status.success());
    let spec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(spec["case"], "n_eq_2k6");
    assert!((spec["value"].as_f64().unwrap() - (4.0 + 12f64.sqrt())).abs() <= 1e-9);

    let out = qextend(&["theta", "0", "4", "--format", "json"]);
    let spec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(spec["case"], "general");
    assert!((spec["value"].as_f64().unwrap() - 4.0).abs() <= 1e-9);
    // The general case carries the cubic's four ascending coefficients.
    assert_eq!(spec["polynomial"].as_array().unwrap().len(), 4);

    let out = qextend(&["theta", "1", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certify_distinguishes_verdicts() {
    // K_6 at k = 1 is certified extendable.
    let out = qextend(&["certify", "E~~w", "-k", "1", "--exact", "--format", "json"]);
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec["verdict"], "ExtendableByTheorem");
    assert_eq!(rec["exact"]["direct"], true);
    assert_eq!(rec["exact"]["lemma"], true);
    assert_eq!(rec["exact"]["agree"], true);

    // The excluded graph at k = 1, n = 6: K_2 v (K_3 u K_1), frozen graph6.
    let out = qextend(&["certify", "E~~?", "-k", "1", "--format", "json"]);
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec["verdict"], "Exception");

    // The extremal boundary graph is Inconclusive.
    let out = qextend(&["certify", "E}r?", "-k", "0", "--format", "json"]);
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec["verdict"], "Inconclusive");
}

#[test]
fn extremal_emits_graph6_and_verifies() {
    let out = qextend(&["extremal", "0", "6", "--format", "json"]);
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec["case"], "n_eq_2k6");
    assert_eq!(rec["graph6"], "E}r?");

    let out = qextend(&["extremal", "1", "12", "--verify", "--format", "json"]);
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec["sharpness"]["pass"], true);

    // The k = 0, n = 4 star: q = theta(0, 4) = 4.
    let out = qextend(&["extremal", "0", "4", "--verify", "--format", "json"]);
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!((rec["sharpness"]["q"].as_f64().unwrap() - 4.0).abs() <= 1e-9);
    assert!((rec["sharpness"]["threshold"].as_f64().unwrap() - 4.0).abs() <= 1e-9);
}

#[test]
fn sharpness_reports_witness() {
    let out = qextend(&["sharpness", "1", "12", "--format", "json"]);
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec["pass"], true);
    assert_eq!(rec["witness"]["s"], serde_json::json!([0, 1, 2]));
    assert_eq!(rec["witness"]["odd_components"], 3);
}

#[test]
fn sweep_random_is_byte_identical_and_clean() {
    let args = [
        "sweep", "-k", "1", "-n", "12", "--random", "60", "--seed", "7", "--format", "json",
    ];
    let first = qextend(&args);
    let second = qextend(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "sweep output must be reproducible");
    let report: serde_json::Value = serde_json::from_str(stdout(&first).trim()).unwrap();
    assert_eq!(report["counterexamples"], 0);
    assert_eq!(report["total"], 60);
    // Every record echoes its graph6 string.
    for rec in report["records"].as_array().unwrap() {
        assert!(rec["graph6"].is_string());
    }
}

#[test]
fn sweep_exhaustive_budget_error() {
    let out = qextend(&["sweep", "-k", "1", "-n", "30", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn csv_output_has_headers() {
    let out = qextend(&["q", "C~", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("graph6,n,edges,q,residual,iterations"));
    let out = qextend(&[
        "sweep", "-k", "1", "-n", "8", "--random", "5", "--seed", "3", "--format", "csv",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("graph6,n,k,verdict,q,theta"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn sweep_output_is_independent_of_worker_count() {
    let base = [
        "sweep", "-k", "1", "-n", "10", "--random", "40", "--seed", "11", "--format", "json",
    ];
    let one = qextend(&[&base[..], &["--workers", "1"]].concat());
    let four = qextend(&[&base[..], &["--workers", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn sharpness_scale_cap_is_a_budget_error() {
    let out = qextend(&["extremal", "2", "40", "--verify"]);
    assert_eq!(out.status.code(), Some(3));
    // Without --verify the construction itself is fine.
    let out = qextend(&["extremal", "2", "40"]);
    assert!(out.status.success());
}

#[test]
fn nonpositive_tolerances_are_rejected() {
    let out = qextend(&["theta", "1", "12", "--epsilon=-1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qextend(&["q", "C~", "--tolerance=0"]);
    assert_eq!(out.status.code(), Some(2));
}
