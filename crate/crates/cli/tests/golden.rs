//! End-to-end tests for the `sjlab` binary: golden outputs, JSON determinism,
//! and exit-code conventions.

use std::process::{Command, Output};

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sjlab"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("failed to spawn sjlab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is not utf-8")
}

#[test]
fn sschur_golden_text() {
    let out = run(&["sschur", "--m", "1", "--n", "1", "--lambda", "1"], &[]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x1 - y1");
}

#[test]
fn sjacobi_special_golden_text() {
    let out = run(
        &["sjacobi", "--m", "1", "--n", "1", "--lambda", "1", "--special", "odd"],
        &[],
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "u1 - v1");
}

#[test]
fn euler_empty_partition_golden_text() {
    let out = run(
        &["euler", "--family", "odd", "--m", "2", "--n", "1", "--lambda", ""],
        &[],
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn json_output_is_byte_deterministic() {
    let args = ["sschur", "--m", "2", "--n", "1", "--lambda", "2,1"];
    let first = run(&args, &[("SJLAB_FORMAT", "json")]);
    let second = run(&args, &[("SJLAB_FORMAT", "json")]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let parsed: serde_json::Value =
        serde_json::from_slice(&first.stdout).expect("output is not valid JSON");
    assert!(parsed.get("vars").is_some());
    assert!(parsed.get("exp_den").is_some());
    assert!(parsed.get("terms").is_some());
}

#[test]
fn verify_json_report_is_byte_deterministic() {
    let args = [
        "verify", "--suite", "identities", "--m", "1", "--n", "1", "--max-size", "2",
        "--seed", "7",
    ];
    let first = run(&args, &[("SJLAB_FORMAT", "json")]);
    let second = run(&args, &[("SJLAB_FORMAT", "json")]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_passing_suite_exits_zero() {
    let out = run(
        &["verify", "--suite", "schur", "--m", "1", "--n", "1", "--max-size", "3"],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["sschur", "--m", "1"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn desk_guard_rejects_large_sizes() {
    let out = run(
        &["verify", "--suite", "schur", "--m", "5", "--n", "1"],
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_two() {
    let out = run(
        &["verify", "--suite", "no-such-suite", "--m", "1", "--n", "1"],
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_partition_for_context_is_an_input_error() {
    // (3) does not fit in the fat hook H(1, 2).
    let out = run(&["sschur", "--m", "1", "--n", "2", "--lambda", "3,3"], &[]);
    assert_eq!(out.status.code(), Some(2));
}
