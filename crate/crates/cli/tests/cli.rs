//! End-to-end tests of the `ylm` binary.

mod schema_support;

use std::path::PathBuf;
use std::process::{Command, Output};

fn ylm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ylm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("ylm-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn verify_small_suite_emits_valid_json() {
    let out = ylm(&[
        "verify", "--suite", "su2", "--lmax", "2", "--trials", "2", "--seed", "1",
    ]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();

    let schema_text = include_str!("../report.schema.json");
    let schema: serde_json::Value = serde_json::from_str(schema_text).unwrap();
    let violations = schema_support::validate(&schema, &report);
    assert!(violations.is_empty(), "schema violations: {violations:?}");

    assert_eq!(report["config"]["suite"], "su2");
    assert_eq!(report["summary"]["fail"], 0);
}

#[test]
fn verify_reports_are_deterministic() {
    let path_a = temp_path("det-a.json");
    let path_b = temp_path("det-b.json");
    for path in [&path_a, &path_b] {
        let out = ylm(&[
            "verify",
            "--suite",
            "parity",
            "--lmax",
            "3",
            "--seed",
            "9",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b);
    std::fs::remove_file(path_a).ok();
    std::fs::remove_file(path_b).ok();
}

#[test]
fn verify_csv_format() {
    let out = ylm(&[
        "verify", "--suite", "parity", "--lmax", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,params,status,exact_zero,float_dev,note"
    );
    assert!(lines.next().unwrap().starts_with("parity,"));
}

#[test]
fn flagged_records_do_not_fail_the_run() {
    // the generation suite flags the even fixed-(l+m) seed constants
    let out = ylm(&[
        "verify",
        "--suite",
        "generation",
        "--lmax",
        "4",
        "--seed",
        "3",
    ]);
    assert!(out.status.success(), "flagged-only runs must exit 0");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["summary"]["flagged"].as_u64().unwrap() > 0);
    assert_eq!(report["summary"]["fail"], 0);
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = ylm(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_exact_constant() {
    let out = ylm(&["generate", "--l", "0", "--m", "0", "--form", "exact"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1/2\u{b7}\u{3c0}^(-1/2)"), "{text}");
}

#[test]
fn generate_exact_dipole() {
    let out = ylm(&["generate", "--l", "1", "--m", "0", "--form", "exact"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // sqrt(3/(4 pi)) cos = 1/2 sqrt(3) pi^(-1/2) cos
    assert!(
        text.contains("1/2\u{b7}\u{221a}3\u{b7}\u{3c0}^(-1/2)\u{b7}cos(\u{3b8})"),
        "{text}"
    );
}

#[test]
fn generate_numeric_grid_equator_value() {
    let out = ylm(&["generate", "--l", "1", "--m", "1", "--form", "numeric-grid"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text
        .lines()
        .find(|line| line.starts_with("1.57079633,0.00000000"))
        .expect("equator sample present");
    let re: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert!((re - (-0.34549415)).abs() < 1e-7, "{row}");
}

#[test]
fn generate_rejects_invalid_index() {
    let out = ylm(&["generate", "--l", "1", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_negative_order() {
    let out = ylm(&["generate", "--l", "2", "--m", "-2", "--form", "exact"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("m=-2"));
}

#[test]
fn table_j_raise_values() {
    let out = ylm(&["table", "--family", "Jplus", "--lmax", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("l,m,exact,float\n"));
    assert!(text.contains("1,0,1/3\u{b7}\u{221a}3,0.577350"), "{text}");
}

#[test]
fn table_su2_values() {
    let out = ylm(&["table", "--family", "Lplus", "--lmax", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1,1,\u{221a}2,1.414214"), "{text}");
}

#[test]
fn table_k_family_values() {
    let out = ylm(&["table", "--family", "Kplus-d2", "--lmax", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("d,m,exact,float\n"));
    assert!(text.contains("2,1,"), "{text}");
}

#[test]
fn table_unknown_family_is_a_usage_error() {
    let out = ylm(&["table", "--family", "Qplus"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown operator family"));
}

#[test]
fn schema_validator_rejects_malformed_reports() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../report.schema.json")).unwrap();
    let bad = serde_json::json!({
        "version": "0.1.0",
        "config": {
            "suite": "nonsense",
            "l_max": 0,
            "d_max": 9,
            "s_max": 9,
            "random_trials": 2,
            "seed": 1,
            "numeric_tolerance": 1e-10
        },
        "records": [{
            "id": "x", "params": "", "status": "maybe",
            "exact_zero": true, "float_dev": 0.0, "note": ""
        }],
        "summary": {"pass": 1, "fail": 0, "flagged": 0},
        "extra": true
    });
    let violations = schema_support::validate(&schema, &bad);
    assert!(violations.iter().any(|v| v.contains("enum")));
    assert!(violations.iter().any(|v| v.contains("minimum")));
    assert!(violations.iter().any(|v| v.contains("unexpected field")));
}
