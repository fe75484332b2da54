//! End-to-end tests against the built binary.

use std::process::{Command, Output};

use sylsum_core::poly::UniPoly;
use sylsum_core::scalar::Rat;

fn sylsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn double_sum_fixture() {
    let out = sylsum(&["sylsum", "--A", "1,2", "--B", "3,4", "--p", "0", "--q", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-4x + 10\n");
}

#[test]
fn inadmissible_subresultant_index_exits_2() {
    let out = sylsum(&["sres", "--A", "1,2", "--B", "3,4", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("inadmissible"),
        "diagnostic names the precondition: {err}"
    );
}

#[test]
fn malformed_roots_exit_2() {
    let out = sylsum(&["res", "--A", "1,oops", "--B", "3,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = sylsum(&["res", "--A", "1,1", "--B", "3,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn coefficient_input_is_accepted() {
    let out = sylsum(&["sres", "--f", "2,-3,1", "--g", "12,-7,1", "--d", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-4x + 10\n");

    // Coefficient input yields the determinantal cofactors only.
    let out = sylsum(&["cofactors", "--f", "2,-3,1", "--g", "12,-7,1", "--k", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("det: F_0 = -4x + 18"));
    assert!(!text.contains("roots:"));
}

#[test]
fn json_output_reparses() {
    let out = sylsum(&[
        "sylsum", "--A", "1,2", "--B", "3,4", "--p", "1", "--q", "0", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let poly = UniPoly::<Rat>::from_json(&value).unwrap();
    assert_eq!(poly, UniPoly::from_i64_coeffs(&[-10, 4]));
}

#[test]
fn verify_small_suite_passes() {
    let out = sylsum(&["verify", "--max-m", "2", "--max-n", "2", "--seeds", "1"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("all exact"));

    let out = sylsum(&[
        "verify", "--max-m", "2", "--max-n", "2", "--seeds", "1", "--field", "prime",
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_json_reports_pass_flag() {
    let out = sylsum(&[
        "verify", "--max-m", "2", "--max-n", "2", "--seeds", "1", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], serde_json::Value::Bool(true));
    assert!(value["branch_reports"].as_array().unwrap().len() >= 9);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "show-table",
        "--m",
        "3",
        "--n",
        "3",
        "--seed",
        "11",
        "--format",
        "json",
    ];
    let first = sylsum(&args);
    let second = sylsum(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn show_table_prints_all_cells() {
    let out = sylsum(&["show-table", "--A", "1,2", "--B", "3,4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("p=")).count(), 9);
    assert!(text.contains("[resultant-f-g] ok"));
}

#[test]
fn interp_round_trip() {
    let out = sylsum(&[
        "interp",
        "--B",
        "3,4",
        "--d",
        "1",
        "--values",
        r#"{"1":"1","2":"1"}"#,
        "--eval",
        "7",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("value = 1"));

    let out = sylsum(&[
        "interp",
        "--B",
        "3,4",
        "--d",
        "1",
        "--values",
        r#"{"1":"1"}"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn schur_fixture() {
    let out = sylsum(&["schur", "--lambda", "2,1", "--points", "1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "6\n");
}

#[test]
fn negative_and_rational_roots_are_accepted() {
    let out = sylsum(&["res", "--A", "-1,1/2", "--B", "3,-4"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    // (-1-3)(-1+4)(1/2-3)(1/2+4) = (-4)(3)(-5/2)(9/2) = 135.
    assert_eq!(stdout(&out), "135\n");
}
