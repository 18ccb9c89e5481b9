//! End-to-end checks of the command-line interface.

use std::process::Command;

fn relaxchar() -> Command {
    Command::new(env!("CARGO_BIN_EXE_relaxchar"))
}

#[test]
fn character_csv_has_expected_coefficients() {
    let out = relaxchar()
        .args([
            "character",
            "--algebra",
            "sl2",
            "--u",
            "3",
            "--v",
            "2",
            "--r",
            "1",
            "--s",
            "1",
            "--orders",
            "4",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let coeffs: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(&coeffs[..4], &["1", "2", "5", "10"]);
}

#[test]
fn spectrum_lists_kac_table() {
    let out = relaxchar()
        .args([
            "spectrum",
            "--algebra",
            "osp12",
            "--u",
            "2",
            "--v",
            "4",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,s,sector,param_kind,param,mu,delta");
    assert_eq!(lines[1], "1,1,r,q,-15/32,-3/4,-5/16");
    assert_eq!(lines[2], "1,2,ns,sigma,0,-1/2,-1/4");
    assert_eq!(lines[3], "1,3,r,q,-15/32,-5/4,-5/16");
}

#[test]
fn verify_counterexample_suite_passes() {
    let out = relaxchar()
        .args(["verify", "--suite", "counterexample-kminus1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["passed"], serde_json::Value::Bool(true));
}

#[test]
fn dims_command_matches_oracle() {
    let out = relaxchar()
        .args([
            "dims",
            "--algebra",
            "sl2",
            "--sector",
            "ns",
            "--level",
            "-1/2",
            "--param",
            "-3/8",
            "--coset",
            "1/3",
            "--weight",
            "1/3",
            "--grade2",
            "4",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1/3,4,5"), "unexpected output: {text}");
}

#[test]
fn shapovalov_reports_rank() {
    let out = relaxchar()
        .args([
            "shapovalov",
            "--algebra",
            "sl2",
            "--sector",
            "ns",
            "--level",
            "-1/2",
            "--param",
            "-3/8",
            "--coset",
            "0",
            "--weight",
            "0",
            "--grade2",
            "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["rank"], serde_json::json!(2));
    assert_eq!(doc["result"]["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_2() {
    let out = relaxchar().args(["character", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = relaxchar()
        .args(["verify", "--suite", "nope"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let run = || {
        relaxchar()
            .args([
                "string-function",
                "--algebra",
                "osp12",
                "--u",
                "2",
                "--v",
                "4",
                "--r",
                "1",
                "--s",
                "1",
                "--parity-coset",
                "odd",
                "--orders",
                "5",
            ])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}
