use std::process::Command;

use num_bigint::BigInt;
use spo41::cli::run_cli;
use spo41::verify::SuiteReport;
use spo41::{SparseVector, Tableau};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spo41").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn dim_examples() {
    assert_eq!(
        run(&["dim", "--shape", "1,0"]),
        (0, "5\n".into(), String::new())
    );
    assert_eq!(run(&["dim", "--shape", "0,0"]).1, "1\n");
    assert_eq!(run(&["dim", "--shape", "3,2"]).1, "105\n");
    assert_eq!(run(&["dim", "--m1", "1", "--m2", "2"]).1, "105\n");
    assert_eq!(
        run(&["dim", "--shape", "3,2", "--format", "json"]).1,
        "{\"dim\":105,\"shape\":[3,2]}\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["dim"]).0, 2);
    assert_eq!(run(&["dim", "--shape", "1,2"]).0, 2);
    assert_eq!(run(&["dim", "--shape", "x"]).0, 2);
    assert_eq!(run(&["dim", "--m1", "1"]).0, 2);
    assert_eq!(
        run(&["dim", "--shape", "2,1", "--m1", "1", "--m2", "1"]).0,
        2
    );
    assert_eq!(run(&["expand", "--shape", "2,1"]).0, 2);
    assert_eq!(run(&["expand", "--shape", "2,1", "--b", "1,2,3"]).0, 2);
    assert_eq!(run(&["verify", "--shape", "2,1", "--suites", "nope"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verma"));
}

#[test]
fn kn_formats() {
    let (_, ascii, _) = run(&["kn", "--shape", "1,0"]);
    assert_eq!(ascii, " 1\n\n 2\n\n 0\n\n-2\n\n-1\n");
    let (_, json, _) = run(&["kn", "--shape", "2,1", "--format", "json"]);
    let tableaux: Vec<Tableau> = json
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(tableaux.len(), 35);
    assert!(tableaux.windows(2).all(|w| {
        spo41::tableau::compare_tableaux(&w[0], &w[1])
            .unwrap()
            .is_lt()
    }));
    let (_, tsv, _) = run(&["kn", "--shape", "2,1", "--format", "tsv"]);
    assert_eq!(tsv.lines().next(), Some("1,1\t2"));
}

#[test]
fn verma_rows() {
    let (code, out, _) = run(&["verma", "--shape", "3,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 105);
    assert!(out
        .lines()
        .any(|l| l == "1\t2\t3\t1\t0\t1\t{\"shape\":[3,2],\"row1\":[1,0,-1],\"row2\":[2,0]}"));
    let (_, json, _) = run(&["verma", "--shape", "1,0", "--format", "json"]);
    let first: serde_json::Value = serde_json::from_str(json.lines().next().unwrap()).unwrap();
    assert_eq!(first["b"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(first["weight"], serde_json::json!([1, 0]));
}

#[test]
fn expand_round_trips() {
    let (code, out, _) = run(&["expand", "--shape", "3,2", "--b", "1,2,3,1"]);
    assert_eq!(code, 0);
    let v = SparseVector::<BigInt>::from_json(out.trim()).unwrap();
    let (c, _) = v.leading_term().unwrap();
    assert_eq!(*c, BigInt::from(2));
    let (_, tsv, _) = run(&[
        "expand", "--shape", "1,0", "--b", "0,1,2,0", "--format", "tsv",
    ]);
    assert_eq!(tsv, "1\t-2\t\n");
}

#[test]
fn verify_reports_are_json_lines() {
    let (code, out, _) = run(&["verify", "--shape", "2,1", "--suites", "bijection,closure"]);
    assert_eq!(code, 0);
    let reports: Vec<SuiteReport> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.passed() && !r.skipped));
    let (_, out, _) = run(&[
        "verify", "--m1", "1", "--m2", "1", "--suites", "closure", "--budget", "10",
    ]);
    let r: SuiteReport = serde_json::from_str(out.trim()).unwrap();
    assert!(r.skipped);
}

#[test]
fn sweep_is_ordered_and_clean() {
    let (code, out, _) = run(&["sweep", "--max-m1", "1", "--max-m2", "1", "--format", "tsv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1 + 4 * 6);
    assert!(lines[0].starts_with("algebra\t-\tpass"));
    assert!(lines[1].starts_with("bijection\t(0,0)\tpass"));
    assert!(lines.last().unwrap().starts_with("closure\t(2,1)\tpass"));
}

#[test]
fn matrix_lists_six_generators() {
    let (_, out, _) = run(&["matrix", "--format", "json"]);
    let rows: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[1]["generator"], "E2");
    assert_eq!(rows[1]["parity"], 1);
    assert_eq!(rows[1]["entries"][1][4], 1);
    assert_eq!(rows[1]["entries"][4][3], 1);
}

#[test]
fn binary_output_is_stable() {
    let bin = env!("CARGO_BIN_EXE_spo41");
    let once = || {
        Command::new(bin)
            .args(["verma", "--shape", "2,1"])
            .output()
            .unwrap()
    };
    let (a, b) = (once(), once());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(bin).args(["dim"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
