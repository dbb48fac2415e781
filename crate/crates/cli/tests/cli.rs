//! External-interface contracts of the `taumax` binary: formats, exit codes,
//! determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taumax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn critical_csv_contract() {
    let out = run(&["critical", "--x", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "x,t_star,alpha,residual,iterations,bracket_lo,bracket_hi"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "1");
    assert_eq!(row[1], "1");
    assert_eq!(row[2], "0.25");
    assert!(!text.contains('\r'), "LF line endings only");
}

#[test]
fn critical_rejects_x_below_one() {
    let out = run(&["critical", "--x", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("x must be >= 1"), "stderr: {err}");
}

#[test]
fn critical_json_error_object() {
    let out = run(&["critical", "--x", "0.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json error body");
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["error"]["code"], 2);
}

#[test]
fn limit_json_contract() {
    let out = run(&["limit", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["schema_version"], "1");
    for key in ["a0", "x0", "ell", "alpha_star", "eta_residual"] {
        assert!(v[key].is_f64(), "missing key {key}");
    }
    assert!((v["ell"].as_f64().unwrap() - 0.5576367386).abs() < 1e-9);
}

#[test]
fn sequence_csv_contract() {
    let out = run(&["sequence", "--n-max", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,t_n,alpha_n,ratio,gap");
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "1");
    assert_eq!(row[1], "1");
    assert_eq!(row[2], "0.25");
    assert_eq!(row[3], "1");
    assert_eq!(lines.next(), None);
}

#[test]
fn sequence_json_reports_claims() {
    let out = run(&["sequence", "--n-max", "20", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 20);
    assert!(v["report"]["claims"].as_array().unwrap().len() >= 7);
}

#[test]
fn figure_one_layout() {
    let out = run(&["figure", "1", "--points", "50"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# eta(a)"));
    assert!(text.contains("# root marker: x0 eta(x0)"));
    let data_rows = text
        .lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .count();
    assert_eq!(data_rows, 51); // 50 samples + 1 marker
}

#[test]
fn figure_two_layout() {
    let out = run(&["figure", "2", "--points", "40"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for n in 1..=3 {
        assert!(text.contains(&format!("# curve n={n}")));
    }
    assert!(text.contains("# argmax markers: t_n alpha_n"));
    // every curve starts at tau(n, 0) = 0
    for block in text.split("# curve n=").skip(1) {
        let first = block.lines().nth(1).unwrap();
        assert_eq!(first, "0 0");
    }
    // blocks are blank-line separated
    assert_eq!(text.matches("\n\n").count(), 3);
}

#[test]
fn figure_rejects_unknown_id() {
    let out = run(&["figure", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_cm_contract_and_rejections() {
    let out = run(&["verify-cm", "--orders", "0", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 7);

    let out = run(&["verify-cm", "--grid", "-1.5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify-cm", "--orders", "21"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_cm_reports_violations_with_exit_four() {
    // beta = 1 lies above the sufficient threshold and f_1 increases, so the
    // first derivative already breaks alternation
    let out = run(&["verify-cm", "--beta", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(4));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["all_pass"], false);
    let first = &v["reports"].as_array().unwrap()[0];
    assert_eq!(first["all_alternating"], false);
    assert_eq!(first["first_violation"], 1);
}

#[test]
fn digits_flag_controls_precision() {
    let out = run(&["limit", "--digits", "4", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.contains("0.2984"), "{text}");
    assert!(!text.contains("0.29843"));

    let out = run(&["limit", "--digits", "40"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["limit", "--format", "json"],
        vec!["sequence", "--n-max", "12", "--format", "csv"],
        vec!["figure", "1", "--points", "64"],
        vec!["verify-cm", "--orders", "8", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("limit.csv");
    let out = run(&["limit", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(contents.starts_with("a0,x0,ell,alpha_star,eta_residual\n"));
}

#[test]
fn tolerance_overrides_are_accepted() {
    let out = run(&[
        "critical",
        "--x",
        "3",
        "--rel-tol",
        "1e-10",
        "--abs-tol",
        "1e-12",
        "--max-iter",
        "50",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());

    // an unreachable budget surfaces as a solver failure
    let out = run(&["critical", "--x", "3", "--max-iter", "1"]);
    assert_eq!(out.status.code(), Some(3));
}
