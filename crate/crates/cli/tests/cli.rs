use std::process::{Command, Output};

fn run(args: &[&str], tolerance_env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_logsine"));
    cmd.args(args).env_remove("LOGSINE_TOLERANCE");
    if let Some(t) = tolerance_env {
        cmd.env("LOGSINE_TOLERANCE", t);
    }
    cmd.output().expect("binary runs")
}

#[test]
fn bernoulli_plain_rows() {
    let out = run(&["bernoulli", "--n-max", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "0 1\n1 -1/2\n2 1/6\n3 0\n4 -1/30\n"
    );
}

#[test]
fn bernoulli_single_json_row() {
    let out = run(&["bernoulli", "--n-max", "0", "--format", "json"], None);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc, serde_json::json!([{"k": 0, "B": "1"}]));
}

#[test]
fn tolerance_from_environment_and_flag_wins() {
    let env_only = run(&["logsine", "--n-max", "1"], Some("1e-30"));
    assert_eq!(env_only.status.code(), Some(3));
    let flag_wins = run(
        &["logsine", "--n-max", "1", "--tolerance", "1e-10"],
        Some("1e-30"),
    );
    assert_eq!(flag_wins.status.code(), Some(0));
    let bad_env = run(&["logsine", "--n-max", "1"], Some("zero"));
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn uncertifiable_verification_exits_3() {
    let out = run(
        &[
            "verify",
            "--suite",
            "contour",
            "--n-max",
            "1",
            "--tolerance",
            "1e-30",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("FAIL contour/")));
}

#[test]
fn csv_output_is_well_formed() {
    let out = run(&["logsine", "--n-max", "3", "--format", "csv"], None);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["n", "value", "abs_error", "symbolic"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    let symbolic: serde_json::Value = serde_json::from_str(&rows[3][3]).unwrap();
    assert_eq!(symbolic["zeta_terms"][0]["coeff"], "-3/4");
}

#[test]
fn zeta_shows_exact_even_values() {
    let out = run(&["zeta", "--n-max", "6", "--format", "json"], None);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc[0]["exact"], "1/6 · pi^2");
    assert_eq!(doc[1]["exact"], serde_json::Value::Null);
    assert_eq!(doc[4]["exact"], "1/945 · pi^6");
    assert_eq!(doc.as_array().unwrap().len(), 5);
}

#[test]
fn verify_reports_one_line_per_check() {
    let out = run(&["verify", "--suite", "identities", "--n-max", "5"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 20);
    assert!(text.lines().all(|l| l.starts_with("PASS identities/")));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify", "--suite", "all", "--n-max", "3", "--format", "json",
    ];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
