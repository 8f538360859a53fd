use std::process::{Command, Output};

use serde_json::Value;

fn ffcurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffcurve"))
        .arg("--quiet")
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = ffcurve(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn json_lines(args: &[&str]) -> Vec<Value> {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = ffcurve(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn exit_codes() {
    assert_eq!(ffcurve(&["mu", "--poly", "u^2+1"]).status.code(), Some(0));
    assert_eq!(ffcurve(&["bogus"]).status.code(), Some(2));
    assert_eq!(ffcurve(&["mu"]).status.code(), Some(2));
    assert_eq!(ffcurve(&["mu", "--poly", "u+"]).status.code(), Some(2));
    assert_eq!(ffcurve(&["mu", "--poly", "1/u"]).status.code(), Some(2));
    assert_eq!(
        ffcurve(&["--format", "csv", "family-w", "--t", "u"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ffcurve(&["nagao", "--n-max", "1"]).status.code(), Some(2));
    // domain errors name the precondition
    let out = ffcurve(&["--field", "4", "mu", "--poly", "u"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd prime"));
    let out = ffcurve(&["--c", "0", "family-w", "--t", "u"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonzero"));
}

#[test]
fn json_schemas() {
    let v = json(&["field-info"]);
    assert_eq!(v["q"], 3);
    assert_eq!(v["irreducible_counts"][0], 3);

    let v = json(&["mu", "--poly", "(u+1)^2"]);
    assert_eq!(
        (v["factor"].as_i64(), v["disc"].as_i64()),
        (Some(0), Some(0))
    );

    let v = json(&[
        "--field", "5", "chowla", "--exp", "4p", "--g1", "u+1", "--g2", "1",
    ]);
    assert_eq!(v["closed_form"], v["direct"]);

    let v = json(&["family-w", "--t", "u/(u+1)"]);
    assert_eq!(v["closed"], v["endglobal"]);
    assert_eq!(v["closed"], v["product"]);

    let rows = json_lines(&["--field", "5", "rootnumber", "--t", "u"]);
    let product = rows.last().unwrap()["product"].as_i64().unwrap();
    let w: i64 = rows[..rows.len() - 1]
        .iter()
        .map(|r| r["W"].as_i64().unwrap())
        .product();
    assert_eq!(product, w);

    let rows = json_lines(&["reduction", "--t", "u^2"]);
    assert!(rows.iter().any(|r| r["place"] == "inf" && r["e"] == 2));

    let v = json(&["torsion-cert", "--t", "u"]);
    assert_eq!(v["result"], "infinite_order");
    assert_eq!(v["place"], "u+1");

    let v = json(&["galois", "--pi", "1"]);
    assert_eq!(v["group"], "D4");

    let v = json(&["scan-u0", "--max-deg", "4"]);
    assert!(!v["hits"].as_array().unwrap().is_empty());

    let v = json(&["nagao", "--n-max", "3"]);
    assert_eq!(v[1]["left"], 173);
    assert_eq!(v[1]["ratio"], "1.404");
}

#[test]
fn config_file_defaults_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# experiment\nfield = 5\nformat = json\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let out = ffcurve(&["--config", cfg, "field-info"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["q"], 5);

    let out = ffcurve(&["--config", cfg, "--field", "7", "field-info"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["q"], 7);

    let bad = dir.path().join("bad.cfg");
    std::fs::write(&bad, "colour = blue\n").unwrap();
    assert_eq!(
        ffcurve(&["--config", bad.to_str().unwrap(), "field-info"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let args = ["--format", "csv", "nagao", "--n-max", "4"];
    let stdout = ffcurve(&args).stdout;
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert!(ffcurve(&with_out).status.success());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn selftest_passes() {
    let v = json(&["selftest"]);
    for c in v.as_array().unwrap() {
        assert_eq!(c["passed"], true, "{}", c["name"]);
    }
}
