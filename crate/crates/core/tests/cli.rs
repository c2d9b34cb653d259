use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crystal-reflect"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

#[test]
fn verify_rank_one_exits_zero() {
    let (code, out, _) = run(&["verify", "--cartan", "A1", "--lambda", "2", "--depth", "3", "--max-word-len", "1"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert!(schema().is_valid(&report));
    assert_eq!(report["cases"], 3);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_a2_full_sweep_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = run(&[
        "verify", "--cartan", "A2", "--lambda", "1,1", "--jobs", "2",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(schema().is_valid(&report));
    assert_eq!(report["cases"], 48);
    assert_eq!(report["enumerations"][0]["count"], 8);
}

#[test]
fn verify_affine_and_gcm_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("aff.json");
    std::fs::write(&path, r#"{"gcm": [[2,-2],[-2,2]]}"#).unwrap();
    let (code, out, _) = run(&[
        "verify", "--cartan", path.to_str().unwrap(), "--lambda", "1,1",
        "--depth", "4", "--max-word-len", "3",
    ]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert!(schema().is_valid(&report));
    assert_eq!(report["enumerations"][0]["complete"], false);
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--cartan", "B2", "--lambda", "1,0", "--lambda", "0,1"];
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(strip(a), strip(b));
}

#[test]
fn config_errors_exit_two() {
    assert_eq!(run(&["verify", "--cartan", "nope", "--lambda", "1"]).0, 2);
    assert_eq!(run(&["verify", "--cartan", "A2", "--lambda", "1"]).0, 2);
    assert_eq!(run(&["verify", "--cartan", "A1~", "--lambda", "1,0"]).0, 2);
    assert_eq!(run(&["verify", "--cartan", r#"{"gcm": [[2,1],[1,2]]}"#, "--lambda", "1,0"]).0, 2);
    assert_eq!(run(&["trace", "--cartan", "A2", "--lambda", "1,0", "--word", "1,1"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
}

#[test]
fn trace_outputs() {
    let (code, out, _) = run(&["trace", "--cartan", "A1", "--lambda", "2", "--b-word", "", "--word", "1"]);
    assert_eq!(code, 0);
    let t: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(t["schema"], 1);
    assert_eq!(t["c"], serde_json::json!([2]));
    assert_eq!(t["d"], serde_json::json!([2]));
    assert_eq!(t["lhs"]["word"], serde_json::json!([]));
    assert_eq!(t["rhs"]["word"], serde_json::json!([]));

    let (code, out, _) = run(&["trace", "--cartan", "A2", "--lambda", "1,1", "--word", "1,2,1", "--verbose"]);
    assert_eq!(code, 0);
    let t: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(t["d"], serde_json::json!([1, 2, 1]));
    assert!(t["b"]["canonical"]["entries"].is_array());
}

#[test]
fn trace_membership_error() {
    let (code, _, err) = run(&["trace", "--cartan", "A1", "--lambda", "2", "--b-word", "1,1,1", "--word", "1"]);
    assert_eq!(code, 2);
    let e: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(e["error"], "not-member");
    assert_eq!(e["index"], 1);
    assert_eq!(e["eps_star"], 3);
}

#[test]
fn enumerate_lines() {
    let (code, out, _) = run(&["enumerate", "--cartan", "A2", "--lambda", "1,1"]);
    assert_eq!(code, 0);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[8]["summary"]["count"], 8);
    assert_eq!(lines[8]["summary"]["complete"], true);
    assert!(lines[..8].iter().all(|l| l["weight"]["dominant"] == serde_json::json!([1, 1])));

    let (code, out, _) = run(&["enumerate", "--cartan", "A1~", "--lambda", "1,0", "--depth", "3"]);
    assert_eq!(code, 0);
    let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["complete"], false);
}
