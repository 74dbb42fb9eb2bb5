use std::process::Command;

use minw_cli::{run, ConfigError, RunConfig, Status, Suite};

fn minw(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_minw")).args(args).output().expect("binary runs")
}

#[test]
fn rank_two_wstructure_summary() {
    let out = minw(&["--lambda", "1,0", "--suite", "wstructure", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("case 3, length 2 (predicted 2), eta_n = 0"), "{text}");
    assert!(text.contains("submodule dim 1"));
}

#[test]
fn json_is_deterministic_without_timing() {
    let args = ["--n", "2", "--suite", "all", "--format", "json", "--seed", "7", "--no-timing"];
    let a = minw(&args);
    let b = minw(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 7);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c.get("millis").is_none()));
}

#[test]
fn exit_codes_distinguish_input_errors() {
    assert_eq!(minw(&["--lambda", "1,x"]).status.code(), Some(3));
    assert_eq!(minw(&["--lambda", "0,1"]).status.code(), Some(4));
    assert_eq!(minw(&["--lambda", "1,0", "--suite", "cuspidal", "--radius", "2"]).status.code(), Some(5));
    assert_eq!(minw(&["--suite", "nope"]).status.code(), Some(2));
    assert_eq!(minw(&["--n", "7"]).status.code(), Some(2));
}

#[test]
fn violations_give_exit_one() {
    // e_31^3 v_lambda is not singular for this weight
    let out = minw(&["--lambda", "3,0,-2", "--suite", "wstructure", "--no-timing"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  wstructure/singular-branch[1]"), "{text}");
}

#[test]
fn report_is_written_to_out_file() {
    let path = std::env::temp_dir().join(format!("minw-{}.json", std::process::id()));
    let out = minw(&["--suite", "identities", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!v["checks"].as_array().unwrap().is_empty());
    let _ = std::fs::remove_file(path);
}

#[test]
fn cuspidal_suite_defaults_mu() {
    let cfg = RunConfig::from_args(Some(2), None, None, 3, Suite::Cuspidal, 0).unwrap();
    assert_eq!(cfg.mu.as_ref().map(Vec::len), Some(2));
    let report = run(&cfg);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert!(report.checks.iter().any(|c| c.id == "cuspidal/intertwiner" && c.status == Status::Pass));
}

#[test]
fn mismatched_lengths_are_usage_errors() {
    let e = RunConfig::from_args(Some(3), Some("1,0"), None, 3, Suite::Glrep, 0).unwrap_err();
    assert!(matches!(e, ConfigError::Usage(_)));
    assert_eq!(e.exit_code(), 2);
}
