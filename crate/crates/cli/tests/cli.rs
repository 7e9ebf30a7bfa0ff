use std::process::Command;

use serde_json::Value;
use twistedchar::{FactorizationResult, VerificationReport};
use twistedchar_cli::{run, EXIT_OK, EXIT_USAGE};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str]) -> Output {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("twistedchar").chain(args.iter().copied());
    let code = run(argv, &mut stdout, &mut stderr);
    Output {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

#[test]
fn factor_json_golden() {
    let out = invoke(&[
        "factor", "--lambda", "1,1,0,0", "--m", "2", "--n", "2", "--json",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let value: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["vanishes"], false);
    assert_eq!(value["mus"], serde_json::json!([[1, 0], [0, 0]]));
    assert_eq!(value["sign"], -1);
    let parsed: FactorizationResult = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(serde_json::to_value(&parsed).unwrap(), value);
}

#[test]
fn factor_vanishing_json_has_no_sign() {
    let out = invoke(&["factor", "--lambda", "1,0,0,0", "--n", "2", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let value: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["vanishes"], true);
    assert!(value.get("sign").is_none());
}

#[test]
fn factor_human_layout() {
    let out = invoke(&["factor", "--lambda", "1,1,0,0", "--n", "2"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("lambda + delta = (4,3,1,0)"));
    assert!(out.stdout.contains("class 0 mod 2: {4, 0}"));
    assert!(out.stdout.contains("class 1 mod 2: {3, 1}"));
    assert!(out.stdout.contains("mu_0 = (1,0)"));
    assert!(out.stdout.contains("sign = -1"));
}

#[test]
fn character_golden() {
    let out = invoke(&["character", "--lambda", "1,1,0,0", "--t", "1,2", "--n", "2"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "-5");
}

#[test]
fn character_accepts_negative_and_fractional_input() {
    // eigenvalues (-1/2, 1/2, 1/2, -1/2) repeat, so this goes through Jacobi-Trudi
    let out = invoke(&[
        "character",
        "--lambda",
        "1,1,0,0",
        "--t",
        "-1/2,1/2",
        "--n",
        "2",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "-1/2");
    let out = invoke(&[
        "character",
        "--lambda",
        "0,0,-1",
        "--t",
        "2",
        "--n",
        "3",
        "--json",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let value: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["n"], 3);
    assert_eq!(value["t"], serde_json::json!(["2/1"]));
}

#[test]
fn verify_round_trips_and_is_seeded() {
    let args = [
        "verify", "--lambda", "2,1,1,0", "--m", "2", "--n", "2", "--trials", "3", "--seed", "11",
        "--json",
    ];
    let first = invoke(&args);
    let second = invoke(&args);
    assert_eq!(first.code, EXIT_OK);
    assert_eq!(first.stdout, second.stdout);
    let report: VerificationReport = serde_json::from_str(&first.stdout).unwrap();
    assert!(report.passed());
    assert_eq!(report.trials.len(), 3);
    assert_eq!(report.to_json(), first.stdout.trim());
}

#[test]
fn verify_human_mode() {
    let out = invoke(&["verify", "--lambda", "1,0", "--n", "2", "--trials", "2"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with("verified\n"));
}

#[test]
fn verify_sweep_from_config() {
    let path = std::env::temp_dir().join(format!("twistedchar-config-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"seed": 3, "trials": 2, "weights_per_shape": 4, "shapes": [[1, 2], [2, 2]],
            "entry_lo": 0, "entry_hi": 3, "height": 5}"#,
    )
    .unwrap();
    let out = invoke(&["verify", "--config", path.to_str().unwrap(), "--json"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let value: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["entries"].as_array().unwrap().len(), 8);
}

#[test]
fn kostant_scan_values_in_range() {
    let out = invoke(&[
        "kostant-scan",
        "--n",
        "4",
        "--samples",
        "100",
        "--seed",
        "7",
        "--json",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let value: Value = serde_json::from_str(&out.stdout).unwrap();
    let samples = value["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 100);
    for s in samples {
        assert!(matches!(s["value"].as_i64(), Some(-1..=1)), "{s}");
        assert_eq!(s["ok"], true);
    }
    let table = invoke(&[
        "kostant-scan",
        "--n",
        "4",
        "--samples",
        "100",
        "--seed",
        "7",
    ]);
    assert_eq!(table.code, EXIT_OK);
    assert_eq!(table.stdout.lines().count(), 101);
}

#[test]
fn identity_checks_pass() {
    for args in [
        &["block-det", "--m", "2", "--n", "3", "--trials", "3"][..],
        &[
            "norm", "--m", "3", "--n", "2", "--trials", "3", "--seed", "4",
        ],
        &["sym-lambda", "--kind", "sym", "--k", "4", "--t", "2,3"],
        &[
            "sym-lambda",
            "--kind",
            "ext",
            "--k",
            "3",
            "--t",
            "2,3",
            "--json",
        ],
        &[
            "sym-lambda",
            "--kind",
            "ext",
            "--k",
            "3",
            "--t",
            "5",
            "--n",
            "3",
        ],
        &["siegel", "--k", "4", "--t", "2,1/3"],
        &["siegel", "--k", "3", "--t", "-2"],
    ] {
        let out = invoke(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}{}", out.stdout, out.stderr);
    }
    let out = invoke(&["siegel", "--k", "3", "--t", "2", "--json"]);
    let value: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["ok"], true);
    assert_eq!(value["twisted"]["coeffs"], serde_json::json!(["0/1"]));
}

#[test]
fn usage_errors_exit_two() {
    for (args, flag) in [
        (&["factor", "--lambda", "1,2", "--n", "2"][..], "--lambda"),
        (&["factor", "--lambda", "1,1,0", "--n", "2"], "--lambda"),
        (
            &["factor", "--lambda", "1,1,0,0", "--m", "3", "--n", "2"],
            "--lambda",
        ),
        (
            &["character", "--lambda", "1,0", "--t", "1,x", "--n", "2"],
            "--t",
        ),
        (
            &["character", "--lambda", "1,0", "--t", "0", "--n", "2"],
            "--t",
        ),
        (
            &["sym-lambda", "--kind", "alt", "--k", "2", "--t", "1"],
            "--kind",
        ),
        (
            &["kostant-scan", "--n", "3", "--lo", "2", "--hi", "1"],
            "--lo",
        ),
        (
            &["verify", "--lambda", "1,0", "--n", "2", "--trials", "0"],
            "--trials",
        ),
        (&["bogus"], "bogus"),
    ] {
        let out = invoke(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?} computed: {}", out.stdout);
        assert!(out.stderr.contains(flag), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn help_exits_zero() {
    let out = invoke(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("kostant-scan"));
}

#[test]
fn binary_honours_retry_bound() {
    let bin = env!("CARGO_BIN_EXE_twistedchar");
    let status = |value: &str| {
        Command::new(bin)
            .args(["factor", "--lambda", "1,1,0,0", "--n", "2"])
            .env("TWISTEDCHAR_MAX_RETRIES", value)
            .output()
            .unwrap()
    };
    assert_eq!(status("1").status.code(), Some(EXIT_OK));
    let bad = status("0");
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("TWISTEDCHAR_MAX_RETRIES"));
    let out = Command::new(bin)
        .args(["character", "--lambda", "1,1,0,0", "--t", "1,2", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "-5");
}
