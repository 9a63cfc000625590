//! End-to-end checks of the `singulct` binary: subcommands, exit codes, and
//! report emission.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singulct"))
        .args(args)
        .env_remove("SINGULCT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn family_invariants_roundtrip() {
    let out = run(&["invariants", "--family", "diag:4,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("5/4"), "lct_pair missing: {}", text);
    assert!(text.contains("4/3"), "min_exp missing: {}", text);
    assert!(text.contains("strict"), "strictness flag missing: {}", text);

    let out = run(&["invariants", "--family", "det:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("lct(f, J_f^2) = 2"));
}

#[test]
fn polynomial_invariants_via_monomial_pathway() {
    let out = run(&["invariants", "--poly", "x^2", "--vars", "x"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1/2"));
}

#[test]
fn diagonal_polynomial_is_recognized() {
    let out = run(&["invariants", "--poly", "x^3 + y^3", "--vars", "x,y"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2/3"), "lct 2/3 expected: {}", text);
    assert!(
        text.contains("milnor number = 4"),
        "μ = 4 expected: {}",
        text
    );
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["invariants"]).status.code(), Some(64));
    assert_eq!(
        run(&["invariants", "--family", "bogus"]).status.code(),
        Some(64)
    );
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(64));
    assert_eq!(run(&["nonsense"]).status.code(), Some(64));
    assert_eq!(
        run(&["invariants", "--poly", "x +", "--vars", "x"])
            .status
            .code(),
        Some(64)
    );
    // unsupported lct pathway is a usage-level rejection, not a crash
    let out = run(&["invariants", "--poly", "x^2 + y^3", "--vars", "x,y"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn expsum_profile_runs() {
    let out = run(&[
        "expsum", "--poly", "x^2", "--vars", "x", "--primes", "3,5", "--mmax", "2", "--z", "full",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("sigma_hat"), "{}", text);
    assert!(text.contains("p=3 m=2"), "{}", text);
}

#[test]
fn budget_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_singulct"))
        .args([
            "expsum", "--poly", "x^2", "--vars", "x", "--primes", "5", "--mmax", "2",
        ])
        .env("SINGULCT_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(
        out.status.code(),
        Some(2),
        "budget exhaustion is inconclusive"
    );
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget"), "{}", err);
}

#[test]
fn verify_thm_b_passes() {
    let out = run(&["verify", "--suite", "thmB"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: Pass"));
}

#[test]
fn report_emits_canonical_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let out = run(&[
        "report",
        "--format",
        "json",
        "--out",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&json_path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(parsed["tool"], "singulct");
    assert_eq!(parsed["verdict"], "pass");
    assert!(parsed["families"].as_array().unwrap().len() >= 28);
    // Rationals are num/den strings, never floats.
    assert_eq!(parsed["families"][0]["lct_pair"], "1");

    let csv_path = dir.path().join("report.csv");
    let out = run(&[
        "report",
        "--format",
        "csv",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = body.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,d,lct_pair,lct_f,min_exp,milnor,rs"
    );
    assert!(body.contains("diag:4,3,4,3,5/4,1,4/3,"));
}

#[test]
fn unwritable_path_fails_with_the_path_echoed() {
    let out = run(&[
        "invariants",
        "--family",
        "diag:2,2",
        "--out",
        "/nonexistent-dir/report.json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("/nonexistent-dir/report.json"), "{}", err);
}

#[test]
fn csv_and_json_carry_identical_rationals() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("r.json");
    let csv_path = dir.path().join("r.csv");
    assert_eq!(
        run(&[
            "report",
            "--format",
            "json",
            "--out",
            json_path.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    assert_eq!(
        run(&[
            "report",
            "--format",
            "csv",
            "--out",
            csv_path.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    for fam in json["families"].as_array().unwrap() {
        let line = format!(
            "{},{},{},{},{},{},{},{}",
            fam["family"].as_str().unwrap(),
            fam["n"],
            fam["d"].as_u64().map(|d| d.to_string()).unwrap_or_default(),
            fam["lct_pair"].as_str().unwrap(),
            fam["lct_f"].as_str().unwrap(),
            fam["min_exp"].as_str().unwrap(),
            fam["milnor"].as_str().unwrap(),
            fam["rs"]
        );
        assert!(csv.contains(&line), "CSV missing row: {}", line);
    }
}
