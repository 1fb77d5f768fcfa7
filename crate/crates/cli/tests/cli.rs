//! End-to-end tests of the binary: exit codes, output formats, and the
//! verify-paper driver.

use std::process::{Command, Output};

fn lcdbch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcdbch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn cosets_largest_leader() {
    let out = lcdbch(&["cosets", "-q", "4", "-m", "2", "--largest", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "6 (size 4)");

    let out = lcdbch(&["cosets", "-q", "3", "-m", "5", "--lambda", "4", "--largest", "2"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, vec!["10 (size 10)", "8 (size 10)"]);
}

#[test]
fn cosets_single_coset() {
    let out = lcdbch(&["cosets", "-q", "4", "-m", "2", "-s", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "coset of 0 modulo 17: {0} (leader 0, size 1)");
}

#[test]
fn cosets_budget_exceeded_fails() {
    let out = lcdbch(&["--budget", "10", "cosets", "-q", "4", "-m", "2", "--leaders"]);
    assert!(!out.status.success());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn code_17_4_12_with_distance() {
    let out = lcdbch(&[
        "--json", "--stable", "code", "-q", "4", "-m", "2", "--delta-prime", "7", "-b", "0",
        "--distance",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], 17);
    assert_eq!(v["k"], 4);
    assert_eq!(v["p"], 2);
    assert_eq!(v["s"], 2);
    assert_eq!(v["k_closed_form"], 4);
    assert_eq!(v["distance"]["value"], 12);
    assert_eq!(v["distance"]["exact"], true);
    assert_eq!(v["distance"]["method"], "exhaustive");
    assert_eq!(v["lcd"], true);
    assert_eq!(v["hull_dim"], 0);
    assert_eq!(v["generator_poly"].as_array().unwrap().len(), 14);
    assert!(v.get("elapsed_ms").is_none(), "--stable omits timing");
}

#[test]
fn code_dimension_only_1042() {
    let out = lcdbch(&[
        "--json", "code", "-q", "5", "-m", "5", "--lambda", "3", "--delta-prime", "51", "-b", "0",
        "--no-generator",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], 1042);
    assert_eq!(v["k"], 671);
    assert_eq!(v["k_closed_form"], 671);
    assert_eq!(v["distance"]["method"], "bound-only");
}

#[test]
fn code_small_narrow_sense() {
    let out = lcdbch(&["--json", "code", "-q", "2", "-m", "2", "--delta-prime", "2", "-b", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["k"], 1);
}

#[test]
fn invalid_lambda_is_usage_error() {
    let out = lcdbch(&["code", "-q", "4", "-m", "2", "--lambda", "3", "--delta-prime", "5", "-b", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not divide"));
}

#[test]
fn delta_with_check() {
    let out = lcdbch(&["delta", "-q", "7", "-m", "2", "-i", "3", "--check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("delta_3 = 17"), "got: {text}");
    assert!(text.contains("agrees"));
}

#[test]
fn dim_reports_both_sides() {
    let out = lcdbch(&["--json", "dim", "-q", "3", "-m", "4", "--lambda", "2", "--delta-prime", "9", "-b", "0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["k"], 8);
    assert_eq!(v["k_closed_form"], 8);
}

#[test]
fn distance_dual_route() {
    let out = lcdbch(&["--json", "distance", "-q", "5", "-m", "3", "--lambda", "2", "--delta-prime", "3", "-b", "0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["distance"]["value"], 4);
    assert_eq!(v["distance"]["method"], "macwilliams");
    assert_eq!(v["work"], 78125);
}

#[test]
fn verify_paper_passes_and_warns() {
    let out = lcdbch(&["--json", "--stable", "verify-paper"]);
    assert!(out.status.success(), "verify-paper must exit 0");
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["all_pass"], true);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 10);
    let statuses: Vec<&str> = cases.iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert_eq!(statuses.iter().filter(|s| **s == "warn").count(), 1);
    assert!(statuses.iter().all(|s| *s != "fail"));
    // the disputed-dimension row keeps the oracle value
    let warn = cases.iter().find(|c| c["status"] == "warn").unwrap();
    assert_eq!(warn["id"], "ex-n521");
    assert_eq!(warn["record"]["k"], 310);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_paper_stable_output_is_deterministic() {
    let a = lcdbch(&["--json", "--stable", "verify-paper"]);
    let b = lcdbch(&["--json", "--stable", "verify-paper"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_paper_empty_table_exits_zero() {
    let dir = std::env::temp_dir().join("lcdbch-empty-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.csv");
    std::fs::write(&path, "# empty fixture\nid,q,m,lambda,b,delta_prime,n,k,d,d_mode,policy,provenance,note\n").unwrap();
    let out = lcdbch(&["verify-paper", "--golden", path.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn verify_paper_detects_bad_expectation() {
    let dir = std::env::temp_dir().join("lcdbch-bad-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.csv");
    std::fs::write(
        &path,
        "id,q,m,lambda,b,delta_prime,n,k,d,d_mode,policy,provenance,note\n\
         bad-row,4,2,1,0,7,17,5,12,exhaustive,exact,computed,wrong dimension on purpose\n",
    )
    .unwrap();
    let out = lcdbch(&["verify-paper", "--golden", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}
