//! End-to-end command-line behavior through the real binary: exit codes,
//! output formats, overrides, and the gap policy.

use std::process::{Command, Output};

fn bintrans(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bintrans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_with_range_override_passes() {
    let out = bintrans(&["check", "intro-catalan-double", "--n", "1..50", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: bintrans_cli::report::Report = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report.points, 50);
    assert_eq!(report.passes, 50);
    assert!(report.failures.is_empty());
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let out = bintrans(&["check", "no-such-id"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no identity"));
}

#[test]
fn eval_seq_prints_exact_rationals() {
    let out = bintrans(&["eval-seq", "bernoulli", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "-691/2730");

    let out = bintrans(&["eval-seq", "horadam(0,1;4,3)", "4"]);
    assert_eq!(stdout_of(&out).trim(), "40");

    let out = bintrans(&["eval-seq", "gibonacci(0,1)", "-2"]);
    assert_eq!(stdout_of(&out).trim(), "-1");
}

#[test]
fn eval_seq_domain_and_parse_errors_exit_2() {
    assert_eq!(bintrans(&["eval-seq", "bernoulli", "-1"]).status.code(), Some(2));
    assert_eq!(bintrans(&["eval-seq", "made-up-seq", "3"]).status.code(), Some(2));
}

#[test]
fn eval_transform_applies_the_signed_transform() {
    // all-ones transforms to the delta sequence
    let out = bintrans(&["eval-transform", "constant(1)", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "0");
    let out = bintrans(&["eval-transform", "fibonacci", "6"]);
    assert_eq!(stdout_of(&out).trim(), "-8"); // transform of F is -F
}

#[test]
fn gap_policy_controls_the_exit_code() {
    let strict = bintrans(&["check", "prop-4.4-catalan-4Cn", "--n", "0..5"]);
    assert_eq!(strict.status.code(), Some(1));
    let allow = bintrans(&["check", "prop-4.4-catalan-4Cn", "--n", "0..5", "--gaps", "allow"]);
    assert_eq!(allow.status.code(), Some(0));
}

#[test]
fn malformed_overrides_exit_2() {
    assert_eq!(
        bintrans(&["check", "thm-3.1", "--n", "5..1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bintrans(&["check", "thm-3.1", "--t", "1,2"]).status.code(),
        Some(2),
        "t is not a parameter of the geometric kernel"
    );
    assert_eq!(
        bintrans(&["check", "thm-3.1", "--set", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn unknown_flags_are_errors() {
    assert_eq!(
        bintrans(&["check", "thm-3.1", "--frobnicate"]).status.code(),
        Some(2)
    );
}

#[test]
fn text_and_json_agree_on_counts() {
    let json = bintrans(&[
        "verify-all", "--section", "4.6", "--format", "json", "--canonical",
    ]);
    assert_eq!(json.status.code(), Some(0));
    let batch: bintrans_cli::report::Batch =
        serde_json::from_str(&stdout_of(&json)).unwrap();
    let text = bintrans(&["verify-all", "--section", "4.6"]);
    let text_out = stdout_of(&text);
    let totals_line = text_out
        .lines()
        .find(|l| l.starts_with("totals:"))
        .expect("totals line");
    assert!(totals_line.contains(&format!("{} pass", batch.totals.pass)));
    assert!(totals_line.contains(&format!("{} fail", batch.totals.fail)));
    assert_eq!(batch.reports.len(), 8);
}

#[test]
fn canonical_json_is_stable_across_runs_and_threads() {
    let a = bintrans(&[
        "verify-all", "--section", "5.2", "--format", "json", "--canonical",
        "--parallel", "1",
    ]);
    let b = bintrans(&[
        "verify-all", "--section", "5.2", "--format", "json", "--canonical",
        "--parallel", "3",
    ]);
    assert_eq!(stdout_of(&a), stdout_of(&b));
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn batch_json_round_trips() {
    let out = bintrans(&[
        "verify-all", "--section", "4.6", "--format", "json", "--canonical",
    ]);
    let bytes = stdout_of(&out);
    let batch: bintrans_cli::report::Batch = serde_json::from_str(&bytes).unwrap();
    assert_eq!(batch.to_json(), bytes.trim_end());
}

#[test]
fn listing_covers_catalog_and_pairs() {
    let out = bintrans(&["list"]);
    let text = stdout_of(&out);
    assert!(text.contains("thm-3.1"));
    assert!(text.contains("intro-bernoulli-double"));
    assert!(text.contains("identities"));

    let pairs = bintrans(&["list", "--pairs"]);
    let text = stdout_of(&pairs);
    assert!(text.contains("bernoulli-signed"));
    assert!(text.contains("(optional)"));
    assert!(!text.contains("INVALID"));

    let json = bintrans(&["list", "--format", "json"]);
    let idx: Vec<bintrans_cli::index::IndexEntry> =
        serde_json::from_str(&stdout_of(&json)).unwrap();
    assert!(idx.len() >= 60);
    assert!(idx.iter().any(|e| e.id == "thm-3.11-beta-a"));
}

#[test]
fn pair_override_by_label() {
    let out = bintrans(&[
        "check", "thm-3.4-particular", "--pair", "lucas-self,catalan-donaghey",
        "--n", "1..6", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: bintrans_cli::report::Report = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report.points, 12);
    assert_eq!(bintrans(&["check", "thm-3.4-particular", "--pair", "nope"]).status.code(), Some(2));
}
