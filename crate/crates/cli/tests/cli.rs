//! End-to-end tests of the `coverscan` binary: exit codes, JSON payloads,
//! and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coverscan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn without_elapsed(output: &Output) -> String {
    let text = String::from_utf8_lossy(&output.stdout);
    match text.find(",\"elapsed_ms\":") {
        Some(idx) => text[..idx].to_string(),
        None => text.into_owned(),
    }
}

#[test]
fn check_covered_exits_zero() {
    let path = fixture("periodic.grid");
    let output = run(&["check", path.to_str().unwrap(), "--dims", "2", "2"]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_eq!(json["covered"], serde_json::json!(true));
    assert_eq!(json["h"], serde_json::json!(2));
    assert_eq!(json["w"], serde_json::json!(2));
}

#[test]
fn check_uncovered_exits_one_with_witness() {
    let path = fixture("latin.grid");
    let output = run(&["check", path.to_str().unwrap(), "--dims", "1", "1"]);
    assert_eq!(output.status.code(), Some(1));
    let json = stdout_json(&output);
    assert_eq!(json["covered"], serde_json::json!(false));
    assert_eq!(json["witness"], serde_json::json!([0, 1]));
}

#[test]
fn check_with_matching_pattern_file() {
    let dir = std::env::temp_dir().join("coverscan-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let pattern = dir.join("corner.grid");
    std::fs::write(&pattern, "2 2\na b\nc d\n").unwrap();
    let text = fixture("periodic.grid");
    let output = run(&[
        "check",
        text.to_str().unwrap(),
        pattern.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn check_text_against_itself_is_covered() {
    let text = fixture("latin.grid");
    let output = run(&["check", text.to_str().unwrap(), text.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_eq!(json["covered"], serde_json::json!(true));
    assert_eq!(json["h"], serde_json::json!(3));
    assert_eq!(json["w"], serde_json::json!(3));
}

#[test]
fn check_rejects_pattern_that_is_not_the_corner() {
    let dir = std::env::temp_dir().join("coverscan-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let pattern = dir.join("off-corner.grid");
    std::fs::write(&pattern, "2 2\nb a\nd c\n").unwrap();
    let text = fixture("periodic.grid");
    let output = run(&[
        "check",
        text.to_str().unwrap(),
        pattern.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let json = stdout_json(&output);
    assert_eq!(
        json["reason"],
        serde_json::json!("pattern differs from top-left sub-image")
    );
    assert_eq!(json["witness"], serde_json::json!([0, 0]));
}

#[test]
fn check_requires_a_candidate_shape() {
    let path = fixture("periodic.grid");
    let output = run(&["check", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("--dims"));
}

#[test]
fn malformed_grid_exits_two_with_line_number() {
    let dir = std::env::temp_dir().join("coverscan-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ragged.grid");
    std::fs::write(&path, "2 3\na b c\na b\n").unwrap();
    let output = run(&["check", path.to_str().unwrap(), "--dims", "1", "1"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("line 3"), "stderr: {stderr}");
}

#[test]
fn missing_file_exits_two_naming_the_path() {
    let output = run(&["check", "/nonexistent/input.grid", "--dims", "1", "1"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("/nonexistent/input.grid"));
}

#[test]
fn mincover_finds_the_periodic_block() {
    let path = fixture("periodic.grid");
    let output = run(&["mincover", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_eq!(json["best"], serde_json::json!([2, 2]));
    assert_eq!(json["metric"], serde_json::json!("area"));
}

#[test]
fn mincover_row_fixture_under_each_metric() {
    let path = fixture("row.grid");
    for metric in ["area", "l1", "linf"] {
        let output = run(&["mincover", path.to_str().unwrap(), "--metric", metric]);
        let json = stdout_json(&output);
        assert_eq!(json["best"], serde_json::json!([1, 3]), "metric {metric}");
    }
}

#[test]
fn mincover_no_prune_matches_default() {
    let path = fixture("periodic.grid");
    let pruned = stdout_json(&run(&["mincover", path.to_str().unwrap()]));
    let unpruned = stdout_json(&run(&["mincover", path.to_str().unwrap(), "--no-prune"]));
    assert_eq!(pruned["best"], unpruned["best"]);
    assert_eq!(pruned["eval"], unpruned["eval"]);
}

#[test]
fn mincover_stats_flag_adds_prune_stats() {
    let path = fixture("periodic.grid");
    let json = stdout_json(&run(&["mincover", path.to_str().unwrap(), "--stats"]));
    assert_eq!(json["prune_stats"]["total"], serde_json::json!(24));
    let plain = stdout_json(&run(&["mincover", path.to_str().unwrap()]));
    assert!(plain.get("prune_stats").is_none());
}

#[test]
fn mincover_accepts_pgm_input() {
    let path = fixture("checker.pgm");
    let json = stdout_json(&run(&["mincover", path.to_str().unwrap()]));
    assert_eq!(json["best"], serde_json::json!([2, 2]));
}

#[test]
fn mincover_output_is_deterministic() {
    let path = fixture("periodic.grid");
    for flags in [vec![], vec!["--no-prune"], vec!["--stats"]] {
        let mut args = vec!["mincover", path.to_str().unwrap()];
        args.extend(&flags);
        let first = without_elapsed(&run(&args));
        let second = without_elapsed(&run(&args));
        assert_eq!(first, second, "flags {flags:?}");
    }
}

#[test]
fn threads_env_var_does_not_change_the_winner() {
    let path = fixture("periodic.grid");
    let sequential = stdout_json(&run(&["mincover", path.to_str().unwrap()]));
    let output = Command::new(env!("CARGO_BIN_EXE_coverscan"))
        .args(["mincover", path.to_str().unwrap()])
        .env("COVERSCAN_THREADS", "4")
        .output()
        .expect("binary runs");
    let parallel = stdout_json(&output);
    assert_eq!(sequential["best"], parallel["best"]);
    assert_eq!(sequential["eval"], parallel["eval"]);
}

#[test]
fn covers1d_reports_all_lengths() {
    let output = run(&["covers1d", "abaababaaba"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&output.stdout).trim(),
        r#"{"length":11,"cover_lengths":[3,6,11],"minimal":3}"#
    );
}

#[test]
fn covers1d_empty_string_is_an_input_error() {
    let output = run(&["covers1d", ""]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn wang_check_valid_file() {
    let path = fixture("row.wang");
    let output = run(&["wang", "check", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_eq!(json["valid"], serde_json::json!(true));
    assert_eq!(json["cols"], serde_json::json!(6));
}

#[test]
fn wang_check_mismatched_edge_names_location() {
    let path = fixture("broken.wang");
    let output = run(&["wang", "check", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("(0, 0)") && stderr.contains("(0, 1)"), "stderr: {stderr}");
}

#[test]
fn wang_mincover_alternating_row() {
    let path = fixture("row.wang");
    let output = run(&["wang", "mincover", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let json = stdout_json(&output);
    assert_eq!(json["cover"], serde_json::json!([1, 2]));
}

#[test]
fn wang_mincover_uniform_tiling() {
    let path = fixture("uniform.wang");
    let json = stdout_json(&run(&["wang", "mincover", path.to_str().unwrap()]));
    assert_eq!(json["cover"], serde_json::json!([1, 1]));
}

#[test]
fn wang_undefined_tile_name_exits_two() {
    let dir = std::env::temp_dir().join("coverscan-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("undefined.wang");
    std::fs::write(&path, "tileset 1\nA 0 0 0 0\ntiling 1 2\nA Z\n").unwrap();
    let output = run(&["wang", "check", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("line 4") && stderr.contains("Z"), "stderr: {stderr}");
}
