//! End-to-end tests of the `sid` binary: exit codes, formats, piping, the
//! group flag, and the tolerance override.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sid(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sid"));
    cmd.args(args);
    cmd
}

fn run(args: &[&str]) -> Output {
    sid(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = sid(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input)
        .expect("write to child");
    child.wait_with_output().expect("child finishes")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("utf-8 stderr")
}

#[test]
fn decompose_case_json_matches_the_golden_bytes() {
    let output = run(&["decompose", "--case", "3", "--format", "json"]);
    assert!(output.status.success(), "{}", stderr_of(&output));
    let golden = include_bytes!("golden/case3_decompose.json");
    assert_eq!(output.stdout, golden);
}

#[test]
fn pipe_from_cases_matches_the_golden_bytes() {
    let dist = run(&["cases", "--case", "3", "--emit", "dist"]);
    assert!(dist.status.success());
    let report = run_with_stdin(&["decompose", "--format", "json"], &dist.stdout);
    assert!(report.status.success(), "{}", stderr_of(&report));
    let golden = include_bytes!("golden/case3_decompose.json");
    assert_eq!(report.stdout, golden);
}

#[test]
fn decompose_text_report_has_all_sections() {
    let output = run(&["decompose", "--case", "2"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("red"));
    assert!(text.contains("identity residuals"));
    assert!(text.contains("symmetry audit"));
    assert!(text.contains("block positivity"));
    assert!(text.contains("1.000000000"));
}

#[test]
fn decompose_methods_agree_on_case_2() {
    for method in ["auto", "oracle", "formula"] {
        let output = run(&[
            "decompose",
            "--case",
            "2",
            "--method",
            method,
            "--format",
            "json",
        ]);
        assert!(output.status.success(), "method {method}");
        let parsed: serde_json::Value =
            serde_json::from_str(stdout_of(&output)).expect("valid json");
        let red = parsed["red"].as_f64().unwrap();
        let syn = parsed["syn"].as_f64().unwrap();
        assert!((red - 1.0).abs() < 1e-9, "method {method}: red {red}");
        assert!((syn - 1.0).abs() < 1e-9, "method {method}: syn {syn}");
    }
}

#[test]
fn direct_method_declines_structureless_input() {
    let output = run(&["decompose", "--case", "1", "--method", "direct"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("direct method does not apply"));
}

#[test]
fn malformed_json_is_a_usage_error() {
    let output = run_with_stdin(&["decompose"], b"{broken");
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("error:"));
}

#[test]
fn conflicting_inputs_are_rejected_by_the_parser() {
    let output = run(&["decompose", "--case", "1", "--input", "x.json"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn csv_samples_roundtrip_through_decompose() {
    let samples = run(&["cases", "--case", "1", "--emit", "samples"]);
    assert!(samples.status.success());
    let text = stdout_of(&samples);
    assert!(text.starts_with("X1,X2,X3\n"));
    assert_eq!(text.lines().count(), 65, "header plus 64 rows");
    let report = run_with_stdin(&["decompose", "--format", "json"], &samples.stdout);
    assert!(report.status.success(), "{}", stderr_of(&report));
    let parsed: serde_json::Value = serde_json::from_str(stdout_of(&report)).expect("valid json");
    assert!((parsed["un"]["X1|X2"].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn input_file_and_out_file_work() {
    let dir = tempfile::tempdir().unwrap();
    let dist_path = dir.path().join("case4.json");
    let report_path = dir.path().join("report.json");
    let dist = run(&["cases", "--case", "4", "--emit", "dist"]);
    std::fs::write(&dist_path, &dist.stdout).unwrap();
    let output = run(&[
        "decompose",
        "--input",
        dist_path.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr_of(&output));
    assert!(output.stdout.is_empty());
    let report = std::fs::read_to_string(&report_path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert!((parsed["red"].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn missing_input_file_is_an_io_error() {
    let output = run(&["decompose", "--input", "/nonexistent/table.json"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn group_flag_rebuilds_macro_variables() {
    // A three-coin parity system described at the bit level, regrouped into
    // one composite pair and the parity bit.
    let micro = r#"{"variables":[
        {"name":"a","alphabet":["0","1"]},
        {"name":"b","alphabet":["0","1"]},
        {"name":"p","alphabet":["0","1"]}],
      "pmf":[
        {"outcome":["0","0","0"],"p":0.25},
        {"outcome":["0","1","1"],"p":0.25},
        {"outcome":["1","0","1"],"p":0.25},
        {"outcome":["1","1","0"],"p":0.25}]}"#;
    let output = run_with_stdin(
        &["decompose", "--group", "W=a,b;A=a;P=p", "--format", "json"],
        micro.as_bytes(),
    );
    assert!(output.status.success(), "{}", stderr_of(&output));
    let parsed: serde_json::Value = serde_json::from_str(stdout_of(&output)).expect("valid json");
    // W determines A, and (A, P) determines the second bit of W: the chain
    // structure pins red = I(W; A) shared by all three.
    assert!(parsed["red"].as_f64().unwrap() >= 0.0);
    assert_eq!(parsed["method"], "direct");

    let shannon = run_with_stdin(
        &["shannon", "--group", "W=a,b;P=p", "--entropy", "W", "P"],
        micro.as_bytes(),
    );
    assert!(shannon.status.success(), "{}", stderr_of(&shannon));
    assert!(stdout_of(&shannon).contains("H(W,P) = 2.000000000"));
}

#[test]
fn bad_group_specs_fail_cleanly() {
    let dist = run(&["cases", "--case", "1", "--emit", "dist"]);
    let output = run_with_stdin(&["decompose", "--group", "W=X1,X9;V=X2;U=X3"], &dist.stdout);
    assert_eq!(output.status.code(), Some(1));
    let output = run_with_stdin(&["decompose", "--group", "garbage"], &dist.stdout);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn shannon_flags_and_standard_report() {
    let output = run(&["shannon", "--case", "1", "--mi", "X1", "X2"]);
    assert!(output.status.success());
    assert_eq!(stdout_of(&output), "I(X1;X2) = 2.000000000\n");

    let output = run(&[
        "shannon", "--case", "3", "--coi", "X1", "X2", "X5", "--cmi", "X1", "X2", "X5",
    ]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("I(X1;X2|X5) = 2.000000000"));
    assert!(text.contains("CoI(X1,X2,X5) = 0.000000000"));

    let output = run(&["shannon", "--case", "2"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("H(X1) = 4.000000000"));
    assert!(text.contains("H(X1,X2,X4) = 6.000000000"));
    assert!(text.contains("TC(X1,X2,X4) = 6.000000000"));
    assert!(text.contains("Ext(X4) = 0.000000000"));

    let output = run(&["shannon", "--case", "1", "--ext", "X3", "--format", "json"]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout_of(&output)).expect("valid json");
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows[0]["measure"], "ext");
    assert_eq!(rows[0]["bits"], 0.0);
}

#[test]
fn shannon_rejects_unknown_variables() {
    let output = run(&["shannon", "--case", "1", "--entropy", "X7"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("unknown variable"));
}

#[test]
fn blocks_single_value_text_marks_classes() {
    let output = run(&["blocks", "--case", "2", "--anchor", "X1", "--value", "0000"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("yellow"));
    assert!(text.contains("syn"));
    assert!(text.contains("unique:X2"));
    assert!(text.contains("plain"));
    assert!(text.contains("0.015625000"));
}

#[test]
fn blocks_all_values_json_reports_positivity() {
    let output = run(&[
        "blocks", "--case", "3", "--anchor", "X2", "--format", "json",
    ]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout_of(&output)).expect("valid json");
    assert_eq!(parsed["anchor"], "X2");
    assert_eq!(parsed["reports"].as_array().unwrap().len(), 16);
    assert_eq!(parsed["positivity"]["syn"], true);
    assert_eq!(parsed["positivity"]["un"]["X1"], false);
    assert_eq!(parsed["positivity"]["un"]["X5"], false);
}

#[test]
fn blocks_bad_anchor_value_fails() {
    let output = run(&["blocks", "--case", "1", "--anchor", "X1", "--value", "9999"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn venn_emits_svg() {
    let output = run(&["venn", "--case", "3"]);
    assert!(output.status.success());
    let svg = stdout_of(&output);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("2.000"));
    assert!(svg.trim_end().ends_with("</svg>"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("case1.svg");
    let output = run(&["venn", "--case", "1", "--out", path.to_str().unwrap()]);
    assert!(output.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("</svg>"));
}

#[test]
fn cases_emit_table_is_annotated() {
    let output = run(&["cases", "--case", "2", "--emit", "table"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("case 2"));
    assert!(text.contains("anchor X1 = 0000"));
    assert!(text.contains("yellow"));
    assert!(text.contains("syn"));
}

#[test]
fn invalid_case_number_fails() {
    let output = run(&["cases", "--case", "9"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("case number must be 1..=4, got 9"));
}

#[test]
fn tolerance_env_var_is_validated() {
    let output = sid(&["decompose", "--case", "1"])
        .env("SID_TOLERANCE", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("SID_TOLERANCE"));

    let output = sid(&["decompose", "--case", "1"])
        .env("SID_TOLERANCE", "-1.0")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));

    let output = sid(&["decompose", "--case", "1", "--format", "json"])
        .env("SID_TOLERANCE", "1e-6")
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr_of(&output));
}

#[test]
fn decompose_exit_reflects_violations() {
    // A valid decomposition exits 0; the case studies never violate.
    let output = run(&["decompose", "--case", "1"]);
    assert_eq!(output.status.code(), Some(0));
}
