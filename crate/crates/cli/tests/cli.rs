//! End-to-end runs of the installed binary against the fixture files in
//! `tests/data`, pinning report bytes and exit codes.

use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mvspace"))
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn failure_of(args: &[&str]) -> (i32, String) {
    let out = run(args);
    assert!(!out.status.success());
    (
        out.status.code().expect("exit code"),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

#[test]
fn validate_reports_every_space() {
    let report = stdout_of(&["validate", &data("pair.mvs")]);
    assert_eq!(
        report,
        "field: Q\nambient: 2\nomega: 6\nspaces: 2\nV: valid\nW: valid\n"
    );
}

#[test]
fn dim_of_the_heavier_space() {
    let report = stdout_of(&["dim", &data("pair.mvs"), "--space", "V"]);
    assert_eq!(report, "dim: 4\n");
}

#[test]
fn counts_by_region_on_the_plane() {
    let plane = data("plane.mvs");
    for (vector, expected) in [("(0,0)", 4), ("(0,5)", 2), ("(1,0)", 1)] {
        let report = stdout_of(&["count", &plane, "--space", "V", "--vector", vector]);
        assert_eq!(report, format!("count: {expected}\n"));
    }
}

#[test]
fn dependence_witness_prints_coefficients() {
    let report = stdout_of(&[
        "indep",
        &data("plane.mvs"),
        "--space",
        "V",
        "--vectors",
        "(1,0);(-1,1)",
    ]);
    assert_eq!(
        report,
        "independent: no\nwitness: (1,1)\ncombination: (0,1)\ncount: 2\nmin count: 1\n"
    );
}

#[test]
fn plain_linear_dependence_prints_a_kernel_witness() {
    let report = stdout_of(&[
        "indep",
        &data("plane.mvs"),
        "--space",
        "V",
        "--vectors",
        "(1,0);(2,0)",
    ]);
    assert_eq!(
        report,
        "independent: no\nwitness: (1,-1/2)\ncombination: (0,0)\n"
    );
}

#[test]
fn equal_top_counts_can_still_be_independent() {
    let report = stdout_of(&[
        "indep",
        &data("pair.mvs"),
        "--space",
        "V",
        "--vectors",
        "(1,0);(0,1)",
    ]);
    assert_eq!(report, "independent: yes\n");
}

#[test]
fn mbasis_reports_counts_and_mdim() {
    let report = stdout_of(&["mbasis", &data("plane.mvs"), "--space", "V"]);
    assert_eq!(report, "basis: (0,1) (1,0)\ncounts: 2 1\nmdim: 3\n");
}

#[test]
fn sum_writes_a_loadable_result() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("sum.mvs");
    let out_text = out_path.to_str().unwrap().to_string();
    let report = stdout_of(&[
        "sum",
        &data("pair.mvs"),
        "--spaces",
        "V,W",
        "--out",
        &out_text,
    ]);
    assert_eq!(
        report,
        format!(
            "sum: V W\nomega: 6\nlevel 5:\nlevel 3: (0,1)\nlevel 2: (1,0) (0,1)\nmdim: 5\nout: {out_text}\n"
        )
    );
    // The written file loads back and answers like the in-memory result.
    let validated = stdout_of(&["validate", &out_text]);
    assert_eq!(
        validated,
        "field: Q\nambient: 2\nomega: 6\nspaces: 1\nRESULT: valid\n"
    );
    assert_eq!(
        stdout_of(&["dim", &out_text, "--space", "RESULT"]),
        "dim: 5\n"
    );
    assert_eq!(
        stdout_of(&["count", &out_text, "--space", "RESULT", "--vector", "(3,3)"]),
        "count: 2\n"
    );
}

#[test]
fn meet_caps_at_the_common_origin_count() {
    let report = stdout_of(&["meet", &data("pair.mvs"), "--spaces", "V,W"]);
    assert_eq!(
        report,
        "meet: V W\nomega: 6\nlevel 5:\nlevel 1: (1,0) (0,1)\nmdim: 2\n"
    );
}

#[test]
fn common_basis_serves_both_spaces() {
    let report = stdout_of(&["common-mbasis", &data("pair.mvs"), "--spaces", "V,W"]);
    assert_eq!(
        report,
        "basis for V: (0,1) (1,1)\ncounts for V: 3 1\nbasis for W: (1,1) (0,1)\ncounts for W: 2 1\n"
    );
}

#[test]
fn rank_nullity_balances_via_the_cli() {
    let report = stdout_of(&[
        "map",
        &data("plane.mvs"),
        "--space",
        "V",
        "--matrix",
        "1,0",
        "--what",
        "rank-nullity",
    ]);
    assert_eq!(report, "kernel mdim: 2\nimage mdim: 1\ntotal: 3\ndim: 3\n");
}

#[test]
fn kernel_restriction_keeps_the_heavy_axis() {
    let report = stdout_of(&[
        "map",
        &data("plane.mvs"),
        "--space",
        "V",
        "--matrix",
        "1,0",
        "--what",
        "ker",
    ]);
    assert_eq!(
        report,
        "carrier: (0,1)\nomega: 4\nlevel 4:\nlevel 2: (0,1)\nmdim: 2\n"
    );
}

#[test]
fn image_space_lands_in_the_codomain() {
    let report = stdout_of(&[
        "map",
        &data("plane.mvs"),
        "--space",
        "V",
        "--matrix",
        "1,0",
        "--what",
        "image",
    ]);
    assert_eq!(report, "omega: 4\nlevel 4:\nlevel 1: (1)\nmdim: 1\n");
}

#[test]
fn oracle_check_agrees_on_finite_fields() {
    let report = stdout_of(&["oracle-check", &data("gf.mvs")]);
    assert_eq!(
        report,
        "A: closed\nB: closed\nsum A B: agree\nmeet A B: agree\nchecks: 4\n"
    );
}

#[test]
fn oracle_check_requires_a_finite_field() {
    let (code, stderr) = failure_of(&["oracle-check", &data("pair.mvs")]);
    assert_eq!(code, 4);
    assert!(stderr.contains("finite field"), "stderr: {stderr}");
}

#[test]
fn dominance_failure_is_a_precondition_error() {
    let (code, stderr) = failure_of(&["common-mbasis", &data("plane.mvs"), "--spaces", "V,L"]);
    assert_eq!(code, 4);
    assert!(stderr.contains("dominance"), "stderr: {stderr}");
}

#[test]
fn unknown_space_is_a_precondition_error() {
    let (code, stderr) = failure_of(&["dim", &data("pair.mvs"), "--space", "Z"]);
    assert_eq!(code, 4);
    assert!(stderr.contains("no space named"), "stderr: {stderr}");
}

#[test]
fn syntax_errors_exit_two_with_a_position() {
    let file = write_temp("field Q\nambient 2\nomega 4\nspace V\n  level 2 span ( }\nend\n");
    let (code, stderr) = failure_of(&["validate", file.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 5, column 16"), "stderr: {stderr}");
}

#[test]
fn invariant_violations_exit_three() {
    let file = write_temp(
        "field Q\nambient 2\nomega 4\nspace V\n  level 1 span { (1,0) }\n  level 3 span { (1,0) (0,1) }\nend\n",
    );
    let (code, stderr) = failure_of(&["validate", file.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("strictly decreasing"), "stderr: {stderr}");
}

#[test]
fn malformed_vector_arguments_exit_two() {
    let (code, _) = failure_of(&[
        "count",
        &data("plane.mvs"),
        "--space",
        "V",
        "--vector",
        "(1;0)",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn missing_files_exit_two() {
    let (code, _) = failure_of(&["validate", "/nonexistent.mvs"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().output().expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let path = data("pair.mvs");
    let args = ["sum", &path, "--spaces", "V,W"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
    let first = run(&["oracle-check", &data("gf.mvs")]);
    let second = run(&["oracle-check", &data("gf.mvs")]);
    assert_eq!(first.stdout, second.stdout);
}
