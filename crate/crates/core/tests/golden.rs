//! Golden-file regression tests.
//!
//! The CSVs under `tests/golden/` were generated by the binary after the
//! acceptance suite — including its independent-oracle cross-checks —
//! passed. Any byte of drift here is either an intentional model change
//! (regenerate the files and say why in the commit) or a regression.

use std::process::Command;

fn run_csv(args: &[&str]) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_cellwatt"))
        .args(args)
        .env_remove("CELLWATT_PROFILES")
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr),);
    output.stdout
}

#[test]
fn fig4a_series_matches_the_golden_file() {
    let expected = include_bytes!("golden/fig4a.csv");
    let actual = run_csv(&["figures", "--which", "fig4a", "--format", "csv"]);
    assert_eq!(actual, expected, "fig4a drifted:\n{}", String::from_utf8_lossy(&actual),);
}

#[test]
fn fig5b_series_matches_the_golden_file() {
    let expected = include_bytes!("golden/fig5b.csv");
    let actual = run_csv(&["figures", "--which", "fig5b", "--format", "csv"]);
    assert_eq!(actual, expected, "fig5b drifted:\n{}", String::from_utf8_lossy(&actual),);
}

#[test]
fn validation_report_matches_the_golden_file() {
    let expected = include_bytes!("golden/validation.csv");
    let actual = run_csv(&["validate", "--format", "csv"]);
    assert_eq!(actual, expected, "validation drifted:\n{}", String::from_utf8_lossy(&actual),);
}
