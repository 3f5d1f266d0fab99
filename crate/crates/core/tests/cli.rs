use std::process::Command;

use qh_toeplitz::cli::{run_with_default_kmax, CommandOutcome};
use qh_toeplitz::commutant::CommutantResultJson;
use qh_toeplitz::operators::{CommutatorReportJson, OperatorMatrixJson};
use qh_toeplitz::quadrature::ProjectionReportJson;

fn run(args: &[&str]) -> CommandOutcome {
    run_with_default_kmax(std::iter::once("qht").chain(args.iter().copied()), 16)
}

fn json<T: serde::de::DeserializeOwned + serde::Serialize>(args: &[&str]) -> (i32, T) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = run(&full);
    let v: T =
        serde_json::from_str(&out.payload).unwrap_or_else(|e| panic!("{e}: {}", out.payload));
    // re-serializing reproduces the payload
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), out.payload);
    (out.exit_code, v)
}

#[test]
fn mellin_and_convolve() {
    assert_eq!(
        run(&["mellin", "r^(3)"]),
        CommandOutcome {
            exit_code: 0,
            payload: "1/(z + 3)".into()
        }
    );
    let out = run(&["convolve", "r^(1)", "r^(3)"]);
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.payload, "1/2*r^(1) - 1/2*r^(3)");
}

#[test]
fn apply_examples() {
    assert_eq!(
        run(&["apply", "--symbol", "E(1)*r^(1)", "--basis", "z^0"]).payload,
        "1*z^1"
    );
    assert_eq!(
        run(&["apply", "--symbol", "E(-1)*r^(3)", "--basis", "z^1"]).payload,
        "1/3*z^0"
    );
    assert_eq!(
        run(&["apply", "--symbol", "E(1)*r^(1)", "--basis", "w^2"]).exit_code,
        2
    );
}

#[test]
fn matrix_json_schema() {
    let (code, m): (i32, OperatorMatrixJson) =
        json(&["matrix", "--symbol", "E(1)*r^(1)", "--kmax", "2"]);
    assert_eq!(code, 0);
    assert_eq!(m.kmax, 2);
    assert_eq!(m.out_of_range, vec!["z^2".to_string()]);
    assert!(m
        .entries
        .iter()
        .any(|e| e.from == "zbar^1" && e.to == "z^0" && e.coeff == "1/2"));
}

#[test]
fn commute_exit_codes() {
    let (code, rep): (i32, CommutatorReportJson) = json(&[
        "commute",
        "--f",
        "E(-1)*r^(3)",
        "--g",
        "E(1)*(2*r^(-1) - r^(1))",
        "--kmax",
        "500",
    ]);
    assert_eq!((code, rep.commutes, rep.kmax), (0, true, 500));
    let (code, rep): (i32, CommutatorReportJson) =
        json(&["commute", "--f", "E(-1)*r^(3)", "--g", "E(1)*r^(-1)"]);
    assert_eq!((code, rep.commutes, rep.kmax), (1, false, 16));
    assert_eq!(rep.failures[0].index, "z^1");
}

#[test]
fn solve_json_schema() {
    let (code, r): (i32, CommutantResultJson) =
        json(&["solve", "--p", "1", "--s", "1", "--m", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r.ansatz, vec!["-1", "1"]);
    assert_eq!(r.kernel, vec!["2*r^(-1) - r^(1)"]);
    assert_eq!(r.candidate.as_deref(), Some("2*r^(-1) - r^(1)"));
    assert!(r.consistent);
    let text = run(&["solve", "--p", "1", "--s", "1", "--m", "1"]).payload;
    assert!(text.contains("kernel: [2*r^(-1) - r^(1)]"), "{text}");
}

#[test]
fn conv_solve() {
    assert_eq!(
        run(&["conv-solve", "--p", "1", "--psi", "r^(3)"]).payload,
        "2*r^(-1) - r^(1)"
    );
    assert_eq!(
        run(&["conv-solve", "--p", "2", "--psi", "r^(1)"]).exit_code,
        1
    );
}

#[test]
fn consistency_check_codes() {
    assert_eq!(
        run(&["check-eq22", "--p", "2", "--s", "1", "--n", "3"]).exit_code,
        1
    );
    let out = run(&["check-eq22", "--p", "3", "--s", "1", "--n", "1"]);
    assert_eq!((out.exit_code, out.payload.as_str()), (0, "[]"));
}

#[test]
fn validate_report() {
    let (code, rep): (i32, ProjectionReportJson) =
        json(&["validate", "--symbol", "E(-2)*r^(2)", "--kmax", "10"]);
    assert_eq!(code, 0);
    assert_eq!(rep.kmax, 10);
    assert!(rep.max_abs_dev <= 1e-9);
}

#[test]
fn parse_errors_report_position() {
    let out = run(&["apply", "--symbol", "E(1) r^(1)", "--basis", "z^0"]);
    assert_eq!(out.exit_code, 2);
    assert!(out.payload.contains("position 5"), "{}", out.payload);
}

#[test]
fn binary_uses_environment_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_qht"))
        .args([
            "commute",
            "--f",
            "E(1)*r^(1)",
            "--g",
            "E(1)*r^(1)",
            "--json",
        ])
        .env("QH_DEFAULT_KMAX", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rep: CommutatorReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep.kmax, 7);

    let out = Command::new(env!("CARGO_BIN_EXE_qht"))
        .args(["mellin", "r^("])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
