//! End-to-end tests against the compiled `qwell` binary: flag handling,
//! exit codes, and output determinism.

use std::path::Path;
use std::process::{Command, Output};

fn qwell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn stirling_runs_clean() {
    let out = qwell(&["stirling", "--l1", "1", "--l3", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("# metrics: cycle=stirling"));
}

#[test]
fn stirling_rejects_boundary_geometry() {
    let out = qwell(&["stirling", "--l1", "1", "--l3", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("L3 > 2·L1"));
}

#[test]
fn missing_required_flag_exits_2() {
    let out = qwell(&["stirling", "--l1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_sample_exits_2() {
    let out = qwell(&["stirling", "--l1", "1", "--l3", "4", "--samples", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unreachable_threshold_exits_3() {
    let out = qwell(&["stirling", "--l1", "1", "--l3", "4", "--threshold", "1e-30"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("verification failed"));
}

#[test]
fn unwritable_out_path_exits_4() {
    let out = qwell(&[
        "stirling",
        "--l1",
        "1",
        "--l3",
        "4",
        "--out",
        "/nonexistent-qwell-dir/report.csv",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("i/o failure"));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("qwell-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = qwell(&[
        "stirling",
        "--l1",
        "1",
        "--l3",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("leg_id,L,P,E,a1_sq"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explicit_units_need_both_constants() {
    let out = qwell(&["stirling", "--l1", "1", "--l3", "4", "--units", "explicit"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--hbar"));

    let out = qwell(&[
        "stirling",
        "--l1",
        "1",
        "--l3",
        "4",
        "--units",
        "explicit",
        "--hbar",
        "1.054571817e-34",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stray_hbar_without_explicit_units_exits_2() {
    let out = qwell(&["stirling", "--l1", "1", "--l3", "4", "--hbar", "2.0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--units explicit"));
}

#[test]
fn explicit_si_units_keep_the_efficiency() {
    let out = qwell(&[
        "ericsson",
        "--l3",
        "1e-9",
        "--l1",
        "4e-9",
        "--units",
        "explicit",
        "--hbar",
        "1.054571817e-34",
        "--mass",
        "9.1093837015e-31",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let eff = value["metrics"]["efficiency"].as_f64().unwrap();
    assert!((eff - 0.75).abs() < 1e-12);
}

#[test]
fn csv_reruns_are_byte_identical() {
    let args = ["ericsson", "--l3", "1", "--l1", "4", "--samples", "16"];
    let a = qwell(&args);
    let b = qwell(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_single_geometry_passes() {
    let out = qwell(&["verify", "stirling", "--l1", "1", "--l3", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("check=constant_n_pair_sum"));
    assert!(text.contains("status=PASS"));
}

#[test]
fn verify_sweep_is_seed_deterministic() {
    let a = qwell(&["verify", "--seed", "7"]);
    let b = qwell(&["verify", "--seed", "7"]);
    let c = qwell(&["verify", "--seed", "8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert!(stdout(&a).contains("# summary geometries=20"));
}

#[test]
fn verify_geometry_requires_both_widths() {
    let out = qwell(&["verify", "stirling", "--l1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_report_to_file() {
    let dir = std::env::temp_dir().join(format!("qwell-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("verify.txt");
    let out = qwell(&[
        "verify",
        "ericsson",
        "--l1",
        "4",
        "--l3",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(&path).exists());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("cycle=ericsson"));
    std::fs::remove_dir_all(&dir).unwrap();
}
