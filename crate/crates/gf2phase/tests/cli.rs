//! End-to-end CLI behavior: exit codes, the build/invariants pipeline,
//! validation of corrupted files, and budget-zero verdict propagation.

use std::path::Path;
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_gf2phase")
}

fn run(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary should run");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(dir.path(), &["no-such-verb"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(dir.path(), &["build"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(dir.path(), &["iso", "a.json"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = run(dir.path(), &["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Usage"));
}

#[test]
fn build_then_invariants_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = run(
        dir.path(),
        &["build", "heisenberg:n=1,k=2", "--out", "p.json"],
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("dim 32"));

    let (code, stdout, _) = run(dir.path(), &["invariants", "p.json"]);
    assert_eq!(code, 0, "{stdout}");
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["dim"], 32);
    assert_eq!(
        report["layer_dims"],
        serde_json::json!([32, 24, 8, 0])
    );
    assert_eq!(report["boundary_depth"], 2);
    assert_eq!(report["dichotomy"], "Weak(2)");
}

#[test]
fn bad_spec_string_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, stderr) = run(dir.path(), &["build", "heisenberg:n=0,k=2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error"));
}

#[test]
fn validate_valid_and_corrupted_phase_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(
        dir.path(),
        &["build", "heisenberg:n=1,k=1", "--out", "p.json"],
    );
    assert_eq!(code, 0);
    let (code, stdout, _) = run(dir.path(), &["validate", "p.json"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("valid"));

    // corrupt one structure-constant bit: product (1,1) gains e_0
    let text = std::fs::read_to_string(dir.path().join("p.json")).unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mul = value["mul"].as_array_mut().unwrap();
    let entry = mul
        .iter_mut()
        .find(|e| e[0] == 1 && e[1] == 1)
        .expect("product (1,1) present");
    let bit = entry[2][0].as_u64().unwrap();
    entry[2][0] = serde_json::json!(1 - bit);
    std::fs::write(
        dir.path().join("bad.json"),
        serde_json::to_string_pretty(&value).unwrap(),
    )
    .unwrap();

    let (code, _, stderr) = run(dir.path(), &["validate", "bad.json"]);
    assert_eq!(code, 1);
    assert!(
        stderr.contains("associativity")
            || stderr.contains("unit_identity")
            || stderr.contains("filtration"),
        "must name the violated invariant, got: {stderr}"
    );
}

#[test]
fn malformed_json_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.json"), "{ not json").unwrap();
    let (code, _, stderr) = run(dir.path(), &["validate", "junk.json"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error"));
}

#[test]
fn validate_rep_file() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &["build", "heisenberg:n=1,k=2", "--out", "p.json"],
    );
    let (code, _, _) = run(
        dir.path(),
        &["rep", "regular", "p.json", "--out", "r.json"],
    );
    assert_eq!(code, 0);
    let (code, stdout, _) = run(dir.path(), &["validate", "r.json"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("valid"));
}

#[test]
fn quotient_and_extend_verbs() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &["build", "heisenberg:n=1,k=2", "--out", "p.json"],
    );
    let (code, stdout, _) = run(
        dir.path(),
        &[
            "quotient",
            "p.json",
            "--out",
            "q.json",
            "--projection",
            "proj.json",
        ],
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("dim 32 -> 8"));
    assert!(dir.path().join("proj.json").exists());

    let (code, stdout, _) = run(
        dir.path(),
        &["extend", "p.json", "--bdim", "2", "--out", "e.json"],
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("dim 32 -> 34"));
    assert!(stdout.contains("boundary 24 -> 26"));
}

#[test]
fn iso_distinguishes_extension_from_base() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &["build", "heisenberg:n=1,k=2", "--out", "p.json"],
    );
    run(
        dir.path(),
        &["extend", "p.json", "--bdim", "1", "--out", "e.json"],
    );
    let (code, stdout, _) = run(dir.path(), &["iso", "p.json", "e.json"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("iso: no"));
    assert!(stdout.contains("dimension"));

    let (code, stdout, _) = run(
        dir.path(),
        &["iso", "p.json", "p.json", "--witness", "w.json"],
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("iso: equivalent"));
    let witness: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("w.json")).unwrap())
            .unwrap();
    assert_eq!(witness["certified"], true);
}

#[test]
fn rep_enumerate_counts() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &["build", "heisenberg:n=1,k=2", "--out", "p.json"],
    );
    let (code, stdout, _) = run(
        dir.path(),
        &[
            "rep",
            "enumerate",
            "p.json",
            "--maxdim",
            "2",
            "--emit-reps",
            "reps.json",
        ],
    );
    assert_eq!(code, 0, "{stdout}");
    let value: serde_json::Value = serde_json::from_str(
        stdout.lines().take_while(|l| !l.starts_with("wrote")).collect::<Vec<_>>().join("\n").as_str(),
    )
    .unwrap();
    assert_eq!(value["counts"], serde_json::json!([1, 22]));
    assert_eq!(value["total"], 23);
    assert!(dir.path().join("reps.json").exists());
}

#[test]
fn reconstruct_from_rep_file() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &["build", "heisenberg:n=1,k=2", "--out", "p.json"],
    );
    run(
        dir.path(),
        &["rep", "regular", "p.json", "--out", "r.json"],
    );
    let (code, stdout, _) = run(
        dir.path(),
        &[
            "reconstruct",
            "--reps",
            "r.json",
            "--out",
            "recon.json",
            "--report",
            "report.json",
        ],
    );
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("operator algebra dim 8"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["output_dim"], 8);
    assert_eq!(report["output_valid"], true);

    // the reconstructed phase is certified equivalent to the quotient
    run(dir.path(), &["quotient", "p.json", "--out", "q.json"]);
    let (code, stdout, _) = run(dir.path(), &["iso", "recon.json", "q.json"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("iso: equivalent"));
}

#[test]
fn demo_flagship_default_budget() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = run(
        dir.path(),
        &[
            "demo", "flagship", "--n", "1", "--bdim", "1", "--report", "demo.json",
        ],
    );
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("kernel[P] = 24"));
    assert!(stdout.contains("kernel[P_ext] = 25"));
    assert!(stdout.contains("quotient iso: equivalent"));
    assert!(stdout.contains("rep counts agree: true"));
    assert!(stdout.contains("restriction bijection verified: true"));
    assert!(stdout.contains("Weak(2)"));
    assert!(stdout.contains("Strong"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("demo.json")).unwrap())
            .unwrap();
    assert_eq!(report["boundary"]["kernel_gap"], 1);
    assert_eq!(report["boundary"]["gap_equals_bdim"], true);
    assert_eq!(report["quotient_iso"]["certified"], true);
    assert_eq!(report["testing_object"]["certified"], true);
    assert_eq!(report["warnings"], serde_json::json!([]));
}

#[test]
fn demo_flagship_kernel_gap_two() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = run(
        dir.path(),
        &["demo", "flagship", "--n", "1", "--bdim", "2"],
    );
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("kernel gap 2 (= b_dim: true)"));
}

#[test]
fn demo_flagship_zero_budget_propagates_unknown() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = run(
        dir.path(),
        &[
            "demo", "flagship", "--n", "1", "--bdim", "1", "--budget", "0", "--maxdim", "0",
        ],
    );
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("unknown"));
    assert!(stdout.contains("warning:"));
}

#[test]
fn testing_object_verb() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &["build", "heisenberg:n=1,k=2", "--out", "p.json"],
    );
    let (code, stdout, _) = run(
        dir.path(),
        &["testing-object", "p.json", "--out", "t.json"],
    );
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("mdim 8"));
    assert!(stdout.contains("certified true"));
    assert!(stdout.contains("fails separation: true"));
    // the emitted rep file validates
    let (code, stdout, _) = run(dir.path(), &["validate", "t.json"]);
    assert_eq!(code, 0, "{stdout}");
}
