//! End-to-end tests of the `hopfkit` binary: exit codes, report streams,
//! determinism of written files, and the examples round trip.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn emit(name: &str, path: &Path) {
    let out = hopfkit(&["examples", "emit", name, "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "emit {name}: {}", stderr_str(&out));
}

#[test]
fn examples_list_prints_the_catalog_on_stdout() {
    let out = hopfkit(&["examples", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() >= 8, "only {} catalog lines", lines.len());
    assert!(lines.iter().any(|l| l.starts_with("sweedler")));

    let json = hopfkit(&["examples", "list", "--format", "json"]);
    assert_eq!(json.status.code(), Some(0));
    let rows: Value = serde_json::from_str(&stdout_str(&json)).expect("valid JSON");
    assert_eq!(rows.as_array().unwrap().len(), lines.len());
}

#[test]
fn every_emitted_example_verifies_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let list = hopfkit(&["examples", "list"]);
    for line in stdout_str(&list).lines() {
        let name = line.split_whitespace().next().unwrap();
        let path = dir.path().join(format!("{name}.json"));
        emit(name, &path);
        let out = hopfkit(&["verify", path.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "verify {name}: stderr {}",
            stderr_str(&out)
        );
        let report: Value = serde_json::from_str(&stdout_str(&out)).expect("report is JSON");
        assert_eq!(report["overall"], Value::Bool(true), "{name}");
        assert!(report["timing_ms"].is_null(), "{name}: report must not embed timings");
    }
}

#[test]
fn emitting_to_stdout_matches_the_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    emit("group-z2", &path);
    let out = hopfkit(&["examples", "emit", "group-z2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out), std::fs::read_to_string(&path).unwrap());
}

#[test]
fn unknown_example_names_exit_one() {
    let out = hopfkit(&["examples", "emit", "no-such-example"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("no-such-example"));
}

#[test]
fn corrupted_files_fail_verification_with_exit_two_and_a_failing_id() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    emit("group-z2", &path);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // Break the counit: ε(g) = 2 instead of 1.
    doc["tensors"]["counit"][1] = Value::String("2".into());
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = hopfkit(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr_str(&out));
    let report: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report["overall"], Value::Bool(false));
    let failing: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == Value::Bool(false))
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(!failing.is_empty());
    assert!(stderr_str(&out).contains(failing[0]), "summary names the failing identity");
}

#[test]
fn malformed_json_exits_one_with_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"format_version\": 1,").unwrap();
    let out = hopfkit(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("line"), "stderr: {}", stderr_str(&out));
}

#[test]
fn kind_mismatch_and_missing_files_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    emit("group-z2", &path);
    let out = hopfkit(&["verify", path.to_str().unwrap(), "--kind", "weak-hopf"]);
    assert_eq!(out.status.code(), Some(1));
    let out = hopfkit(&["verify", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = hopfkit(&["verify"]);
    assert_eq!(out.status.code(), Some(1), "usage errors exit 1");
}

#[test]
fn text_format_prints_one_line_per_identity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    emit("group-z2", &path);
    let out = hopfkit(&["verify", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let passes = text.lines().filter(|l| l.starts_with("pass  ")).count();
    assert_eq!(passes, 11, "quasi-hopf verification has 11 identities:\n{text}");
    assert!(text.lines().last().unwrap().contains("all identities hold"));
}

#[test]
fn the_dimension_cap_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    emit("sweedler", &path);
    let out = Command::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(["verify", path.to_str().unwrap()])
        .env("HOPFKIT_MAX_DIM", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_str(&out);
    assert!(err.contains('2') && err.contains('4'), "stderr: {err}");
}

#[test]
fn structure_theorem_outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("H.json");
    let b = dir.path().join("B.json");
    emit("group-z2", &h);
    emit("smash-line-kz2", &b);
    let mut outputs = Vec::new();
    for run in ["run1", "run2"] {
        let out_dir = dir.path().join(run);
        let out = hopfkit(&[
            "structure-theorem",
            h.to_str().unwrap(),
            b.to_str().unwrap(),
            "--variant",
            "quasi",
            "--out",
            out_dir.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
        let mut bundle = Vec::new();
        for name in ["A.json", "iso.json", "report.json"] {
            bundle.push(std::fs::read(out_dir.join(name)).unwrap());
        }
        outputs.push((bundle, stdout_str(&out)));
    }
    assert_eq!(outputs[0], outputs[1], "outputs differ between identical runs");

    // The recovered coinvariant algebra is itself a verifiable file.
    let a = dir.path().join("run1/A.json");
    let out = hopfkit(&["verify", a.to_str().unwrap(), "--kind", "yd-module"]);
    assert_eq!(out.status.code(), Some(0));

    // The isomorphism bundle records exact inverse data.
    let iso: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("run1/iso.json")).unwrap())
            .unwrap();
    assert_eq!(iso["variant"], "quasi");
    assert_eq!(iso["dim_b"], 4);
    assert_eq!(iso["dim_smash"], 4);
    assert_eq!(iso["coinvariant_rank"], 2);
}

#[test]
fn structure_theorem_runs_for_all_three_variants() {
    let dir = tempfile::tempdir().unwrap();
    for (variant, h_name, b_name, rank) in [
        ("quasi", "quasi-kz2-twisted", "smash-diag-twisted", 2),
        ("weak", "groupoid-pair-2", "self-groupoid-pair-2", 2),
        ("braided", "super-line", "smash-super-line", 2),
    ] {
        let h = dir.path().join(format!("{variant}-H.json"));
        let b = dir.path().join(format!("{variant}-B.json"));
        emit(h_name, &h);
        emit(b_name, &b);
        let out_dir = dir.path().join(variant);
        let out = hopfkit(&[
            "structure-theorem",
            h.to_str().unwrap(),
            b.to_str().unwrap(),
            "--variant",
            variant,
            "--out",
            out_dir.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{variant}: {}", stderr_str(&out));
        let iso: Value =
            serde_json::from_str(&std::fs::read_to_string(out_dir.join("iso.json")).unwrap())
                .unwrap();
        assert_eq!(iso["coinvariant_rank"], rank, "{variant}");
        let verify_a =
            hopfkit(&["verify", out_dir.join("A.json").to_str().unwrap()]);
        assert_eq!(verify_a.status.code(), Some(0), "{variant} A.json verifies");
    }
}

#[test]
fn structure_theorem_requires_an_embedded_v() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("H.json");
    let b = dir.path().join("B.json");
    emit("group-z2", &h);
    emit("smash-line-kz2", &b);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    doc["tensors"].as_object_mut().unwrap().remove("v");
    std::fs::write(&b, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = hopfkit(&[
        "structure-theorem",
        h.to_str().unwrap(),
        b.to_str().unwrap(),
        "--variant",
        "quasi",
        "--out",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains('v'), "stderr: {}", stderr_str(&out));
}

#[test]
fn structure_theorem_rejects_a_base_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("H.json");
    let b = dir.path().join("B.json");
    emit("sweedler", &h);
    emit("smash-line-kz2", &b);
    let out = hopfkit(&[
        "structure-theorem",
        h.to_str().unwrap(),
        b.to_str().unwrap(),
        "--variant",
        "quasi",
        "--out",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("base"), "stderr: {}", stderr_str(&out));
}

#[test]
fn a_failing_certification_still_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("H.json");
    let b = dir.path().join("B.json");
    emit("group-z2", &h);
    emit("smash-line-kz2", &b);
    // Corrupt the right coaction so the bicomodule precondition fails.
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    doc["tensors"]["rho"][0][0][1] = Value::String("1".into());
    std::fs::write(&b, serde_json::to_string(&doc).unwrap()).unwrap();
    let out_dir = dir.path().join("out");
    let out = hopfkit(&[
        "structure-theorem",
        h.to_str().unwrap(),
        b.to_str().unwrap(),
        "--variant",
        "quasi",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr_str(&out));
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["overall"], Value::Bool(false));
    assert!(!out_dir.join("A.json").exists(), "no A.json on failure");
    assert!(!out_dir.join("iso.json").exists(), "no iso.json on failure");
}

#[test]
fn prime_field_emission_verifies_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g5.json");
    let out = hopfkit(&[
        "examples",
        "emit",
        "groupoid-pair-2",
        "--field",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["field"]["kind"], "prime");
    assert_eq!(doc["field"]["p"], 5);
    let out = hopfkit(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let bad = hopfkit(&["examples", "emit", "group-z2", "--field", "6"]);
    assert_eq!(bad.status.code(), Some(1), "6 is not prime");
}
