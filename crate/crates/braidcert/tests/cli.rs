//! End-to-end tests of the command-line interface: output formats, exit
//! codes, and the certify → verify round trip.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn braidcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn nf_prints_normal_form_summary() {
    let out = braidcert(&["nf", "--n", "3", "1 2 1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("delta_power: 1"));
    assert!(text.contains("factors: 0"));
    assert!(text.contains("witness: 1 2 1"));

    let out = braidcert(&["nf", "--n", "3", ""]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("delta_power: 0"));

    let out = braidcert(&["nf", "--n", "3", "5"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn eq_reports_equality_and_exit_codes() {
    let out = braidcert(&["eq", "--n", "4", "1 3", "3 1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "equal");

    let out = braidcert(&["eq", "--n", "3", "1", "2"]);
    assert_eq!(code(&out), 3);
    assert_eq!(stdout(&out).trim(), "not-equal");

    let out = braidcert(&["eq", "--n", "3", "1 2 1", "2 1 2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn certify_one_conj_roundtrips_through_verify() {
    let out = braidcert(&["certify", "--mode", "one-conj", "--n", "3", "--j", "1"]);
    assert_eq!(code(&out), 0);
    let cert_json = stdout(&out);
    serde_json::from_str::<braidcert::Certificate>(&cert_json).unwrap();

    let cert = temp_file("one_conj_cert.json", &cert_json);
    let f1 = temp_file(
        "one_conj_f1.json",
        r#"{"n":3,"entries":[[1],[2],[1],[2],[1],[2]]}"#,
    );
    // The standard pattern over the frame conjugated by σ₁.
    let f2 = temp_file(
        "one_conj_f2.json",
        r#"{"n":3,"entries":[[1],[-1,2,1],[1],[-1,2,1],[1],[-1,2,1]]}"#,
    );
    let out = braidcert(&[
        "verify",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        f2.to_str().unwrap(),
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "ok");
}

#[test]
fn certify_output_is_stable_across_runs() {
    let run = || stdout(&braidcert(&["certify", "--mode", "conj", "--n", "4", "--conjugator", "-2"]));
    assert_eq!(run(), run());
}

#[test]
fn certify_main_mode_and_not_equivalent_exit() {
    let ff1 = temp_file(
        "main_ff1.json",
        r#"{"n":3,"conjugator":[],"indices":[1,2,1,2,1,2]}"#,
    );
    let ff2 = temp_file(
        "main_ff2.json",
        r#"{"n":3,"conjugator":[1,2],"indices":[1,2,1,2,1,2]}"#,
    );
    let out = braidcert(&[
        "certify",
        "--mode",
        "main",
        "--left",
        ff1.to_str().unwrap(),
        "--right",
        ff2.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let cert: braidcert::Certificate = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert.source_length, 6);

    // An index word that does not multiply to the full twist.
    let bad = temp_file(
        "main_bad.json",
        r#"{"n":3,"conjugator":[],"indices":[1,2,1,2,1,1]}"#,
    );
    let out = braidcert(&[
        "certify",
        "--mode",
        "same-frame",
        "--left",
        ff1.to_str().unwrap(),
        "--right",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_failure_modes() {
    let f1 = temp_file("verify_f1.json", r#"{"n":3,"entries":[[1],[2],[1]]}"#);
    let f2 = temp_file("verify_f2.json", r#"{"n":3,"entries":[[2],[1],[2]]}"#);
    // R₂ alone is not enough: the first entry is left wrong.
    let truncated = temp_file(
        "verify_truncated.json",
        r#"{"source_length":3,"moves":[{"k":2,"dir":"fwd"}]}"#,
    );
    let out = braidcert(&[
        "verify",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        f2.to_str().unwrap(),
        "--certificate",
        truncated.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("fail: first mismatch at entry 0"));

    let full = temp_file(
        "verify_full.json",
        r#"{"source_length":3,"moves":[{"k":2,"dir":"fwd"},{"k":1,"dir":"fwd"}]}"#,
    );
    let out = braidcert(&[
        "verify",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        f2.to_str().unwrap(),
        "--certificate",
        full.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    let short = temp_file("verify_short.json", r#"{"n":3,"entries":[[1],[2]]}"#);
    let out = braidcert(&[
        "verify",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        short.to_str().unwrap(),
        "--certificate",
        full.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn orbit_search_cli() {
    let f1 = temp_file("orbit_f1.json", r#"{"n":3,"entries":[[1],[2],[1]]}"#);
    let f2 = temp_file("orbit_f2.json", r#"{"n":3,"entries":[[2],[1],[2]]}"#);
    let out = braidcert(&[
        "orbit",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        f2.to_str().unwrap(),
        "--max-depth",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    let cert: braidcert::Certificate = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert.moves.len(), 2);

    // Identical inputs: empty certificate.
    let out = braidcert(&[
        "orbit",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        f1.to_str().unwrap(),
        "--max-depth",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    let cert: braidcert::Certificate = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(cert.moves.is_empty());

    // A one-state budget is exhausted immediately.
    let out = braidcert(&[
        "orbit",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        f2.to_str().unwrap(),
        "--max-states",
        "1",
    ]);
    assert_eq!(code(&out), 4);

    // Zero depth on distinct tuples: not found.
    let out = braidcert(&[
        "orbit",
        "--left",
        f1.to_str().unwrap(),
        "--right",
        f2.to_str().unwrap(),
        "--max-depth",
        "0",
    ]);
    assert_eq!(code(&out), 4);
    assert_eq!(stdout(&out).trim(), "not-found");
}
