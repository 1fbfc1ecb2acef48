//! End-to-end tests of the `verify` binary: exit-code contract, report
//! formats, config loading, and the matrix dump.

use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn all_checks_pass_with_exit_zero() {
    let out = verify(&[]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS deg1.ch_Vab [chv]"));
    assert!(text.contains("0 failed"));
}

#[test]
fn pattern_selection_and_usage_errors() {
    let out = verify(&["deg1.*"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text
        .lines()
        .filter(|l| l.starts_with("PASS"))
        .all(|l| l.contains("deg1.")));

    // unknown selection is a usage error with its own exit code
    let out = verify(&["zz.*"]);
    assert_eq!(out.status.code(), Some(2));

    let out = verify(&["--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));

    let out = verify(&["a", "b"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_is_deterministic_up_to_runtime() {
    let a = stdout(&verify(&["kummer.*", "--format", "json"]));
    let b = stdout(&verify(&["kummer.*", "--format", "json"]));
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.contains("runtime_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
    let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(parsed["summary"]["failed"], 0);
    assert!(parsed["records"][0]["id"].is_string());
    assert!(parsed["records"][0]["citation"].is_string());
    assert!(parsed["records"][0]["expected"].is_string());
    assert!(parsed["records"][0]["pass"].is_boolean());
}

#[test]
fn config_round_trip_and_perturbation() {
    let dir = std::env::temp_dir().join("prymcalc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    // the builtin geometry dumped to a file reproduces a passing run
    let good = dir.join("builtin.cfg");
    std::fs::write(&good, prymcalc::config::dump_builtin()).unwrap();
    let out = verify(&["--config", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // perturbing one intersection number makes dependent checks fail
    let perturbed = dir.join("perturbed.cfg");
    let text = prymcalc::config::dump_builtin().replace("pair F^3 = 32", "pair F^3 = 33");
    std::fs::write(&perturbed, text).unwrap();
    let out = verify(&["deg1.ch_Vab", "--config", perturbed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains("FAIL deg1.ch_Vab"), "{report}");

    // malformed config is a configuration error
    let broken = dir.join("broken.cfg");
    std::fs::write(&broken, "pair H^3 = 4\n").unwrap();
    let out = verify(&["--config", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn dump_matrices_matches_golden_file() {
    let out = verify(&["local.higgs_closure", "--dump-matrices"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let start = text.find("[u_f]").expect("dump present");
    let dumped = &text[start..];
    let golden = include_str!("golden/framed_matrices.txt");
    assert_eq!(dumped, golden, "matrix dump drifted from golden file");
}
