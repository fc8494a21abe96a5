//! End-to-end tests through the compiled binary: fixture classification,
//! JSON round-trips, exit-code contract, and route agreement across
//! subcommands.

use std::path::PathBuf;
use std::process::{Command, Output};

use edgecm::classifier::{recheck, Classification};
use edgecm_cli::document::parse_document;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn edgecm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgecm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = edgecm(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn classify_fixtures_and_verdicts() {
    let cases = [
        ("c5_weight1.wog", "verdict: Cohen-Macaulay"),
        ("c5_weight2.wog", "verdict: not Cohen-Macaulay"),
        ("c5_reducible_first_kind.wog", "verdict: Cohen-Macaulay"),
        ("c5_reducible_weight_one.wog", "verdict: Cohen-Macaulay"),
        ("example_two_cycles.wog", "verdict: Cohen-Macaulay"),
        ("square.wog", "verdict: out of scope"),
    ];
    for (file, expect) in cases {
        let out = stdout_of(&["classify", "--input", fixture(file).to_str().unwrap()]);
        assert!(out.contains(expect), "{file}: {out}");
        if !out.contains("out of scope") {
            assert!(out.contains("routes agree"), "{file}: {out}");
        }
    }
}

#[test]
fn classify_json_certificate_rechecks() {
    for file in ["c5_weight2.wog", "c5_weight1.wog", "whisker_not_cm.wog", "example_two_cycles.wog"] {
        let out = stdout_of(&["classify", "--json", "--input", fixture(file).to_str().unwrap()]);
        let payload: serde_json::Value = serde_json::from_str(&out).expect("valid json");
        let classification: Classification =
            serde_json::from_value(payload["classification"].clone()).expect("decodes");
        let document = payload["document"].as_str().expect("document echoed");
        let d = parse_document(document).expect("document parses");
        assert!(
            recheck(&d, &classification.certificate),
            "{file}: certificate failed to re-verify"
        );
    }
}

#[test]
fn unmixed_fixtures() {
    let out = stdout_of(&["unmixed", "--input", fixture("c5_weight1.wog").to_str().unwrap()]);
    assert_eq!(out.trim(), "unmixed");
    let out = stdout_of(&["unmixed", "--input", fixture("c5_weight2.wog").to_str().unwrap()]);
    assert!(out.starts_with("mixed: strong cover"), "{out}");
    let out = stdout_of(&["unmixed", "--input", fixture("path3_mixed.wog").to_str().unwrap()]);
    assert!(out.starts_with("mixed"), "{out}");
    let out = stdout_of(&["unmixed", "--input", fixture("path3_unmixed.wog").to_str().unwrap()]);
    assert_eq!(out.trim(), "unmixed");
}

#[test]
fn oracle_fields_agree() {
    for file in ["c5_weight2.wog", "whisker_cm.wog"] {
        let path = fixture(file);
        let q = stdout_of(&["oracle", "--input", path.to_str().unwrap(), "--field", "q"]);
        let p2 = stdout_of(&["oracle", "--input", path.to_str().unwrap(), "--field", "p:2"]);
        let p3 = stdout_of(&["oracle", "--input", path.to_str().unwrap(), "--field", "p:32003"]);
        let verdict = |s: &str| s.starts_with("Cohen-Macaulay");
        assert_eq!(verdict(&q), verdict(&p2), "{file}");
        assert_eq!(verdict(&q), verdict(&p3), "{file}");
    }
}

#[test]
fn oracle_agrees_with_classifier_on_fixtures() {
    for (file, cm) in [
        ("c5_weight1.wog", true),
        ("c5_weight2.wog", false),
        ("c5_reducible_first_kind.wog", true),
        ("c5_reducible_weight_one.wog", true),
        ("whisker_cm.wog", true),
        ("whisker_not_cm.wog", false),
        ("example_two_cycles.wog", true),
    ] {
        let out = stdout_of(&["oracle", "--input", fixture(file).to_str().unwrap()]);
        assert_eq!(out.starts_with("Cohen-Macaulay"), cm, "{file}: {out}");
    }
}

#[test]
fn decompose_path_fixture() {
    let out = stdout_of(&["decompose", "--input", fixture("path3_mixed.wog").to_str().unwrap()]);
    assert!(out.contains("edge ideal: (x*y, y*z^2, z*v)"), "{out}");
    assert!(out.contains("height: 2"), "{out}");
    assert!(out.contains("unmixed: false"), "{out}");
    let json = stdout_of(&[
        "decompose",
        "--json",
        "--input",
        fixture("path3_mixed.wog").to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["height"], 2);
    assert_eq!(v["unmixed"], false);
}

#[test]
fn sweep_small_family_has_no_discrepancies() {
    let out = stdout_of(&["sweep", "--max-n", "4", "--weights", "1,2"]);
    assert!(out.contains("# discrepancies 0"), "{out}");
}

#[test]
fn conjecture_run_emits_report() {
    let out = stdout_of(&["conjecture", "--lengths", "4", "--weights", "1"]);
    assert!(out.contains("# findings 0"), "{out}");
    assert!(out.contains("# control-instances 0"), "{out}");
}

#[test]
fn example_fixture_file_matches_packaged_fixture() {
    let text = std::fs::read_to_string(fixture("example_two_cycles.wog")).unwrap();
    let from_file = parse_document(&text).unwrap();
    let mut weights = [1u64; 14];
    weights[0] = 2; // x
    weights[11] = 2; // z1
    assert_eq!(from_file, edgecm::fixtures::example_oriented(weights));
}

#[test]
fn dot_export() {
    let out = stdout_of(&["dot", "--input", fixture("c5_weight1.wog").to_str().unwrap()]);
    assert!(out.starts_with("graph {"));
    assert!(out.contains("\"x\" -- \"y\";"));
}

#[test]
fn exit_codes() {
    // Usage errors exit 1.
    let out = edgecm(&["classify", "--input", "/nonexistent.wog"]);
    assert_eq!(out.status.code(), Some(1));
    let out = edgecm(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = edgecm(&["oracle", "--input", fixture("c5_weight1.wog").to_str().unwrap(), "--field", "p:6"]);
    assert_eq!(out.status.code(), Some(1));
    // Bound violations exit 2.
    let out = edgecm(&["sweep", "--max-n", "30"]);
    assert_eq!(out.status.code(), Some(2));
    // Verdicts are payload: a not-CM classification still exits 0.
    let out = edgecm(&["classify", "--input", fixture("c5_weight2.wog").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}
