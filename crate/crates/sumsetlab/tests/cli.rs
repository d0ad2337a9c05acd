//! End-to-end tests of the command-line interface: output shapes, exit-code
//! discipline, and byte-stable golden outputs.

use std::process::{Command, Output};

const FAMILY: &str = "{0} U [1/10,9/10] U {1}";

fn sumsetlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumsetlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sum_text_output() {
    let out = sumsetlab(&["sum", "[0,1]", "[0,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "[0,2]");

    let out = sumsetlab(&["sum", FAMILY, FAMILY]);
    assert_eq!(stdout_of(&out).trim(), "{0} U [1/10,19/10] U {2}");
}

#[test]
fn sum_json_output() {
    let out = sumsetlab(&["sum", "[0,1]", "[0,1]", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["measure"], "2");
}

#[test]
fn malformed_input_is_an_input_error() {
    let out = sumsetlab(&["sum", "[1,0]", "[0,1]"]);
    assert_eq!(out.status.code(), Some(3));
    let out = sumsetlab(&["sum", "[0,", "[0,1]"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analyze_reports_binding_bound() {
    let out = sumsetlab(&["analyze", FAMILY, FAMILY]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["binding"], "ruzsa_min");
    assert_eq!(v["slack"], "0");
    assert_eq!(v["zones"]["m"], 0);
}

#[test]
fn analyze_is_byte_stable() {
    let first = stdout_of(&sumsetlab(&["analyze", FAMILY, FAMILY]));
    let second = stdout_of(&sumsetlab(&["analyze", FAMILY, FAMILY]));
    assert_eq!(first, second);
    assert_eq!(first, include_str!("golden/analyze_family.json"));
}

#[test]
fn verify_exit_codes() {
    // verified
    let out = sumsetlab(&["verify", FAMILY, FAMILY, "--theorem", "3k4"]);
    assert_eq!(out.status.code(), Some(0));
    // precondition not met: [0,2] with a sparse B fails both hypotheses
    let out = sumsetlab(&[
        "verify",
        "[0,2]",
        "[0,1/5] U [9/10,1]",
        "--theorem",
        "3k4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // input error
    let out = sumsetlab(&["verify", "oops", "[0,1]", "--theorem", "3k4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_extremal_small_round_trip() {
    let out = sumsetlab(&[
        "verify",
        "[0,11/20] U [9/10,27/20] U [9/5,43/20]",
        "[0,1/5] U [9/10,1]",
        "--theorem",
        "extremal-small",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["detail"]["k"], 3);
    assert_eq!(v["detail"]["delta"], "1/2");

    let out = sumsetlab(&["verify", "[0,1]", "[0,1]", "--theorem", "extremal-small"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_lemma_mes_scan() {
    let out = sumsetlab(&["verify", FAMILY, FAMILY, "--theorem", "lemma-mes"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(v["detail"]["gap_points_checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let repro = dir.path().join("repro.json");
    let args = [
        "verify",
        "--theorem",
        "relaxed",
        "--sweep",
        "25",
        "--seed",
        "7",
        "--out",
        repro.to_str().unwrap(),
    ];
    let first = sumsetlab(&args);
    let second = sumsetlab(&args);
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&first)).unwrap();
    assert_eq!(
        v["verified"].as_u64().unwrap() + v["precondition_not_met"].as_u64().unwrap(),
        25
    );
    assert_eq!(first.status.code(), Some(0));
    assert!(!repro.exists());
}

#[test]
fn generate_families() {
    let out = sumsetlab(&[
        "generate",
        "--family",
        "freiman-large",
        "--params",
        r#"{"n":2,"m":2,"a1":"1/5","a2":"1/5"}"#,
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("{0} U [1/10,9/10] U {1}"));

    let out = sumsetlab(&[
        "generate",
        "--family",
        "small-extremal",
        "--params",
        r#"{"k":3,"delta":"1/2","b1":"1/5","b2":"1/10","d_b":1}"#,
    ]);
    assert!(stdout_of(&out).contains("12/5"));

    // constraint violation propagates as a nonzero exit
    let out = sumsetlab(&[
        "generate",
        "--family",
        "asymmetric",
        "--params",
        r#"{"a":"1/5","b":"1/8","eps":"1/100","n":2}"#,
    ]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn generate_random_respects_denominator_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_sumsetlab"))
        .args([
            "generate",
            "--family",
            "random",
            "--params",
            r#"{"seed":5,"count":4}"#,
        ])
        .env("SUMSETLAB_DENOM_LIMIT", "7")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    let set_line = text.lines().next().unwrap().trim_start_matches("A = ");
    let s = sumsetlab::format::parse_set(set_line).unwrap();
    for part in s.parts() {
        for v in [part.lo(), part.hi()] {
            assert!(v.denom() <= &num_bigint::BigInt::from(7u32), "{v}");
        }
    }
}

#[test]
fn plot_writes_golden_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let out = sumsetlab(&["plot", FAMILY, FAMILY, "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg, include_str!("golden/freiman_family.svg"));
}
