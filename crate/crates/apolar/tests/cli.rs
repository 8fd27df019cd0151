//! CLI surface tests: exit codes, JSON determinism, seed handling.

use std::process::{Command, Output};

fn apolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolar"))
        .args(args)
        .env_remove("APOLAR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn hilbert_example_2_4_json() {
    let out = apolar(&[
        "hilbert",
        "--xvars",
        "2",
        "--uvars",
        "2",
        "x0^2*u1^3 + x1^2*u2^3",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["h"], serde_json::json!([1, 4, 6, 6, 4, 1]));
    assert_eq!(v["socle_degree"], 5);
}

#[test]
fn slp_trivial_holds() {
    let out = apolar(&["slp", "--xvars", "1", "--uvars", "0", "x0^3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Holds"));
}

#[test]
fn parse_error_exits_2() {
    let out = apolar(&["hilbert", "--xvars", "2", "--uvars", "2", "x0 + y0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse"));
}

#[test]
fn contract_error_exits_1() {
    // zero polynomial is a domain violation, not a parse failure
    let out = apolar(&["hilbert", "--xvars", "2", "--uvars", "0", "x0 - x0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "wlp", "--xvars", "2", "--uvars", "2", "x0^2*u1^2 + x1^2*u2^2", "--seed", "3", "--json",
    ];
    let a = apolar(&args);
    let b = apolar(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_seed_fallback_matches_flag() {
    let base = [
        "geometry", "--xvars", "2", "--uvars", "2", "--order", "2", "u1^2; u2^2", "--trials", "5",
        "--json",
    ];
    let with_flag = apolar(&[&base[..], &["--seed", "11"]].concat());
    let with_env = Command::new(env!("CARGO_BIN_EXE_apolar"))
        .args(base)
        .env("APOLAR_SEED", "11")
        .output()
        .unwrap();
    assert!(with_flag.status.success());
    assert_eq!(with_flag.stdout, with_env.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&with_flag)).unwrap();
    assert_eq!(v["seed"], 11);
}

#[test]
fn simplicial_verify_complex_file() {
    let dir = std::env::temp_dir().join("apolar_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triangle.json");
    std::fs::write(&path, r#"{"vertices": 3, "facets": [[1,2],[2,3],[1,3]]}"#).unwrap();
    let out = apolar(&[
        "simplicial-verify",
        path.to_str().unwrap(),
        "--order",
        "1",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn non_pure_complex_exits_1() {
    let out = apolar(&[
        "simplicial-predict",
        r#"{"vertices": 5, "facets": [[1,2,3],[4,5]]}"#,
        "--order",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ann_lists_generators() {
    let out = apolar(&["ann", "--xvars", "1", "--uvars", "2", "x0*u1*u2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("U1^2"));
    assert!(text.contains("U2^2"));
    assert!(text.contains("X0^2"));
}
