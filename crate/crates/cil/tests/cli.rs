//! End-to-end tests of the `cil` binary: output strings, exit codes,
//! determinism, JSON schemas, file specs, and the guard override.

use std::process::{Command, Output};

fn cil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn ideal_text_output_and_exit_codes() {
    let out = cil(&["ideal", "--graph", "path:4", "--t", "2", "--kind", "independence"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(x1*x2, x1*x4, x3*x4)\n");

    let out = cil(&["ideal", "--graph", "complement:path:4", "--t", "3", "--kind", "clique"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(0)\n");

    let out = cil(&["ideal", "--graph", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());

    let out = cil(&["ideal", "--graph", "path:4", "--t", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn betti_guard_exit_code() {
    let out = cil(&["betti", "--graph", "path:20", "--t", "2", "--kind", "clique"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn guard_override_through_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_cil"))
        .args(["betti", "--graph", "path:13", "--t", "2", "--kind", "independence"])
        .env("CIL_MAX_N", "14")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("pd(R/I) = 2"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["betti", "--graph", "cycle:6", "--t", "2", "--kind", "independence", "--method", "all"],
        vec!["check", "--suite", "chordal", "--n-max", "6", "--count", "8", "--seed", "3"],
        vec!["reproduce", "--n-max", "6", "--t-max", "2"],
    ] {
        let a = cil(&args);
        let b = cil(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn file_graph_spec_round_trip() {
    let dir = std::env::temp_dir().join(format!("cil-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    std::fs::write(&path, r#"{"n":4,"edges":[[1,2],[2,3],[3,4],[1,4]]}"#).unwrap();
    let spec = format!("file:{}", path.display());

    let from_file = cil(&["ideal", "--graph", &spec, "--t", "2", "--kind", "independence"]);
    let direct = cil(&["ideal", "--graph", "cycle:4", "--t", "2", "--kind", "independence"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, direct.stdout);

    let nested = cil(&["ideal", "--graph", &format!("complement:{spec}"), "--t", "2"]);
    assert_eq!(nested.status.code(), Some(0));
    assert_eq!(stdout(&nested), "(x1*x3, x2*x4)\n");

    let missing = cil(&["ideal", "--graph", "file:/nonexistent/g.json"]);
    assert_eq!(missing.status.code(), Some(2));

    std::fs::write(&path, r#"{"n":4,"edges":[[1,1]]}"#).unwrap();
    let loops = cil(&["ideal", "--graph", &spec]);
    assert_eq!(loops.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_outputs_round_trip_schemas() {
    let out = cil(&["ideal", "--graph", "cycle:4", "--t", "2", "--kind", "independence", "--output", "json"]);
    assert_eq!(stdout(&out).trim(), r#"{"n":4,"gens":[[1,2],[2,3],[1,4],[3,4]]}"#);

    let out = cil(&["complex", "--graph", "complement:cycle:4", "--t", "2", "--output", "json"]);
    assert_eq!(stdout(&out).trim(), r#"{"n":4,"facets":[[1,2],[2,3],[1,4],[3,4]]}"#);

    let out = cil(&["betti", "--graph", "cycle:4", "--t", "2", "--kind", "independence", "--output", "json"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"subject":"ideal","entries":[{"i":0,"j":2,"b":4},{"i":1,"j":3,"b":4},{"i":2,"j":4,"b":1}]}"#
    );

    let out = cil(&["cm", "--graph", "complement:cycle:4", "--t", "2", "--output", "json", "--field", "0"]);
    assert_eq!(stdout(&out).trim(), r#"{"cohen_macaulay":true,"field":"QQ"}"#);
}

#[test]
fn check_suites_pass_and_report() {
    let out = cil(&["check", "--suite", "path", "--n-max", "7", "--t-max", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("suite: path"));
    assert!(text.contains("recursion_matches_oracle"));
    assert!(text.contains("RESULT: PASS"));

    let out = cil(&["check", "--suite", "cycle", "--n-max", "7", "--t-max", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = cil(&["check", "--suite", "duality", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = cil(&["check", "--suite", "chordal", "--n-max", "7", "--count", "10", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = cil(&["check", "--suite", "path", "--n-max", "40"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reproduce_emits_the_expected_rows() {
    let out = cil(&["reproduce", "--n-max", "8", "--t-max", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("path n=7 t=2: pd(K)=4 predicted / 4 oracle"));
    assert!(text.contains("cycle n=8 t=2: pd(R/J)=3 predicted / 3 oracle"));
    assert!(text.contains("REPRODUCE: OK"));
    assert!(!text.contains("MISMATCH"));

    let out = cil(&["reproduce", "--n-max", "6", "--t-max", "3", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(rows.as_array().unwrap().iter().all(|r| r["ok"].as_bool().unwrap()));
}

#[test]
fn help_exits_zero() {
    let out = cil(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = cil(&["betti", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = cil(&[]);
    assert_eq!(out.status.code(), Some(2));
}
