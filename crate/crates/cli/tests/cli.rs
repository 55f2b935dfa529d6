use std::path::PathBuf;
use std::process::{Command, Output};

fn wreath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wreath-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}

#[test]
fn classify_cyclic_four() {
    let out = wreath(&["classify", "C4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().next(),
        Some("gr:false dgr:true bgr:false dgr_plus:false")
    );
}

#[test]
fn classify_json_has_memberships() {
    let out = wreath(&["--json", "classify", "S3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["group"], "S3");
    assert_eq!(v["in_gr"], true);
    assert_eq!(v["in_dgr"], true);
}

#[test]
fn closure_of_c3_is_s3() {
    let out = wreath(&["closure", "--kind", "gr", "C3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 6"), "{text}");
    assert!(text.contains("member: false"), "{text}");

    let out = wreath(&["closure", "--kind", "dgr", "C3"]);
    assert!(stdout(&out).contains("member: true"));
}

#[test]
fn product_action_summary() {
    let out = wreath(&["--json", "group", "wrp(S2,C3)"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["degree"], 8);
    assert_eq!(v["order"], "24");
    assert_eq!(v["transitive"], true);
    assert_eq!(v["primitive"], false);
}

#[test]
fn explicit_generators() {
    let out = wreath(&["group", "perm(4; (0 1 2 3), (0 2))"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("order: 8"));
}

#[test]
fn wreath_command_builds_both_actions() {
    let out = wreath(&["--json", "wreath", "S2", "C3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["degree"], 6);
    let out = wreath(&["--json", "wreath", "S2", "C3", "--action", "product"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["degree"], 8);
}

#[test]
fn parse_errors_exit_three() {
    for args in [
        &["group", "C("][..],
        &["group", "Q7"],
        &["bogus"],
        &["classify", "C4", "--no-such-flag"],
        &["closure", "--kind", "xyz", "C3"],
    ] {
        let out = wreath(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let out = wreath(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verify"));
}

#[test]
fn caps_are_enforced() {
    let out = wreath(&["--point-cap", "10", "group", "wrp(S3,S3)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = wreath(&["--hypergraph-cap", "4", "closure", "--kind", "bgr", "C5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_reports_only_the_factorization_disagreement() {
    let out = wreath(&["--json", "verify", "--suite", "paper"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["passed"], false);
    let outcomes = v["outcomes"].as_array().expect("outcomes");
    assert!(!outcomes.is_empty());
    for o in outcomes {
        if o["agree"] == false {
            assert_eq!(o["claim"], "orbital-graph-factorization", "{o}");
        }
    }
}

#[test]
fn unknown_suite_is_rejected() {
    let out = wreath(&["verify", "--suite", "other"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let first = wreath(&["verify"]);
    let second = wreath(&["verify"]);
    assert_eq!(first.stdout, second.stdout);
    let first = wreath(&["--json", "classify", "wr(C3,S2)"]);
    let second = wreath(&["--json", "classify", "wr(C3,S2)"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn export_round_trips() {
    for (object, spec) in [
        ("group", "wr(C2,C3)"),
        ("orbital-graph", "C5"),
        ("orbital-digraph", "C5"),
        ("orbit-hypergraph", "C4"),
    ] {
        let path = scratch(&format!("{object}.json"));
        let out = wreath(&[
            "export",
            spec,
            "--object",
            object,
            "-o",
            path.to_str().expect("path"),
        ]);
        assert!(out.status.success(), "{object}");
        let written = std::fs::read_to_string(&path).expect("written");
        let again = wreath(&["export", "--input", path.to_str().expect("path")]);
        assert!(again.status.success(), "{object}");
        assert_eq!(stdout(&again), written, "{object}");
    }
}

#[test]
fn file_specs_and_automorphisms() {
    let group = scratch("s2wrc3.json");
    let out = wreath(&["export", "wr(S2,C3)"]);
    std::fs::write(&group, &out.stdout).expect("write");
    let at = format!("@{}", group.display());
    let out = wreath(&["--json", "group", &at]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["order"], "24");

    let dsl = scratch("spec.txt");
    std::fs::write(&dsl, "D4\n").expect("write");
    let out = wreath(&["--json", "group", &format!("@{}", dsl.display())]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["order"], "8");

    let graph = scratch("c5.json");
    let out = wreath(&["export", "C5", "--object", "orbital-graph"]);
    std::fs::write(&graph, &out.stdout).expect("write");
    let out = wreath(&["--json", "aut", graph.to_str().expect("path")]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["order"], "10");
}

#[test]
fn composition_sizes() {
    let out = wreath(&["compose", "C3", "S2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["n"], 6);
    let out = wreath(&["compose", "--directed", "--free", "C3", "C2"]);
    assert!(out.status.success());
    let out = wreath(&["compose", "C3", "S2", "--format", "dot"]);
    assert!(stdout(&out).starts_with("graph") || stdout(&out).contains("--"));
}

#[test]
fn scan_lists_dgr_not_bgr() {
    let out = wreath(&["scan", "--max-degree", "5", "--class", "dgr-not-bgr"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for g in ["C3", "C4", "C5"] {
        assert!(text.lines().any(|l| l.starts_with(&format!("{g} "))), "{g}");
    }
    assert!(!text.lines().any(|l| l.starts_with("S3 ")));
}
