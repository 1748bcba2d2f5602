use std::process::{Command, Output};

use serde_json::Value;

fn linkcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkcx")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn family_inputs_load_as_descriptions() {
    let out = linkcx(&["build", "--family", "tor:2,3", "--json"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["source"]["kind"], "description");
    assert_eq!(r["source"]["text"], "[aatBBBT]");
    assert_eq!((r["vertices"].as_u64(), r["edges"].as_u64()), (Some(2), Some(3)));

    let r = json(&linkcx(&["build", "--family", "tor:2,3", "--presentation", "--json"]));
    assert_eq!(r["source"]["kind"], "presentation");
    assert_eq!(r["vertices"], 1);
}

#[test]
fn input_sources_are_exclusive_and_required() {
    assert_eq!(linkcx(&["analyze"]).status.code(), Some(2));
    assert_eq!(linkcx(&["analyze", "--family", "art:3", "--desc", "x"]).status.code(), Some(2));
}

#[test]
fn parse_errors_report_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.desc");
    std::fs::write(&path, "# header\nabc, ab%\n").unwrap();
    let out = linkcx(&["analyze", "--desc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(&format!("{}:2:8:", path.display())), "{err}");
}

#[test]
fn wp_methods_agree() {
    let out = linkcx(&["wp", "--family", "tor:2,3", "--word", "aaBBB", "--method", "all"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["schemaVersion"], 1);
    assert!(r["elapsedMs"].is_u64());
    let verdicts = r["report"]["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 2);
    assert!(verdicts.iter().all(|v| v["isIdentity"] == true));
    assert_eq!(r["report"]["agree"], true);

    let r = json(&linkcx(&["wp", "--family", "art:3", "--word", "ab"]));
    assert_eq!(r["report"]["verdicts"][0]["isIdentity"], false);
}

#[test]
fn wp_rejects_foreign_letters() {
    let out = linkcx(&["wp", "--family", "tor:2,3", "--word", "ax"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_counterexample_count() {
    let out = linkcx(&["verify", "--property", "subword", "--family", "tor:2,3", "--max-len", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["command"], "verify");
    assert_eq!(r["counterexamples"], 0);
    assert!(r["report"]["identityWords"].as_u64().unwrap() > 0);

    let r = json(&linkcx(&["verify", "--property", "iso", "--family", "art:6"]));
    assert_eq!(r["report"]["spec"]["verified"], true);
}

#[test]
fn verify_property_needs_matching_family() {
    let out = linkcx(&["verify", "--property", "syllables", "--family", "tor:2,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dot_export_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("links.dot");
    let out = linkcx(&["export-dot", "--family", "art:3", "--what", "links", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("graph"));

    let out = linkcx(&["export-dot", "--family", "art:3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph skeleton"));
    assert_eq!(text.matches("->").count(), 3);
}

#[test]
fn links_and_split_human_output() {
    let out = linkcx(&["links", "--family", "bs:2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("link-connected: "));

    let out = linkcx(&["split", "--family", "art:4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("circles=0 pieces=1"), "{text}");
}
