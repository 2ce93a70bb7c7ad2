//! The `serp` binary: exit codes, output formats and the golden corpus.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn serp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_serp")).args(args).output().expect("serp runs")
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus/v1")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn fusion_check_n6() {
    let out = serp(&["fusion-check", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["subcommand"], "fusion-check");
    assert_eq!(report["elapsed_ms"], 0);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for k in 0..=3 {
        assert!(names.contains(&format!("N=6 k={k} fusion = maj character").as_str()));
    }
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn table_check_orthogonality_line() {
    let out = serp(&["table-check"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let line = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "<p(1,1,1) - p(3), p(1,1,1) + 8 p(3)> = 0")
        .expect("orthogonality line present");
    assert_eq!(line["lhs"], "0");
}

#[test]
fn theorem3_k2() {
    let out = serp(&["theorem3-check", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let identities = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"].as_str().unwrap().contains("sum over mu"))
        .count();
    assert_eq!(identities, 6);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(serp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(serp(&["stats", "--n", "x"]).status.code(), Some(2));
    assert_eq!(serp(&["fusion-check", "--n", "5"]).status.code(), Some(2));
    assert_eq!(serp(&["stats", "--n-max", "7"]).status.code(), Some(2));
    assert_eq!(serp(&["stats", "--z", "diagonal"]).status.code(), Some(2));
    assert_eq!(serp(&[]).status.code(), Some(2));
}

#[test]
fn golden_mismatch_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("table-check.json"), "{}\n").unwrap();
    let out = serp(&["table-check", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let last = report["checks"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["status"], "fail");
    assert!(last["witness"]["first_differing_line"].is_number());
}

#[test]
fn byte_identical_runs() {
    let a = serp(&["serpentine", "--n", "6"]);
    let b = serp(&["serpentine", "--n", "6"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn tsv_and_pretty() {
    let tsv = serp(&["kostka-foulkes", "--n", "4", "--format", "tsv"]);
    let text = String::from_utf8(tsv.stdout).unwrap();
    assert!(text.starts_with("name\tstatus\tlhs\trhs\twitness\n"));
    assert!(text.lines().skip(1).all(|l| l.split('\t').nth(1) == Some("pass")));
    let pretty = serp(&["kostka-foulkes", "--n", "4", "--format", "pretty"]);
    assert!(String::from_utf8(pretty.stdout).unwrap().contains("kostka-foulkes: 6 checks, 0 failed"));
}

#[test]
fn timing_flag_records_elapsed() {
    let out = serp(&["stats", "--n", "4", "--timing"]);
    assert!(json(&out)["elapsed_ms"].is_u64());
}

#[test]
fn golden_corpus() {
    let dir = corpus();
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let stem = path.file_stem().unwrap().to_str().unwrap().to_string();
        let mut args: Vec<String> = Vec::new();
        let mut parts = stem.split('-').collect::<Vec<_>>();
        while let Some(last) = parts.last() {
            match last.split_at(1) {
                ("n", v) | ("k", v) if v.parse::<u32>().is_ok() => {
                    args.insert(0, v.to_string());
                    args.insert(0, format!("--{}", &last[..1]));
                    parts.pop();
                }
                _ => break,
            }
        }
        args.insert(0, parts.join("-"));
        args.push("--corpus".into());
        args.push(dir.to_str().unwrap().into());
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = serp(&refs);
        assert_eq!(out.status.code(), Some(0), "{stem}: {}", String::from_utf8_lossy(&out.stdout));
        seen += 1;
    }
    assert!(seen >= 9);
}
