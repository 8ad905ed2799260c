use std::fs;
use std::process::{Command, Output};

use one_radical_cli::DecisionReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_one-radical")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn decide_json(poly: &str) -> (DecisionReport, i32) {
    let o = run(&["decide", "--poly", poly, "--json"]);
    let report = serde_json::from_str(stdout(&o).trim()).expect("report parses");
    (report, o.status.code().unwrap())
}

#[test]
fn decide_cubic_json() {
    let (r, code) = decide_json("x^3+6x-2");
    assert_eq!(code, 0);
    assert_eq!(r.verdict, "one_radical");
    assert_eq!(r.schema_version, 1);
    assert_eq!(r.input, "x^3 + 6x - 2");
    let cert = r.certificate.as_ref().unwrap();
    assert_eq!((cert.descriptor().index(), cert.descriptor().radicand().to_string()), (3, "4".into()));
    let coeffs: Vec<String> = cert.coeffs().iter().map(|c| c.to_string()).collect();
    assert_eq!(coeffs, ["0", "1", "-1/2"]);
    assert!(r.verification.unwrap().exact);
}

#[test]
fn decide_json_uses_string_rationals() {
    let o = run(&["decide", "--poly", "x^3-3x-1", "--json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verdict"], "not_one_solvable");
    assert_eq!(v["diagnostics"]["d_pq"], "-3/4");
    assert_eq!(v["coeffs"], serde_json::json!(["-1", "-3", "0", "1"]));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn decide_exit_codes() {
    assert_eq!(decide_json("x^4-10x^2+1").1, 2);
    assert_eq!(decide_json("x^4-10x^2+1").0.verdict, "unknown");
    assert_eq!(decide_json("x^3-x").1, 0);
    assert_eq!(decide_json("x^4-x-1").1, 1);
    assert_eq!(decide_json("2x+1").0.verdict, "rational_root");
    assert_eq!(decide_json("5").0.verdict, "not_one_solvable");
}

#[test]
fn decide_errors_exit_three() {
    let o = run(&["decide", "--poly", "x^5+1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported degree"));

    let o = run(&["decide", "--poly", "x^3 ++ 1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));

    assert_eq!(run(&["decide", "--poly", "x - x"]).status.code(), Some(3));
    assert_eq!(run(&["decide"]).status.code(), Some(3));
    assert_eq!(run(&["bogus"]).status.code(), Some(3));
}

#[test]
fn decide_coeffs_and_text() {
    let o = run(&["decide", "--coeffs", "1,0,-4,-8,2", "--text"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("verdict:    one_radical"), "{s}");
    assert!(s.contains("exact=true"), "{s}");
    let neg = run(&["decide", "--coeffs", "-1,0,0,2"]);
    assert_eq!(neg.status.code(), Some(0));
}

#[test]
fn decide_is_deterministic_without_timing() {
    let a = run(&["decide", "--poly", "x^4-4x^2-8x+2", "--json", "--no-timing"]);
    let b = run(&["decide", "--poly", "x^4-4x^2-8x+2", "--json", "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("elapsed_us"));
}

#[test]
fn generate_then_batch_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("cubics.jsonl");
    let o = run(&["generate", "--degree", "3", "--count", "100", "--seed", "7", "--out", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&corpus).unwrap().lines().count(), 100);

    let o = run(&["batch", "--in", corpus.to_str().unwrap(), "--json", "--verify-digits", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 101);
    for (i, v) in lines[..100].iter().enumerate() {
        assert_eq!(v["line"], i + 1);
        assert_eq!(v["report"]["verdict"], "one_radical");
        assert_eq!(v["report"]["verification"]["exact"], true);
    }
    assert_eq!(lines[100]["summary"]["one_radical"], 100);
}

#[test]
fn generate_is_reproducible() {
    let a = run(&["generate", "--degree", "4", "--count", "5", "--seed", "11"]);
    let b = run(&["generate", "--degree", "4", "--count", "5", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, run(&["generate", "--degree", "4", "--count", "5", "--seed", "12"]).stdout);
    assert_eq!(run(&["generate", "--degree", "5", "--count", "1", "--seed", "1"]).status.code(), Some(3));
}

#[test]
fn batch_mixed_lines() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    fs::write(&input, "x^3 - x\n# comment\n\nx^3 - 3x - 1\nx^4 - x - 1\nx^ + 1\nx^4 - 2\n").unwrap();
    let o = run(&["batch", "--in", input.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(3), "a malformed line makes the exit nonzero");
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let verdicts: Vec<_> = lines[..5].iter().map(|v| (v["line"].clone(), v["report"]["verdict"].clone())).collect();
    assert_eq!(
        verdicts,
        [
            (1.into(), "rational_root".into()),
            (4.into(), "not_one_solvable".into()),
            (5.into(), "not_one_solvable".into()),
            (6.into(), Value::Null),
            (7.into(), "one_radical".into()),
        ]
    );
    assert!(lines[3]["error"].as_str().unwrap().contains("position"));
    assert_eq!(lines[5]["summary"]["errors"], 1);
    assert_eq!(lines[5]["summary"]["total"], 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 6"));
}

#[test]
fn batch_output_order_matches_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let polys: Vec<String> = (1..=60).map(|k| format!("x^3 - {k}")).collect();
    fs::write(&input, polys.join("\n")).unwrap();
    let o = run(&["batch", "--in", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for (i, line) in out.lines().take(60).enumerate() {
        assert!(line.starts_with(&format!("{}: x^3 - {} ->", i + 1, i + 1)), "{line}");
    }
    assert!(out.lines().last().unwrap().starts_with("total 60"));
}

#[test]
fn batch_missing_file() {
    let o = run(&["batch", "--in", "/nonexistent/polys.txt"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_good_and_corrupted_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    fs::write(&good, r#"{"shift":"0","n":3,"t":"4","coeffs":["0","1","-1/2"]}"#).unwrap();
    let o = run(&["verify", "--poly", "x^3+6x-2", "--cert", good.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["exact"], true);

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"shift":"0","n":3,"t":"4","coeffs":["0","1","1/2"]}"#).unwrap();
    let o = run(&["verify", "--poly", "x^3+6x-2", "--cert", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("exact:    false"));

    // non-normalized descriptor is malformed
    let raw = dir.path().join("raw.json");
    fs::write(&raw, r#"{"shift":"0","n":4,"t":"4","coeffs":["0","1"]}"#).unwrap();
    assert_eq!(run(&["verify", "--poly", "x^2-2", "--cert", raw.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn verify_accepts_report_and_corpus_line() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    fs::write(&report, run(&["decide", "--poly", "x^4-2", "--json"]).stdout).unwrap();
    let o = run(&["verify", "--poly", "x^4-2", "--cert", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let corpus = dir.path().join("one.jsonl");
    fs::write(&corpus, run(&["generate", "--degree", "4", "--count", "1", "--seed", "3"]).stdout).unwrap();
    let line: Value = serde_json::from_str(fs::read_to_string(&corpus).unwrap().trim()).unwrap();
    let poly = line["poly"].as_str().unwrap();
    let o = run(&["verify", "--poly", poly, "--cert", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn factor_bound_env_var() {
    // 1009 · 1013 survives trial division up to 10
    let run_with = |bound: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_one-radical"));
        cmd.args(["decide", "--poly", "x^3 - 1022117"]);
        match bound {
            Some(b) => cmd.env("ONE_RADICAL_FACTOR_BOUND", b),
            None => cmd.env_remove("ONE_RADICAL_FACTOR_BOUND"),
        };
        cmd.output().unwrap()
    };
    assert_eq!(run_with(None).status.code(), Some(0));
    let o = run_with(Some("10"));
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("factor"), "{}", String::from_utf8_lossy(&o.stderr));
}
