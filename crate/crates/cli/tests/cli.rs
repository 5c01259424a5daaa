use std::fs;

use goedelsim_cli::run_with;
use goedelsim_core::parse;
use proptest::prelude::*;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("goedelsim").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn corpus_file(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    fs::write(f.path(), text).unwrap();
    f
}

#[test]
fn encode_prints_the_standard_code() {
    let r = run(&["encode", "--numbering", "gamma", "(S 0)"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "16\n"));
}

#[test]
fn decode_and_translate_round_trip() {
    assert_eq!(run(&["decode", "--numbering", "gamma", "16"]).stdout, "(S 0)\n");
    let there = run(&["translate", "--from", "gamma", "--to", "diag", "16"]);
    assert_eq!(there.code, 0);
    let back = run(&["translate", "--from", "diag", "--to", "gamma", there.stdout.trim()]);
    assert_eq!(back.stdout, "16\n");
}

#[test]
fn decide_eq_reports_provable_equality() {
    let r = run(&["decide-eq", "(+ (S 0) (v 0))", "(+ (v 0) (S 0))"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().next(), Some("provably-equal: true"));
    let r = run(&["decide-eq", "(* (v 0) (v 0))", "(v 0)"]);
    assert_eq!(r.stdout.lines().next(), Some("provably-equal: false"));
}

#[test]
fn normalize_shows_decreasing_weights() {
    let r = run(&["--json", "normalize", "(* (S 0) (v 0))"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["normal_form"], "(v 0)");
    for s in v["steps"].as_array().unwrap() {
        let before: u64 = s["weight_before_at_twos"].as_str().unwrap().parse().unwrap();
        let after: u64 = s["weight_after_at_twos"].as_str().unwrap().parse().unwrap();
        assert!(before > after);
    }
}

#[test]
fn classify_and_predicate() {
    let r = run(&["classify", "(forall (v 0) (= (+ (v 0) 0) (v 0)))"]);
    assert_eq!(r.stdout.lines().next(), Some("verdict: provable"));
    assert_eq!(run(&["predicate", "even", "4"]).stdout, "true\n");
    assert_eq!(run(&["predicate", "even", "5"]).stdout, "false\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["encode", "--numbering", "nope", "0"][..],
        &["encode", "--numbering", "gamma", "(S"],
        &["decode", "--numbering", "gamma", "-3"],
        &["predicate", "no-such-predicate", "0"],
        &["frobnicate"],
        &["report"],
        &["verify", "loeb", "--numbering", "gamma"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(r.stdout.is_empty(), "{args:?}");
        assert!(!r.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn corpus_parse_errors_name_the_line() {
    let f = corpus_file("(= 0 0)\n\n(= 0 # deviant\n");
    let r = run(&["--corpus", f.path().to_str().unwrap(), "verify", "deviant"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    let f = corpus_file("(= 0 0) # no-such-tag\n");
    assert_eq!(run(&["--corpus", f.path().to_str().unwrap(), "verify", "deviant"]).code, 2);
}

#[test]
fn missing_corpus_is_a_runtime_error() {
    let r = run(&["--corpus", "/nonexistent/corpus.txt", "verify", "deviant"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("cannot read"));
}

#[test]
fn empty_corpus_reports_skipped() {
    let f = corpus_file("");
    let r = run(&["--json", "--no-timestamp", "--corpus", f.path().to_str().unwrap(), "verify", "simulation"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["checks"][0]["id"], "simulation.corpus");
    assert_eq!(v["checks"][0]["status"], "skipped");
    assert_eq!(v["summary"]["skipped"], 1);
}

#[test]
fn reports_are_byte_identical_without_timestamp() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<String> = ["a.json", "b.json"].iter().map(|n| dir.path().join(n).display().to_string()).collect();
    for p in &paths {
        assert_eq!(run(&["--no-timestamp", "--out", p, "verify", "equivalence"]).code, 0);
    }
    let (a, b) = (fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert!(v.get("timestamp").is_none());
    assert_eq!(run(&["--out", &paths[0], "verify", "equivalence"]).code, 0);
    let v: Value = serde_json::from_slice(&fs::read(&paths[0]).unwrap()).unwrap();
    assert!(v["timestamp"].is_string());
}

#[test]
fn summary_matches_check_tallies() {
    let r = run(&["--json", "--no-timestamp", "verify", "simulation"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for status in ["pass", "fail", "skipped", "oracle-incomplete"] {
        let n = checks.iter().filter(|c| c["status"] == status).count();
        assert_eq!(v["summary"][status.replace('-', "_")], n, "{status}");
    }
}

#[test]
fn failing_predicate_exits_1() {
    let r = run(&["--json", "--no-timestamp", "verify", "loeb", "--numbering", "gamma", "--predicate", "const-false"]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["checks"][0]["status"], "fail");
    assert!(v["checks"][0]["details"]["failures"]["loeb1"].as_u64().unwrap() > 0);
    assert_eq!(v["summary"]["fail"], 1);
}

#[test]
fn fixed_point_outside_the_fragment_exits_1() {
    let r = run(&["fixed-point", "--numbering", "gamma", "--predicate", "tr-forall"]);
    assert_eq!(r.code, 1);
    let r = run(&["fixed-point", "--predicate", "even"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("truth: "));
}

#[test]
fn passing_loeb_pair_exits_0() {
    let r = run(&["--no-timestamp", "verify", "loeb", "--numbering", "delta-neg", "--predicate", "pr-neg"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exit_2_exactly_on_parse_errors(text in "[()v0-9S+*= ]{0,14}") {
        let r = run(&["encode", "--numbering", "gamma", &text]);
        if parse(&text).is_err() {
            prop_assert_eq!(r.code, 2);
        } else {
            prop_assert!(r.code == 0 || r.code == 1, "{}", r.code);
        }
    }

    #[test]
    fn unknown_subcommands_exit_2(word in "[a-z]{3,10}") {
        let known = ["encode", "decode", "translate", "normalize", "classify", "predicate", "verify", "report", "help"];
        prop_assume!(!known.contains(&word.as_str()));
        prop_assert_eq!(run(&[&word]).code, 2);
    }
}
