use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;

use regauto_cli::{run, EXIT_ERROR, EXIT_FAILS, EXIT_HOLDS};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.json")]
        .iter()
        .collect();
    p.display().to_string()
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn regauto(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("regauto").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = regauto(&full);
    assert!(r.err.is_empty(), "stderr: {}", r.err);
    (r.code, serde_json::from_str(&r.out).unwrap())
}

fn temp_doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const AMBIGUOUS: &str = r#"{
  "alphabet": ["s"], "registers": [], "locations": ["p", "q1", "q2"],
  "initial": "p", "accepting": ["q1", "q2"],
  "edges": [
    { "from": "p", "label": "s", "to": "q1" },
    { "from": "p", "label": "s", "to": "q2" }
  ]
}"#;

#[test]
fn contains_on_the_split_pair() {
    let (code, v) = json(&["contains", &fixture("four_letter"), &fixture("three_way_split")]);
    assert_eq!(code, EXIT_HOLDS);
    assert_eq!(v["verdict"], "contained");
    assert!(v["witness"].is_null());
    assert!(v["nodes_explored"].as_u64().unwrap() > 0);
    assert!(v["peak_valuations"].as_u64().is_some());
}

#[test]
fn universal_fails_on_the_empty_word() {
    let (code, v) = json(&["universal", &fixture("repeated_datum")]);
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(v["verdict"], "not_universal");
    assert_eq!(v["witness"], "");
    assert_eq!(v["witness_verified"], true);
}

#[test]
fn member_exit_codes() {
    let f = fixture("repeated_datum");
    assert_eq!(regauto(&["member", &f, "--word", "s:1 s:1"]).code, EXIT_HOLDS);
    assert_eq!(regauto(&["member", &f, "--word", "s:2 s:1 s:3"]).code, EXIT_FAILS);
    assert_eq!(regauto(&["member", &f, "--word", ""]).code, EXIT_FAILS);
    let bad = regauto(&["member", &f, "--word", "s:0"]);
    assert_eq!(bad.code, EXIT_ERROR);
    assert!(bad.err.contains("positive"));
    assert_eq!(regauto(&["member", &f, "--word", "t:1"]).code, EXIT_ERROR);
}

#[test]
fn witnesses_reverify_with_member() {
    let a = fixture("four_letter");
    let b = fixture("three_way_split_missing_edge");
    let (code, v) = json(&["contains", &a, &b]);
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(v["verdict"], "not_contained");
    assert_eq!(v["witness_verified"], true);
    let w = v["witness"].as_str().unwrap().to_string();
    assert_eq!(w.split_whitespace().count(), 4);
    assert_eq!(regauto(&["member", &a, "--word", &w]).code, EXIT_HOLDS);
    assert_eq!(regauto(&["member", &b, "--word", &w]).code, EXIT_FAILS);

    let (code, v) = json(&["oracle-contains", &a, &b, "--max-len", "4"]);
    assert_eq!(code, EXIT_FAILS);
    let w = v["witness"].as_str().unwrap().to_string();
    assert_eq!(regauto(&["member", &a, "--word", &w]).code, EXIT_HOLDS);
    assert_eq!(regauto(&["member", &b, "--word", &w]).code, EXIT_FAILS);
    let (code, _) = json(&["oracle-contains", &a, &b, "--max-len", "3"]);
    assert_eq!(code, EXIT_HOLDS);
}

#[test]
fn json_output_is_stable() {
    let args = [
        "contains",
        &fixture("four_letter"),
        &fixture("three_way_split_missing_edge"),
    ];
    let strip = |mut v: Value| {
        v.as_object_mut()
            .unwrap()
            .remove("elapsed_ms")
            .expect("elapsed_ms present");
        v
    };
    let first = strip(json(&args).1);
    for _ in 0..3 {
        assert_eq!(strip(json(&args).1), first);
    }
    let keys: Vec<&str> = first.as_object().unwrap().keys().map(String::as_str).collect();
    for k in [
        "verdict",
        "witness",
        "witness_verified",
        "nodes_explored",
        "peak_valuations",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
}

#[test]
fn ambiguous_right_side_is_refused() {
    let b = temp_doc(AMBIGUOUS);
    let b = b.path().to_str().unwrap();
    let a = fixture("repeated_datum");
    let r = regauto(&["contains", &a, b]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("ambiguous"), "{}", r.err);
    assert!(r.err.contains("s:1"), "{}", r.err);
    let r = regauto(&["contains", &a, b, "--unsafe-skip-ura-check"]);
    assert_ne!(r.code, EXIT_ERROR, "{}", r.err);
    assert_eq!(regauto(&["unambiguous", b]).code, EXIT_FAILS);
    assert_eq!(regauto(&["unambiguous", &fixture("three_way_split")]).code, EXIT_HOLDS);
}

#[test]
fn equivalence_and_emptiness() {
    let b = fixture("three_way_split");
    assert_eq!(regauto(&["equivalent", &b, &b]).code, EXIT_HOLDS);
    let (code, v) = json(&["equivalent", &b, &fixture("three_way_split_missing_edge")]);
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(v["witness_verified"], true);
    let (code, v) = json(&["empty", &fixture("repeated_datum")]);
    assert_eq!(code, EXIT_FAILS);
    assert_eq!(v["witness"], "s:1 s:1");
}

#[test]
fn budget_and_collapse_flags() {
    let a = fixture("four_letter");
    let b = fixture("three_way_split");
    let r = regauto(&["contains", &a, &b, "--node-budget", "1"]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("gave up"), "{}", r.err);
    // Without collapsing the space is still finite here: every word longer
    // than four letters leaves A stuck.
    assert_eq!(regauto(&["contains", &a, &b, "--no-collapse"]).code, EXIT_HOLDS);
    let text = regauto(&["contains", &a, &b, "--witness-cap", "2"]);
    assert!(text.out.starts_with("contained"));
}

#[test]
fn input_errors_exit_two() {
    let r = regauto(&["validate", "/definitely/not/here.json"]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("cannot read"));

    let doc = temp_doc(
        &std::fs::read_to_string(fixture("repeated_datum"))
            .unwrap()
            .replace("\"=r\"", "\"=q\""),
    );
    let r = regauto(&["validate", doc.path().to_str().unwrap()]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("edges[3].guard"), "{}", r.err);
    assert!(r.err.contains("unknown register"), "{}", r.err);

    let doc = temp_doc("{ not json");
    assert_eq!(regauto(&["validate", doc.path().to_str().unwrap()]).code, EXIT_ERROR);

    assert_eq!(regauto(&["frobnicate"]).code, EXIT_ERROR);
    assert_eq!(regauto(&["contains", &fixture("four_letter")]).code, EXIT_ERROR);
    assert_eq!(regauto(&["--help"]).code, EXIT_HOLDS);

    let r = regauto(&["validate", &fixture("three_way_split")]);
    assert_eq!(r.code, EXIT_HOLDS);
    assert!(r.out.starts_with("valid (9 locations, 12 edges"), "{}", r.out);
}

#[test]
fn fixtures_match_library_samples() {
    use regauto::samples;
    let cases = [
        ("repeated_datum", samples::repeated_datum()),
        ("four_letter", samples::four_letter()),
        ("three_way_split", samples::three_way_split()),
        ("three_way_split_missing_edge", samples::three_way_split_missing_edge()),
        ("three_way_split_no_loop", samples::three_way_split_no_loop()),
    ];
    for (name, aut) in cases {
        assert_eq!(
            regauto_cli::load_automaton(fixture(name).as_ref()).unwrap(),
            aut,
            "{name}"
        );
    }
}

#[test]
fn binary_reports_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_regauto");
    let status = |args: &[&str]| Command::new(exe).args(args).output().unwrap().status.code();
    assert_eq!(
        status(&["member", &fixture("repeated_datum"), "--word", "s:1 s:1"]),
        Some(0)
    );
    assert_eq!(status(&["universal", &fixture("repeated_datum")]), Some(1));
    assert_eq!(status(&["empty"]), Some(2));
}
