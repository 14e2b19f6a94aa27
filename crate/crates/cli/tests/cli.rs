use std::path::PathBuf;
use std::process::Command;

use linkage_cli::session::Decl;
use linkage_cli::{parse_session, render_session, run, run_command, Format, Invocation, Session};
use linkage_core::Error;
use proptest::prelude::*;
use serde_json::Value;

const FIXTURES: &[&str] = &[
    "nodal.session",
    "plane.session",
    "cubic.session",
    "line.session",
    "nodal_chain.session",
    "projective_line.session",
];

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

fn names(s: &Session, pick: fn(&Decl) -> bool) -> Vec<String> {
    s.decls.iter().filter(|d| pick(d)).map(|d| d.name().to_string()).collect()
}

fn json(text: &str, cmd: &str, args: &[&str]) -> (Value, i32) {
    let (out, code) = run(text, &Invocation::new(cmd, args), Format::Json);
    (serde_json::from_str(&out).unwrap(), code)
}

#[test]
fn parses_a_minimal_session() {
    let s = parse_session("field 32003\nring R vars x y order grevlex mod [x*y]\nmodule M over R rel [[x]]\n").unwrap();
    assert_eq!(s.decls.len(), 2);
    assert!(matches!(&s.decls[0], Decl::Ring(r) if r.name == "R" && r.vars == ["x", "y"]));
    assert!(matches!(&s.decls[1], Decl::Module(m) if m.name == "M" && m.ring == "R"));
    assert_eq!(s.module("M").unwrap().display(), "coker [[x]]");
}

#[test]
fn errors_point_at_the_offending_line() {
    let err = parse_session("field 32003\n# comment\nmodule M over R rel [[x]]\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, column: 15, .. }), "{err}");
    let err = parse_session("ring R vars x y order grevlex\nmodule M over R rel [[x, z]]\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, column: 26, .. }), "{err}");
    let err = parse_session("ring R vars x order lex\nring R vars y order lex\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    let err = parse_session("ring R vars x order lex\nring S vars y order lex\nmodule M over S rel [[y]]\nsheaf F\n  chart A ring R module M\nend\n")
        .unwrap_err();
    assert!(matches!(err, Error::Parse { line: 5, .. }), "{err}");
    let err = parse_session("ring R vars x order lex extra\n").unwrap_err();
    assert!(err.to_string().contains("unknown order"), "{err}");
    assert!(parse_session("field 12\n").is_err());
    assert!(parse_session("ring R vars x order lex\nmodule M over R rel [[x]] degrees 0 1\n").is_err());
}

#[test]
fn glue_lines_are_checked_when_parsed() {
    let text = fixture("projective_line.session").replace("ringmap u->t", "ringmap u->0");
    let err = parse_session(&text).unwrap_err();
    assert!(err.to_string().contains("unit"), "{err}");
    let text = fixture("projective_line.session").replace("ringmap u->t", "ringmap w->t");
    assert!(matches!(parse_session(&text).unwrap_err(), Error::Parse { line: 12, .. }));
}

#[test]
fn rendered_sessions_parse_back_to_themselves() {
    for f in FIXTURES {
        let s = parse_session(&fixture(f)).unwrap();
        let again = parse_session(&render_session(&s)).unwrap();
        assert_eq!(again, s, "{f}");
        assert_eq!(render_session(&again), render_session(&s));
    }
}

#[test]
fn lambda_of_a_free_module_is_zero_with_a_note() {
    let (v, code) = json(&fixture("nodal.session"), "lambda", &["F"]);
    assert_eq!(code, 0);
    assert_eq!(v["matrices"]["lambda"], "[]");
    assert!(v["note"].as_str().unwrap().contains("free"));
}

#[test]
fn golden_commands() {
    let (v, code) = json(&fixture("nodal.session"), "link-pair", &["MX", "MY"]);
    assert_eq!((v["verdict"].as_str(), code), (Some("Linked"), 0));
    let (v, code) = json(&fixture("line.session"), "link-module", &["T"]);
    assert_eq!((v["verdict"].as_str(), code), (Some("NotLinked"), 0));
    let (v, _) = json(&fixture("nodal.session"), "resolve", &["MX"]);
    assert_eq!(v["matrices"]["d4"], "[[y]]");
    let (v, _) = json(&fixture("nodal.session"), "colon", &["Z", "X"]);
    assert_eq!(v["ideal"], serde_json::json!(["y"]));
    let (v, _) = json(&fixture("nodal.session"), "gb", &["XY"]);
    assert_eq!(v["basis"], serde_json::json!(["y", "x"]));
    let (v, _) = json(&fixture("nodal.session"), "nf", &["X", "x^2 + y^2 + 1"]);
    assert_eq!(v["normal_form"], "y^2 + 1");
    let (v, _) = json(&fixture("nodal.session"), "betti", &["SUM"]);
    assert_eq!(v["betti"]["generators"], 2);
    let (v, _) = json(&fixture("nodal_chain.session"), "sheaf-validate", &["F"]);
    assert!(v["evidence"].as_array().unwrap().iter().all(|e| e["outcome"] == "Yes"));
    let (v, _) = json(&fixture("nodal_chain.session"), "sheaf-linked", &["F"]);
    assert!(v["chart_reports"]["C1"].is_object() && v["chart_reports"]["C2"].is_object());
}

#[test]
fn inconclusive_searches_exit_with_two() {
    let mut inv = Invocation::new("link-pair", &["SUM", "SUM"]);
    inv.trials = 0;
    let (out, code) = run(&fixture("nodal.session"), &inv, Format::Json);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["verdict"].as_str(), v["trials"].as_u64(), code), (Some("Inconclusive"), Some(0), 2));
    inv.trials = 64;
    let (_, code) = run(&fixture("nodal.session"), &inv, Format::Json);
    assert_eq!(code, 0);
}

#[test]
fn arity_and_unknown_names_are_errors() {
    let text = fixture("nodal.session");
    assert_eq!(run(&text, &Invocation::new("link-pair", &["MX"]), Format::Text).1, 1);
    assert_eq!(run(&text, &Invocation::new("link-pair", &["MX", "X"]), Format::Text).1, 1);
    assert_eq!(run(&text, &Invocation::new("bogus", &[]), Format::Text).1, 1);
    assert_eq!(run("ring", &Invocation::new("gb", &["X"]), Format::Text).1, 1);
}

/// Commands paired with the kinds of their arguments.
fn command_table() -> Vec<(&'static str, Vec<char>)> {
    vec![
        ("gb", vec!['i']),
        ("colon", vec!['i', 'i']),
        ("intersect", vec!['i', 'i']),
        ("resolve", vec!['m']),
        ("betti", vec!['m']),
        ("dual", vec!['m']),
        ("hom", vec!['m', 'm']),
        ("transpose", vec!['m']),
        ("lambda", vec!['m']),
        ("stable-part", vec!['m']),
        ("link-pair", vec!['m', 'm']),
        ("link-module", vec!['m']),
        ("projective", vec!['m']),
        ("ideal-link", vec!['i', 'i', 'i']),
        ("ass", vec!['i', 'm']),
        ("sheaf-validate", vec!['s']),
        ("sheaf-lambda", vec!['s']),
        ("sheaf-linked", vec!['s']),
        ("sheaf-glue", vec!['s']),
        ("sheaf-locally-free", vec!['s']),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exit_codes_match_verdicts(f in 0..FIXTURES.len(), c in 0..20usize, picks in prop::collection::vec(0..16usize, 3)) {
        let text = fixture(FIXTURES[f]);
        let s = parse_session(&text).unwrap();
        let (cmd, kinds) = &command_table()[c];
        let pools = [
            ('i', names(&s, |d| matches!(d, Decl::Ideal(_)))),
            ('m', names(&s, |d| matches!(d, Decl::Module(_)))),
            ('s', names(&s, |d| matches!(d, Decl::Sheaf(_)))),
        ];
        let mut args = Vec::new();
        for (k, kind) in kinds.iter().enumerate() {
            let pool = &pools.iter().find(|(c, _)| c == kind).unwrap().1;
            if pool.is_empty() {
                return Ok(());
            }
            args.push(pool[picks[k] % pool.len()].clone());
        }
        let inv = Invocation { args, ..Invocation::new(cmd, &[]) };
        let (out, code) = run(&text, &inv, Format::Json);
        let v: Value = serde_json::from_str(&out).unwrap();
        match run_command(&s, &inv) {
            Err(_) => prop_assert!(code == 1 && v["error"].is_string()),
            Ok(r) => {
                let inconclusive = v["verdict"] == "Inconclusive";
                prop_assert_eq!(code, if inconclusive { 2 } else { 0 });
                prop_assert_eq!(r.exit_code(), code);
                prop_assert_eq!(v["trials"].is_number(), inconclusive);
            }
        }
        // identical input and seed give identical bytes
        prop_assert_eq!(run(&text, &inv, Format::Json).0, out);
    }
}

#[test]
fn binary_runs_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_linkage");
    let out = Command::new(bin)
        .arg(fixture_path("nodal.session"))
        .args(["link-pair", "MX", "MY", "--format", "json", "--seed", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"verdict\":\"Linked\""));
    let out = Command::new(bin)
        .arg(fixture_path("nodal.session"))
        .args(["link-pair", "SUM", "SUM", "--trials", "0", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).arg(fixture_path("missing.session")).args(["gb", "X"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
    let out = Command::new(bin)
        .arg(fixture_path("nodal_chain.session"))
        .args(["linked-subsheaf", "O", "C1", "P", "--witness", "x1|y1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("verdict: Yes"));
}
