use std::path::PathBuf;

use nmv_cli::file::{parse_algebra_file, AlgebraFile};
use nmv_core::fixtures;
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = nmv_cli::run(std::iter::once("nmv").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_sai_passes_on_example() {
    let (code, out, _) = run(&["check", &fixture("example1.nmv.json"), "--kind", "sai"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result: all checks pass"));
    let json = run(&["--json", "check", &fixture("example1.nmv.json"), "--kind", "sai"]).1;
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let gating: Vec<_> = doc["sections"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["gating"] == true)
        .flat_map(|s| s["laws"].as_array().unwrap().clone())
        .collect();
    assert_eq!(gating.len(), 8);
    assert!(gating.iter().all(|l| l["verdict"] == "pass"));
}

#[test]
fn residuated_check_fails_with_exit_one() {
    let (code, out, _) = run(&["check", &fixture("example1.nmv.json"), "--kind", "residuated"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  res.adjointness"));
}

#[test]
fn crp_check_of_nmv_file() {
    let (code, out, _) = run(&["check", &fixture("example1.nmv.json"), "--kind", "crp"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS  prop.compatibility"));
}

#[test]
fn enumerate_counts() {
    assert_eq!(run(&["enumerate", "--size", "2", "--kind", "nmv", "--count-only"]).1, "1\n");
    assert_eq!(run(&["enumerate", "--size", "4", "--count-only"]).1, "3\n");
    assert_eq!(run(&["enumerate", "--size", "4", "--up-to-iso", "--count-only"]).1, "2\n");
    let (code, out, _) = run(&["enumerate", "--size", "3"]);
    assert_eq!(code, 0);
    let file = parse_algebra_file(out.trim()).unwrap();
    assert_eq!(file.elements.len(), 3);
}

#[test]
fn derive_implication_row() {
    let (code, out, _) = run(&["--json", "derive", &fixture("example1.nmv.json"), "--ops", "to"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["to"][4], serde_json::json!(["a", "d", "c", "c", "1", "1"]));
}

#[test]
fn hasse_writes_covering_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.dot");
    let (code, _, _) = run(&["hasse", &fixture("example1.nmv.json"), "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(path).unwrap();
    assert!(dot.starts_with("digraph hasse {"));
    assert_eq!(dot.matches(" -> ").count(), 8);
    assert!(dot.contains("\"0\" -> \"a\";"));
}

#[test]
fn conversion_chain_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let crp = dir.path().join("crp.json");
    let back = dir.path().join("back.json");
    assert_eq!(
        run(&["convert", &fixture("example1.nmv.json"), "--via", "nmv-to-crp", "-o", crp.to_str().unwrap()]).0,
        0
    );
    assert_eq!(run(&["convert", crp.to_str().unwrap(), "--via", "crp-to-nmv", "-o", back.to_str().unwrap()]).0, 0);
    let original = parse_algebra_file(&std::fs::read_to_string(fixture("example1.nmv.json")).unwrap()).unwrap();
    let round = parse_algebra_file(&std::fs::read_to_string(back).unwrap()).unwrap();
    assert_eq!(original.to_nmv().unwrap(), round.to_nmv().unwrap());
}

#[test]
fn residuated_conversions() {
    let dir = tempfile::tempdir().unwrap();
    let res = dir.path().join("res.json");
    let (code, _, err) = run(&[
        "convert",
        &fixture("lukasiewicz3.ipp.json"),
        "--via",
        "poset-to-residuated",
        "-o",
        res.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(run(&["check", res.to_str().unwrap(), "--kind", "residuated"]).0, 0);
    let (code, out, _) = run(&["convert", res.to_str().unwrap(), "--via", "residuated-to-poset"]);
    assert_eq!(code, 0);
    let ipp = parse_algebra_file(&out).unwrap();
    let original = parse_algebra_file(&std::fs::read_to_string(fixture("lukasiewicz3.ipp.json")).unwrap()).unwrap();
    assert_eq!(ipp.tables, original.tables);
}

#[test]
fn find_reports_witnesses() {
    let (code, out, _) = run(&["find", "--size", "7", "--predicate", "non-antitone-section", "--up-to-iso"]);
    assert_eq!(code, 0);
    assert!(out.contains(": 1 found"));
    assert!(out.contains("witness ("));
    let (_, out, _) = run(&["find", "--size", "6", "--predicate", "non-antitone-section"]);
    assert!(out.contains(": 0 found"));
    let (_, out, _) =
        run(&["--json", "find", "--file", &fixture("example1.nmv.json"), "--predicate", "adjointness-failure"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["count"], 1);
    assert_eq!(doc["results"][0]["witnesses"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(run(&["check"]).0, 2);
    assert_eq!(run(&["enumerate", "--size", "9"]).0, 2);
    assert_eq!(run(&["find", "--size", "3", "--predicate", "nope"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"kind\": \"nmv\", ").unwrap();
    let (code, _, err) = run(&["check", bad.to_str().unwrap(), "--kind", "nmv"]);
    assert_eq!(code, 2);
    assert!(err.contains("line"));
}

#[test]
fn failing_axioms_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = r#"{"kind":"nmv","elements":["0","1"],"zero":"0",
        "tables":{"oplus":[["0","1"],["1","0"]],"neg":["1","0"]}}"#;
    std::fs::write(&path, text).unwrap();
    let (code, out, _) = run(&["check", path.to_str().unwrap(), "--kind", "nmv"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  nmv.one-absorbing"));
}

fn algebras() -> Vec<nmv_core::NmvAlgebra> {
    let mut all = vec![fixtures::example1(), fixtures::boolean()];
    all.extend((2..=5).map(fixtures::lukasiewicz_chain));
    all
}

fn permuted_algebra() -> impl Strategy<Value = nmv_core::NmvAlgebra> {
    (0..algebras().len())
        .prop_flat_map(|idx| {
            let n = algebras()[idx].size();
            (Just(idx), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(idx, perm)| algebras()[idx].permute(&perm).unwrap())
}

proptest! {
    #[test]
    fn file_round_trip(alg in permuted_algebra()) {
        let file = AlgebraFile::from_nmv(&alg);
        let parsed = parse_algebra_file(&file.to_json()).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(parsed.to_nmv().unwrap(), alg);
    }
}

#[test]
fn book_transcripts_match() {
    let book = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../book/src/cli.md");
    let text = std::fs::read_to_string(book).unwrap();
    let fixture_path = fixture("example1.nmv.json");
    let mut checked = 0;
    for block in text.split("```text\n").skip(1).map(|b| b.split("```").next().unwrap()) {
        let mut lines = block.lines().peekable();
        while let Some(line) = lines.next() {
            let Some(command) = line.strip_prefix("$ nmv ") else { continue };
            let mut expected = String::new();
            while let Some(next) = lines.next_if(|l| !l.starts_with("$ ")) {
                expected += next;
                expected.push('\n');
            }
            if command.contains('|') {
                continue;
            }
            let args: Vec<String> =
                command.split_whitespace().map(|a| a.replace("example1.nmv.json", &fixture_path)).collect();
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let (_, out, _) = run(&args);
            assert_eq!(out.replace(&fixture_path, "example1.nmv.json"), expected, "nmv {command}");
            checked += 1;
        }
    }
    assert_eq!(checked, 4);
}
