use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn dualgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualgraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generate(dir: &Path, family: &[&str], name: &str) -> String {
    let path = dir.join(name).display().to_string();
    let mut args = vec!["generate"];
    args.extend_from_slice(family);
    args.extend(["--out", &path]);
    let o = dualgraph(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = dualgraph(&full);
    (serde_json::from_slice(&o.stdout).unwrap_or(Value::Null), o.status.code().unwrap())
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checklist"].as_array().unwrap().iter().find(|c| c["check"] == name).expect(name)
}

#[test]
fn hypercube_edge_file_has_twelve_lines() {
    let o = dualgraph(&["generate", "hypercube", "3"]);
    assert_eq!(stdout(&o).lines().count(), 12);
}

#[test]
fn crosspolytope_report() {
    let dir = TempDir::new().unwrap();
    let path = generate(dir.path(), &["crosspolytope", "3"], "cp3.txt");
    let (r, code) = json(&["analyze-complex", &path, "--strict"]);
    assert_eq!(code, 0);
    assert_eq!(r["fields"][0]["gorenstein"], true);
    assert_eq!(r["fields"][0]["regularity"], 3);
    assert_eq!(r["dual_graph"]["vertex_connectivity"], 3);
    assert_eq!(r["dual_graph"]["diameter"], 3);
    assert_eq!(r["hirsch"], "hirsch");
    assert_eq!(check(&r, "regularity_connected_if_gorenstein")["status"], "pass");
    assert_eq!(check(&r, "flag_cohen_macaulay_diameter_at_most_height")["status"], "pass");
}

#[test]
fn cohen_macaulay_but_not_gorenstein() {
    let dir = TempDir::new().unwrap();
    let path = generate(dir.path(), &["triangle-with-tail"], "t.txt");
    let (r, code) = json(&["analyze-complex", &path]);
    assert_eq!(code, 0);
    assert_eq!(r["fields"][0]["cohen_macaulay"], true);
    assert_eq!(r["fields"][0]["regularity"], 2);
    assert_eq!(r["dual_graph"]["vertex_connectivity"], 1);
    assert_eq!(check(&r, "regularity_connected_if_gorenstein")["status"], "not applicable: not Gorenstein");
    let (_, strict) = json(&["analyze-complex", &path, "--strict"]);
    assert_eq!(strict, 2);
}

#[test]
fn text_and_json_agree() {
    let dir = TempDir::new().unwrap();
    let path = generate(dir.path(), &["crosspolytope", "2"], "cp2.txt");
    let (r, _) = json(&["analyze-complex", &path]);
    let text = stdout(&dualgraph(&["analyze-complex", &path]));
    let g = &r["dual_graph"];
    for (key, value) in [
        ("facets", &r["facets"]),
        ("height", &r["height"]),
        ("multiplicity", &r["multiplicity"]),
        ("  regularity", &r["fields"][0]["regularity"]),
        ("  vertex connectivity", &g["vertex_connectivity"]),
        ("  edge connectivity", &g["edge_connectivity"]),
        ("  diameter", &g["diameter"]),
    ] {
        let line = format!("{key}: {value}");
        assert!(text.lines().any(|l| l.starts_with(&line)), "missing {line:?}");
    }
    let f: Vec<String> = r["f_vector"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
    assert!(text.contains(&format!("f-vector: {}", f.join(" "))));
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let path = generate(dir.path(), &["coordinate-crosspolytope", "3"], "a.json");
    let first = dualgraph(&["--format", "json", "--seed", "7", "analyze-arrangement", &path]);
    let second = dualgraph(&["--format", "json", "--seed", "7", "analyze-arrangement", &path]);
    assert_eq!(first.stdout, second.stdout);
    let r: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(check(&r, "section_preserves_dual_graph")["status"], "pass");
    assert_eq!(r["section"]["variables"], 5);
}

#[test]
fn non_hirsch_arrangement() {
    let dir = TempDir::new().unwrap();
    let path = generate(dir.path(), &["path-arrangement"], "p.json");
    let (r, code) = json(&["analyze-arrangement", &path, "--subset", "1,2", "--subset", "1,2,3,4"]);
    assert_eq!(code, 0);
    assert_eq!(r["hirsch"], "not_hirsch");
    assert_eq!(r["height"], 2);
    assert_eq!(r["dual_graph"]["diameter"], 3);
    assert_eq!(r["regularity_bounds"][0]["subset"], serde_json::json!([1, 2]));
    assert_eq!(r["regularity_bounds"][1]["regularity_bound"], 3);
}

#[test]
fn supplied_regularity_is_checked() {
    let dir = TempDir::new().unwrap();
    let path = generate(dir.path(), &["coordinate-triangle-with-tail"], "t.json");
    let (r, _) = json(&["analyze-arrangement", &path, "--regularity", "2"]);
    assert_eq!(check(&r, "regularity_connected_if_gorenstein")["status"], "fail");
    let path = generate(dir.path(), &["coordinate-crosspolytope", "3"], "c.json");
    let (r, _) = json(&["analyze-arrangement", &path, "--regularity", "3"]);
    assert_eq!(check(&r, "regularity_connected_if_gorenstein")["status"], "pass");
}

#[test]
fn line_arrangements() {
    let dir = TempDir::new().unwrap();
    let quad = generate(dir.path(), &["general-plane-quadrilateral"], "q.json");
    let (r, _) = json(&["analyze-lines", &quad]);
    assert_eq!(r["curve"]["genus"], 3);
    assert_eq!(r["curve"]["verdict"], "hirsch");
    let chain = generate(dir.path(), &["line-chain", "4"], "c.json");
    let (r, code) = json(&["analyze-lines", &chain, "--strict"]);
    assert_eq!(r["curve"]["verdict"], "not_canonically_embeddable");
    assert_eq!(code, 2);
}

#[test]
fn forbidden_graph_is_not_realizable() {
    let dir = TempDir::new().unwrap();
    let path = generate(dir.path(), &["k6-minus-matching"], "g.txt");
    let text = stdout(&dualgraph(&["check-graph", &path]));
    assert!(text.contains("realizability: not realizable as a line-arrangement dual graph"));
    let path = generate(dir.path(), &["complete", "6"], "k6.txt");
    let (r, _) = json(&["check-graph", &path, "--height", "1"]);
    assert_eq!(r["realizability"], "unknown");
    assert_eq!(r["hirsch"], "hirsch");
}

#[test]
fn several_fields() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("rp2.txt");
    std::fs::write(&path, "1 2 3\n1 3 4\n1 4 5\n1 5 6\n1 2 6\n2 3 5\n2 4 5\n2 4 6\n3 4 6\n3 5 6\n").unwrap();
    let (r, _) = json(&["analyze-complex", path.to_str().unwrap(), "--field", "q", "--field", "gf:2"]);
    assert_eq!(r["fields"][0]["regularity"], 2);
    assert_eq!(r["fields"][1]["field"], "gf:2");
    assert_eq!(r["fields"][1]["regularity"], 3);
    assert_eq!(r["fields"][1]["cohen_macaulay"], false);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1 2\n# fine\n1 #x\n").unwrap();
    let o = dualgraph(&["analyze-complex", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(dualgraph(&["analyze-complex", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(dualgraph(&["--field", "gf:4", "generate", "simplex", "2"]).status.code(), Some(1));
    assert_eq!(dualgraph(&["generate", "no-such-family"]).status.code(), Some(1));
    assert_eq!(dualgraph(&["generate", "crosspolytope"]).status.code(), Some(1));
    let cp = generate(dir.path(), &["crosspolytope", "3"], "cp3.txt");
    let o = dualgraph(&["analyze-complex", &cp, "--max-hochster-n", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exponential"));
}

#[test]
fn generated_families_reanalyze_identically() {
    let dir = TempDir::new().unwrap();
    for family in [&["simplex-boundary", "3"][..], &["simplex", "3"], &["crosspolytope", "2"]] {
        let path = generate(dir.path(), family, "f.txt");
        let a = dualgraph(&["--format", "json", "analyze-complex", &path]);
        let b = dualgraph(&["--format", "json", "analyze-complex", &path]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}
