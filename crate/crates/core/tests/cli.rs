//! End-to-end runs of the command line through `cli::run`.

use std::path::{Path, PathBuf};

use mixlayout::cli::run;
use mixlayout::Graph;
use serde_json::Value;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn mixlayout(args: &[&str]) -> Out {
    let (mut o, mut e) = (Vec::new(), Vec::new());
    let full = std::iter::once("mixlayout").chain(args.iter().copied());
    let code = run(full, &mut o, &mut e);
    Out { code, stdout: String::from_utf8(o).unwrap(), stderr: String::from_utf8(e).unwrap() }
}

fn json(out: &Out) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mixlayout-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_complete_graph() {
    let out = mixlayout(&["construct", "--family", "kn", "--n", "25"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc = json(&out);
    let pages = doc["pages"].as_array().unwrap();
    assert_eq!(pages.len(), 10);
    let edges: usize = pages.iter().map(|p| p["edges"].as_array().unwrap().len()).sum();
    assert_eq!(edges, 300);
    assert_eq!(doc["meta"]["family"], "kn");
}

#[test]
fn construct_density_extremal() {
    let out = mixlayout(&["construct", "--family", "gnk", "--n", "25", "--k", "6"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let edges: usize = json(&out)["pages"].as_array().unwrap().iter().map(|p| p["edges"].as_array().unwrap().len()).sum();
    assert_eq!(edges, 232);

    let even = mixlayout(&["construct", "--family", "gnk", "--n", "24", "--k", "6"]);
    assert_eq!(even.code, 2);
    assert!(even.stderr.contains("n must be odd"), "{}", even.stderr);
}

#[test]
fn construct_greedy_is_seed_deterministic() {
    let g = scratch("k7.txt", &Graph::complete(7).to_text());
    let a = mixlayout(&["construct", "--family", "greedy", "--graph", s(&g), "--seed", "9", "-q"]);
    let b = mixlayout(&["construct", "--family", "greedy", "--graph", s(&g), "--seed", "9", "-q"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stderr.is_empty());
}

#[test]
fn output_flag_writes_the_document() {
    let target = scratch("k5.json", "");
    let out = mixlayout(&["--output", s(&target), "construct", "--family", "kn", "--n", "5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written, mixlayout(&["construct", "--family", "kn", "--n", "5"]).stdout);
}

#[test]
fn verify_accepts_rejects_and_reports_parse_errors() {
    let good = mixlayout(&["construct", "--family", "kn", "--n", "5"]).stdout;
    let path = scratch("good.json", &good);
    let out = mixlayout(&["verify", s(&path)]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["ok"], true);

    // a single stack holding the two crossing edges of a 4-cycle order
    let bad = r#"{"n":4,"order":[0,1,2,3],"pages":[{"kind":"stack","edges":[[0,2],[1,3]]}]}"#;
    let out = mixlayout(&["verify", s(&scratch("bad.json", bad))]);
    assert_eq!(out.code, 1);
    let report = json(&out);
    assert_eq!(report["violations"].as_array().unwrap().len(), 1);
    assert_eq!(report["violations"][0]["kind"], "crossing-in-stack");

    let truncated = &good[..good.len() / 2];
    assert_eq!(mixlayout(&["verify", s(&scratch("cut.json", truncated))]).code, 2);
    assert_eq!(mixlayout(&["verify", "/nonexistent/layout.json"]).code, 2);
}

#[test]
fn solve_modes() {
    let k6 = scratch("k6.txt", &Graph::complete(6).to_text());
    let out = mixlayout(&["solve", "exact", "--graph", s(&k6)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["pages"], 2);

    let k8 = scratch("k8.txt", &Graph::complete(8).to_text());
    let out = mixlayout(&["solve", "fixed-order", "--graph", s(&k8)]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["pages"], 3);
    assert_eq!(v["density_lower_bound"], 3);

    let rainbow = scratch("rainbow.txt", &Graph::new(6, [(0, 5), (1, 4), (2, 3)]).unwrap().to_text());
    let out = mixlayout(&["solve", "two-page", "--graph", s(&rainbow)]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["satisfiable"], true);

    let out = mixlayout(&["solve", "two-page", "--graph", s(&k8)]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["satisfiable"], false);

    let k9 = scratch("k9.txt", &Graph::complete(9).to_text());
    let out = mixlayout(&["solve", "fixed-order", "--graph", s(&k9), "--node-limit", "5"]);
    assert_eq!(out.code, 3);
    assert_eq!(json(&out)["status"], "inconclusive");

    let out = mixlayout(&["solve", "exact", "--graph", s(&k6), "--guard", "5"]);
    assert_eq!(out.code, 2);
}

#[test]
fn bounds_and_permcover() {
    let out = mixlayout(&["bounds", "--family", "kn", "--n", "25"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(10), Some(10)));

    let out = mixlayout(&["bounds", "--family", "density", "--n", "8", "--m", "28"]);
    assert_eq!(json(&out)["lower_bound_pages"], 3);
    assert_eq!(mixlayout(&["bounds", "--family", "density", "--n", "8"]).code, 2);

    let out = mixlayout(&["permcover", "--pi", "2,4,1,3", "--k", "2"]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["coverable"], true);
    assert_eq!(mixlayout(&["permcover", "--pi", "2,4,1,3", "--k", "1"]).code, 1);
    assert_eq!(mixlayout(&["permcover", "--pi", "2,2,1", "--k", "2"]).code, 2);
}

#[test]
fn render_outputs() {
    let k66 = mixlayout(&["construct", "--family", "knn-sep", "--n", "6"]).stdout;
    let path = scratch("k66.json", &k66);
    let out = mixlayout(&["render", s(&path)]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.matches("class=\"arc\"").count(), 36);

    let grid = mixlayout(&["render", s(&path), "--grid"]);
    assert_eq!(grid.code, 0);
    assert!(grid.stdout.lines().filter(|l| !l.trim().is_empty()).count() >= 6);

    let empty = scratch("empty.json", r#"{"n":3,"order":[0,1,2],"pages":[]}"#);
    let out = mixlayout(&["render", s(&empty)]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.matches("class=\"arc\"").count(), 0);
    assert_eq!(out.stdout.matches("class=\"spine\"").count(), 1);

    let bad = scratch("bad-render.json", r#"{"n":4,"order":[0,1,2,3],"pages":[{"kind":"queue","edges":[[0,3],[1,2]]}]}"#);
    assert_eq!(mixlayout(&["render", s(&bad)]).code, 1);
}

#[test]
fn help_and_bad_flags() {
    let out = mixlayout(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("permcover"));
    assert_eq!(mixlayout(&["construct", "--family", "nope", "--n", "3"]).code, 2);
    assert_eq!(mixlayout(&["--frobnicate"]).code, 2);
    assert_eq!(mixlayout(&[]).code, 2);
}
