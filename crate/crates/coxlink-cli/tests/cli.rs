//! End-to-end tests of the `coxlink` binary: golden reports for the
//! shipped documents, exit codes, and output formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coxlink"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn golden_reports_reproduce() {
    let dir = data("");
    let mut checked = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("diagram") {
            continue;
        }
        let out = run(&["analyze", path.to_str().unwrap(), "--format", "machine"]);
        assert!(out.status.success(), "{}: {}", path.display(), stderr(&out));
        let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let golden_path = dir.join("golden").join(format!(
            "{}.analysis.json",
            path.file_stem().unwrap().to_str().unwrap()
        ));
        let golden: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&golden_path).unwrap()).unwrap();
        assert_eq!(got, golden, "{}", path.display());
        checked += 1;
    }
    assert_eq!(checked, 5, "all shipped diagram documents checked");
}

#[test]
fn analyze_text_output() {
    let out = run(&["analyze", data("triangle-with-tail.diagram").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("coxeter type: yes"));
    assert!(text.contains("mahler measure: 2.36921"));
    assert!(text.contains("classification: Higher"));
    assert!(text.contains("h* = -c: verified"));
}

#[test]
fn exit_codes() {
    // 1: usage
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    // 1: parse error
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.diagram");
    std::fs::write(&bad, "this is not a document\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    // 1: missing file
    assert_eq!(run(&["analyze", "/no/such/file"]).status.code(), Some(1));
    // 2: validation (not a matching)
    let invalid = tmp.path().join("invalid.diagram");
    std::fs::write(&invalid, "version 1\ntype diagram\npoints 4\nchord 0 1\nchord 1 2\n")
        .unwrap();
    assert_eq!(run(&["analyze", invalid.to_str().unwrap()]).status.code(), Some(2));
    // 2: --require-coxeter on a non-Coxeter ordering (cyclic square)
    let cyclic = tmp.path().join("cyclic-square.diagram");
    std::fs::write(
        &cyclic,
        "version 1\ntype diagram\npoints 8\nchord 0 3\nchord 2 5\nchord 4 7\nchord 6 1\n",
    )
    .unwrap();
    let out = run(&["analyze", cyclic.to_str().unwrap(), "--require-coxeter"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    // but it analyzes fine without the flag, comparison skipped
    let out = run(&["analyze", cyclic.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("h* = -c: skipped"));
    // 3: non-realizable with obstruction witness
    let out = run(&["realize", data("cube.graph").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("non-realizable"));
    assert!(stderr(&out).contains("triple"));
    // 4: budget exhausted before the search is conclusive
    let out = run(&[
        "realize",
        data("cube.graph").to_str().unwrap(),
        "--method",
        "brute",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(4), "{}", stderr(&out));
    // 2: wrong explicit method
    let out = run(&[
        "realize",
        data("a4-path.graph").to_str().unwrap(),
        "--method",
        "cycle",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn realize_path_and_star() {
    let out = run(&["realize", data("a4-path.graph").to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("type diagram"));
    assert_eq!(text.matches("chord ").count(), 4);

    // star 2 3 7 realization analyzes to Lehmer's polynomial
    let out = run(&["realize", data("star-2-3-7.graph").to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let tmp = tempfile::tempdir().unwrap();
    let doc = tmp.path().join("e10.diagram");
    std::fs::write(&doc, stdout(&out)).unwrap();
    let out = run(&["analyze", doc.to_str().unwrap(), "--format", "machine"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Lehmer's measure; the realized ordering may land on either of the
    // sign-twin polynomials q(t), q(-t), which share it.
    let mu = v["mahler_measure"].as_f64().unwrap();
    assert!((mu - 1.176_280_818_259_917).abs() < 1e-6, "mu = {mu}");
    assert_eq!(v["classification"], "higher");
    assert_eq!(v["lehmer_gate"], "pass");
}

#[test]
fn orderings_of_pentagon() {
    let out = run(&["orderings", data("pentagon.diagram").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("2 Coxeter-type ordering orbit(s)"));
    let out = run(&[
        "orderings",
        data("pentagon.diagram").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn lehmer_scan_small_and_deterministic() {
    let a = run(&["lehmer-scan", "3"]);
    assert!(a.status.success());
    assert!(stdout(&a).contains("no measure above 1 found"));
    let b = run(&["lehmer-scan", "3"]);
    assert_eq!(stdout(&a), stdout(&b), "byte-identical across runs");
    let c = run(&["lehmer-scan", "4"]);
    assert!(stdout(&c).contains("minimal nontrivial measure: 2.36921"));
}

#[test]
fn render_svg() {
    let out = run(&["render", data("pentagon.diagram").to_str().unwrap()]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("class=\"chord\"").count(), 5);
    assert_eq!(svg.matches("class=\"endpoint\"").count(), 10);

    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("pentagon.svg");
    let out = run(&[
        "render",
        data("pentagon.diagram").to_str().unwrap(),
        "--svg",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().contains("</svg>"));
}
