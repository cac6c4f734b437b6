//! End-to-end checks of the command-line interface: output text, JSON
//! schema, exit codes, and determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_qarr")
}

fn fixtures() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qarr-cli-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("k2.edges"), "1 2\n").unwrap();
    std::fs::write(dir.join("k3.edges"), "1 2\n2 3\n1 3\n").unwrap();
    std::fs::write(dir.join("c4.edges"), "1 2\n2 3\n3 4\n1 4\n").unwrap();
    std::fs::write(dir.join("empty5.edges"), "# five isolated vertices\n5\n").unwrap();
    std::fs::write(dir.join("big7.edges"), "1 2\n7\n").unwrap();
    std::fs::write(dir.join("bad.edges"), "0 1\n").unwrap();
    std::fs::write(
        dir.join("tri_boundary.json"),
        r#"{"n": 3, "facets": [[1,2],[2,3],[1,3]]}"#,
    )
    .unwrap();
    std::fs::write(
        dir.join("delta53.json"),
        r#"{"n": 5, "facets": [[1,2,3],[1,2,4],[1,2,5],[1,3,4],[1,3,5],[1,4,5],[2,3,4],[2,3,5],[2,4,5],[3,4,5]]}"#,
    )
    .unwrap();
    dir
}

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn charpoly_examples() {
    let dir = fixtures();
    let out = run(&dir, &["charpoly", "--graph", "k2.edges", "--sgq", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(t-1)(t-3)");

    let out = run(&dir, &["charpoly", "--graph", "empty5.edges", "--monomial-r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(t-1)^5");

    let out = run(&dir, &["charpoly", "--complex", "delta53.json", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(t-1)(t-2)(t-4)(t-8)(t-10)");
}

#[test]
fn charpoly_oracles_and_json() {
    let dir = fixtures();
    let out = run(
        &dir,
        &["charpoly", "--graph", "k3.edges", "--qdef", "--q", "2", "--oracle"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(t-1)(t-2)(t-4)"));
    assert!(text.contains("PASS oracle subsets"));
    assert!(text.contains("PASS oracle points k=1"));

    let out = run(
        &dir,
        &["charpoly", "--graph", "k3.edges", "--qdef", "--q", "2", "--json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["q"], 2);
    assert_eq!(doc["hyperplanes"], 7);
    assert_eq!(doc["split"], "(t-1)(t-2)(t-4)");
}

#[test]
fn deterministic_output() {
    let dir = fixtures();
    let args = ["charpoly", "--complex", "tri_boundary.json", "--q", "3", "--oracle"];
    let a = run(&dir, &args);
    let b = run(&dir, &args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn freeness_examples() {
    let dir = fixtures();
    let out = run(&dir, &["freeness", "--graph", "k3.edges", "--monomial-r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("exponents: (1,3,5)"));
    assert!(text.contains("PASS saito"));
    assert!(text.contains("PASS terao"));

    let out = run(&dir, &["freeness", "--graph", "c4.edges", "--graphic"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("not chordal"));

    let out = run(&dir, &["freeness", "--graph", "k2.edges", "--qdef", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("exponents: (1,2)"));
}

#[test]
fn verify_examples() {
    let dir = fixtures();
    let out = run(&dir, &["verify", "qdelcon", "--complex", "tri_boundary.json", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS qdelcon")));

    let out = run(
        &dir,
        &["verify", "congruence", "--complex", "delta53.json", "--q", "3", "--k", "1"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS congruence"));

    let out = run(&dir, &["verify", "qdelcon", "--graph", "k3.edges", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&dir, &["verify", "supersolvable", "--graph", "k3.edges", "--qdef", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&dir, &["verify", "supersolvable", "--graph", "c4.edges", "--graphic"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL supersolvable"));
}

#[test]
fn reproduce_examples() {
    let dir = fixtures();
    let out = run(&dir, &["reproduce", "skeleton", "--l", "3", "--q", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("match=yes"));

    let out = run(&dir, &["reproduce", "exponents-b", "--l", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("exponents=(1,3,5)"));
}

#[test]
fn exit_codes() {
    let dir = fixtures();
    // Parse failures: malformed file, unknown flag, missing input.
    let out = run(&dir, &["charpoly", "--graph", "bad.edges"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&dir, &["charpoly", "--graph", "missing.edges"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&dir, &["charpoly", "--graph", "k2.edges", "--sgq"]);
    assert_eq!(out.status.code(), Some(2), "missing required field");
    let out = run(&dir, &["nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    // Resource bound: lattice dimension cap.
    let out = run(&dir, &["charpoly", "--graph", "big7.edges", "--graphic"]);
    assert_eq!(out.status.code(), Some(3));

    // Help is informational.
    let out = run(&dir, &["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
