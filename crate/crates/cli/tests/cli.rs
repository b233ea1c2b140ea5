use std::path::PathBuf;
use std::process::{Command, Output};

use intertwine::field::q;
use intertwine::navigate::Navigation;
use intertwine::ring::RingFile;
use intertwine::strand::{enumerate_resolvers, ResolverReport};
use intertwine::BranchingDiagram;

fn data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intertwine"))
        .args(args)
        .env("ITC_DATA_DIR", data())
        .current_dir(std::env::temp_dir())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cuplen_torus() {
    let o = run(&["cuplen", "torus.cx", "--field", "q"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn resolve_example1() {
    let o = run(&["resolve", "example1.bd", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("2 resolvers (polytope dim 1)"));
    assert!(stdout(&o).contains("1/2 (0.5)·(a,a2)"));
}

#[test]
fn resolve_json_round_trips() {
    let o = run(&["resolve", "example3.bd", "--n", "4", "--format", "json"]);
    assert!(o.status.success());
    let parsed: ResolverReport = serde_json::from_str(&stdout(&o)).unwrap();
    let d = BranchingDiagram::load(data().join("diagrams/example3.bd")).unwrap();
    assert_eq!(parsed, enumerate_resolvers(&d, 4).unwrap());
    for r in &parsed.vertex_resolvers {
        d.check_resolver(r).unwrap();
    }
}

#[test]
fn cohomology_json_round_trips() {
    let o = run(&["cohomology", "genus2.cx", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["betti"], serde_json::json!([1, 4, 1]));
    let ring: RingFile = serde_json::from_value(v["ring"].clone()).unwrap();
    let a = ring.into_algebra().unwrap();
    assert_eq!(intertwine::cup_length(&a), 2);
}

#[test]
fn navigate_json_round_trips() {
    let o = run(&["navigate", "--points", "0", "1/4", "2/3", "--step", "1/8", "--format", "json"]);
    assert!(o.status.success());
    let nav: Navigation = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(nav.measures.len(), 9);
    assert!(nav.measures[4].is_dirac());
    assert_eq!(nav.diagram.measure_at(&q(1, 2)).unwrap(), nav.measures[4]);
}

#[test]
fn zcl_and_minsupport() {
    assert_eq!(stdout(&run(&["zcl", "wedge2.cx"])), "2\n");
    assert_eq!(stdout(&run(&["zcl", "sphere2.cx", "--m", "3"])), "3\n");
    assert_eq!(stdout(&run(&["minsupport", "example2.bd"])), "3\n");
    assert_eq!(stdout(&run(&["cuplen", "rp2.cx", "--field", "z2"])), "2\n");
}

#[test]
fn bounds_report() {
    let o = run(&["bounds", "--space", "torus", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["invariant"] == "iTC").unwrap();
    assert_eq!(row["interval"], serde_json::json!({"lo": 2, "hi": 2}));
    let text = stdout(&run(&["bounds", "--space", "higman"]));
    assert!(text.contains("higman: iTC_5 = 1 < dTC_5 ≥ 8"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["cuplen", "missing.cx"]).status.code(), Some(1));
    assert_eq!(run(&["resolve", "example4.bd", "--max-nodes", "5"]).status.code(), Some(2));
    let bad = std::env::temp_dir().join("intertwine-contradiction.facts");
    std::fs::write(&bad, "torus | icat | 3 | 3 | deliberately wrong\n").unwrap();
    let o = run(&["bounds", "--facts", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("deliberately wrong"));
    assert_eq!(run(&["zcl", "torus.cx", "--m", "1"]).status.code(), Some(1));
    assert_eq!(run(&["navigate", "--points", "0", "1/2", "--step", "1/3x"]).status.code(), Some(1));
}

#[test]
fn inputs_untouched_and_output_deterministic() {
    let path = data().join("diagrams/example4.bd");
    let before = std::fs::read(&path).unwrap();
    let a = stdout(&run(&["resolve", "example4.bd", "--n", "4"]));
    let b = stdout(&run(&["resolve", "example4.bd", "--n", "4"]));
    assert_eq!(a, b);
    assert!(a.starts_with("18 resolvers (polytope dim 12)"));
    assert_eq!(std::fs::read(&path).unwrap(), before);
}

#[test]
fn verify_paper_table() {
    let o = run(&["verify-paper", "--instances", "400"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 10);
    assert!(text.ends_with("10/10 criteria passed\n"));
}
