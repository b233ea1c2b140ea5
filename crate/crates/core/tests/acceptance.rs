//! Acceptance suite: one PASS/FAIL line per criterion.

use intertwine::reproduce::{data_dir, run_criterion, SuiteConfig};

fn criterion(id: u8) {
    let r = run_criterion(id, &data_dir(), &SuiteConfig::default());
    println!("criterion {:>2} {}: {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title);
    for c in &r.checks {
        println!("    [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.label);
    }
    if let Some(e) = &r.error {
        println!("    error: {e}");
    }
    assert!(r.passed, "criterion {id} failed: {:?}", r.failures().map(|c| &c.label).collect::<Vec<_>>());
}

#[test]
fn criterion_01_cup_lengths() {
    criterion(1);
}

#[test]
fn criterion_02_zero_divisor_cup_lengths() {
    criterion(2);
}

#[test]
fn criterion_03_engine_values() {
    criterion(3);
}

#[test]
fn criterion_04_higman_separation() {
    criterion(4);
}

#[test]
fn criterion_05_resolver_counts() {
    criterion(5);
}

#[test]
fn criterion_06_pushforward_well_defined() {
    criterion(6);
}

#[test]
fn criterion_07_symmetric_trace() {
    criterion(7);
}

#[test]
fn criterion_08_support_continuity() {
    criterion(8);
}

#[test]
fn criterion_09_navigation_formulas() {
    criterion(9);
}

#[test]
fn criterion_10_metric_suites() {
    criterion(10);
}
