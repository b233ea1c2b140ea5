use std::collections::BTreeMap;

use intertwine::bounds::{parse_facts, EngineConfig, FactBase, FactLine, Interval, Invariant, RuleId, Side};
use intertwine::reproduce::{assert_ring_facts, build_fact_base, data_dir, trace_uses};
use intertwine::ring::GradedAlgebra;
use intertwine::{Error, FieldSpec};
use proptest::prelude::*;

fn shipped() -> FactBase {
    build_fact_base(&data_dir(), EngineConfig::default()).unwrap()
}

fn pack_lines() -> Vec<FactLine> {
    let mut lines = Vec::new();
    for f in ["classical.facts", "higman.facts"] {
        let text = std::fs::read_to_string(data_dir().join("facts").join(f)).unwrap();
        lines.extend(parse_facts(&text).unwrap());
    }
    lines
}

#[test]
fn derive_circle_values() {
    let b = shipped();
    let d = b.derive("circle", Invariant::Itc(2)).unwrap();
    assert_eq!(d.interval, Interval::point(1));
    assert!(trace_uses(d.lower.as_ref().unwrap(), RuleId::R10));
    assert!(trace_uses(d.upper.as_ref().unwrap(), RuleId::R1));
    let d3 = b.derive("circle", Invariant::Itc(3)).unwrap();
    assert_eq!(d3.interval, Interval::point(2));
    let text = d3.lower.unwrap().render();
    assert!(text.contains("R13"), "{text}");
}

#[test]
fn open_case_stays_open() {
    let b = shipped();
    assert_eq!(b.interval("klein", Invariant::Icat), Interval::new(1, Some(2)).unwrap());
    assert_eq!(b.interval("klein", Invariant::Icat).to_string(), "[1, 2]");
    assert_eq!(b.interval("higman", Invariant::Dtc(3)).to_string(), "≥ 4");
}

#[test]
fn contradiction_names_both_sources() {
    let mut b = shipped();
    let err = b.assert_axiom("torus", Invariant::Icat, Interval::point(3), "made-up value").unwrap_err();
    let Error::Contradiction(msg) = err else { panic!("wrong error kind") };
    assert!(msg.contains("made-up value") && msg.contains("R"), "{msg}");
}

#[test]
fn unknown_space_is_reported() {
    assert!(matches!(shipped().derive("nowhere", Invariant::Cat), Err(Error::Unknown(_))));
}

#[test]
fn cyclic_powers_rejected() {
    let mut b = FactBase::default();
    let err = b.load_str("space x: power(y, 2)\nspace y: power(x, 2)\n").unwrap_err();
    assert!(err.to_string().contains("cyclic"));
}

#[test]
fn external_rule_can_be_disabled() {
    let b = build_fact_base(&data_dir(), EngineConfig { external_rules: false, ..EngineConfig::default() }).unwrap();
    assert_eq!(b.interval("higman", Invariant::Dtc(3)), Interval::at_least(1));
    assert!(b.events().iter().all(|e| !matches!(&e.justification, intertwine::bounds::Justification::Rule { rule: RuleId::R16, .. })));
}

#[test]
fn covering_bound() {
    let mut b = FactBase::default();
    b.load_str("space x: covered_by(e, 2)\ne | icat | 1 | 1 | given\ne | iTC | 1 | 1 | given\n").unwrap();
    b.propagate().unwrap();
    assert_eq!(b.interval("x", Invariant::Icat).hi, Some(3));
    assert_eq!(b.interval("x", Invariant::Itc(2)).hi, Some(7));
}

#[test]
fn homotopy_equivalence_transports() {
    let mut b = FactBase::default();
    b.load_str("space x: equivalent(y)\ny | cat | 2 | 2 | given\nx | icat | 2 | inf | given\n").unwrap();
    b.propagate().unwrap();
    assert_eq!(b.interval("x", Invariant::Icat), Interval::point(2));
    assert_eq!(b.interval("y", Invariant::Icat), Interval::point(2));
}

#[test]
fn intervals_only_narrow() {
    let b = shipped();
    let mut last: BTreeMap<(String, Invariant, bool), u32> = BTreeMap::new();
    for e in b.events() {
        let key = (e.space.clone(), e.invariant, e.side == Side::Lo);
        if let Some(prev) = last.get(&key) {
            match e.side {
                Side::Lo => assert!(e.value >= *prev),
                Side::Hi => assert!(e.value <= *prev),
            }
        }
        last.insert(key, e.value);
    }
}

#[test]
fn every_event_replays() {
    let b = shipped();
    for e in b.events() {
        assert_eq!(b.replay_event(e.id).unwrap(), e.value, "event {}", e.id);
    }
}

fn fixpoint(lines: Vec<FactLine>, rings: &[(&str, GradedAlgebra)]) -> BTreeMap<(String, Invariant), Interval> {
    let mut b = FactBase::default();
    b.load_lines(lines).unwrap();
    for (name, r) in rings {
        assert_ring_facts(&mut b, name, r).unwrap();
    }
    b.propagate().unwrap();
    b.known().into_iter().map(|(s, i)| {
        let iv = b.interval(&s, i);
        ((s, i), iv)
    }).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn order_independent(seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let rings = vec![
            ("circle", GradedAlgebra::sphere(1, FieldSpec::Rationals)),
            ("sphere2", GradedAlgebra::sphere(2, FieldSpec::Rationals)),
        ];
        let lines = pack_lines();
        let (spaces, bounds): (Vec<_>, Vec<_>) = lines.into_iter().partition(|l| matches!(l, FactLine::Space(_)));
        let reference = fixpoint(spaces.iter().cloned().chain(bounds.iter().cloned()).collect(), &rings);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut shuffled = bounds.clone();
        shuffled.shuffle(&mut rng);
        let mut sp = spaces.clone();
        sp.shuffle(&mut rng);
        let mut rs = rings.clone();
        rs.shuffle(&mut rng);
        let got = fixpoint(sp.into_iter().chain(shuffled).collect(), &rs);
        prop_assert_eq!(got, reference);
    }
}
