//! End-to-end reproduction suite over the shipped data directory.
//!
//! Each criterion bundles a group of exact checks; [`run_all`] evaluates all ten
//! and never panics, so callers can print a pass/fail table.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::bounds::{EngineConfig, FactBase, Interval, Invariant, Justification, RuleId, Trace};
use crate::complex::{cohomology_ring, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{q, FieldSpec, Q};
use crate::measure::{hausdorff_distance, lp_distance, FiniteMeasure, FiniteSet, MetricPoint, MetricSpace, WeightedGraph};
use crate::navigate::{join_weights, sequential_compose, theta_concat, CircleNavigator, SampledPath, TimestampScheme};
use crate::ring::{
    cup_length_search, has_nonzero_positive_degree, zero_divisor_search, GradedAlgebra, SearchConfig,
};
use crate::strand::{
    enumerate_resolvers, max_support_step, min_support, pushforward, support3_counterexample_check,
    support_continuity_report, symmetric_trace, uniform_times, BranchingDiagram, Resolver,
};

/// Environment variable overriding the data directory.
pub const DATA_ENV: &str = "ITC_DATA_DIR";

/// Metric-axiom tolerance.
pub const METRIC_TOL: f64 = 2e-9;

/// `$ITC_DATA_DIR`, or the `data/` directory of the source tree.
pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_ENV) {
        Some(p) if !p.is_empty() => PathBuf::from(p),
        _ => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random instances per metric-axiom suite.
    pub metric_instances: usize,
    /// Random Dirac pairs checked against the brute-force distance.
    pub oracle_pairs: usize,
    /// Random point triples for sequential circle navigation.
    pub triples: usize,
    /// Random rational probes per join-weight order.
    pub probes: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0x1d1a_2024, metric_instances: 10_000, oracle_pairs: 100, triples: 50, probes: 1000 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

impl CriterionResult {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub const TITLES: [&str; 10] = [
    "rational cup lengths of triangulated surfaces",
    "rational zero-divisor cup lengths",
    "bounds engine: category and complexity values",
    "Higman separation iTC_m < dTC_m",
    "resolver counts and minimal supports",
    "pushforward agrees across resolvers",
    "symmetric trace: support 2 invariant, support 3 not",
    "support continuity and a non-resolvable jump",
    "join weights, timestamp breakpoints, circle composition",
    "Lévy–Prokhorov and Hausdorff metric suites",
];

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.0.push(Check { label: label.into(), passed });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        let passed = got == want;
        self.check(format!("{label}: got {got:?}, want {want:?}"), passed);
    }
}

/// Runs one criterion (`1..=10`).
pub fn run_criterion(id: u8, data: &Path, cfg: &SuiteConfig) -> CriterionResult {
    let mut c = Checks::default();
    let out = match id {
        1 => cup_lengths(data, &mut c),
        2 => zero_divisor_lengths(data, &mut c),
        3 => engine_values(data, &mut c),
        4 => higman(data, &mut c),
        5 => resolver_counts(data, &mut c),
        6 => well_defined(data, &mut c),
        7 => trace_dichotomy(data, &mut c),
        8 => continuity(data, &mut c),
        9 => navigation(cfg, &mut c),
        10 => metric_suites(cfg, &mut c),
        _ => Err(Error::Unknown(format!("criterion {id}"))),
    };
    let error = out.err().map(|e| e.to_string());
    let title = TITLES.get(usize::from(id).wrapping_sub(1)).copied().unwrap_or("unknown").to_string();
    let passed = error.is_none() && !c.0.is_empty() && c.0.iter().all(|x| x.passed);
    CriterionResult { id, title, passed, checks: c.0, error }
}

pub fn run_all(data: &Path, cfg: &SuiteConfig) -> Vec<CriterionResult> {
    (1..=10).map(|i| run_criterion(i, data, cfg)).collect()
}

fn complex(data: &Path, name: &str) -> Result<SimplicialComplex> {
    SimplicialComplex::load(data.join("complexes").join(format!("{name}.cx")))
}

fn diagram(data: &Path, name: &str) -> Result<BranchingDiagram> {
    BranchingDiagram::load(data.join("diagrams").join(format!("{name}.bd")))
}

fn files_with(dir: &Path, ext: &str) -> Result<Vec<PathBuf>> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == ext))
        .collect();
    v.sort();
    Ok(v)
}

fn stem(p: &Path) -> String {
    p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// All corpus diagrams, by file stem.
pub fn corpus_diagrams(data: &Path) -> Result<Vec<(String, BranchingDiagram)>> {
    files_with(&data.join("diagrams"), "bd")?
        .into_iter()
        .map(|p| Ok((stem(&p), BranchingDiagram::load(&p)?)))
        .collect()
}

/// Asserts computed `cl`, `zcl` and positive-degree cohomology facts for one ring.
pub fn assert_ring_facts(base: &mut FactBase, space: &str, ring: &GradedAlgebra) -> Result<()> {
    let f = ring.field;
    let cl = cup_length_search(ring, SearchConfig::default());
    let iv = |len: usize, truncated: bool| {
        let v = len as u32;
        if truncated {
            Interval::at_least(v)
        } else {
            Interval::point(v)
        }
    };
    base.assert_computed(space, Invariant::Cl(f), iv(cl.length, cl.truncated), "cup length of the cohomology ring")?;
    let zcl = zero_divisor_search(ring, 2, SearchConfig::default())?;
    base.assert_computed(
        space,
        Invariant::Zcl(2, f),
        iv(zcl.length, zcl.truncated),
        "cup length of the diagonal kernel",
    )?;
    let h = u32::from(has_nonzero_positive_degree(ring).is_some());
    base.assert_computed(space, Invariant::HPositive(f), Interval::point(h), "nonzero positive-degree cohomology")?;
    Ok(())
}

/// Complexes and rings from `data`, with every `.facts` pack merged, propagated.
pub fn build_fact_base(data: &Path, config: EngineConfig) -> Result<FactBase> {
    let mut base = FactBase::new(config);
    for p in files_with(&data.join("facts"), "facts")? {
        base.load_file(&p)?;
    }
    for p in files_with(&data.join("complexes"), "cx")? {
        let k = SimplicialComplex::load(&p)?;
        let ring = cohomology_ring(&k, FieldSpec::Rationals)?;
        assert_ring_facts(&mut base, &stem(&p), &ring)?;
    }
    for p in files_with(&data.join("rings"), "ring")? {
        let ring = GradedAlgebra::load(&p)?;
        assert_ring_facts(&mut base, &stem(&p), &ring)?;
    }
    base.propagate()?;
    Ok(base)
}

/// Whether any step of the trace applies `rule`.
pub fn trace_uses(t: &Trace, rule: RuleId) -> bool {
    matches!(&t.event.justification, Justification::Rule { rule: r, .. } if *r == rule)
        || t.premises.iter().any(|p| trace_uses(p, rule))
}

fn cup_lengths(data: &Path, c: &mut Checks) -> Result<()> {
    for (name, want) in [("circle", 1), ("sphere2", 1), ("torus", 2), ("genus2", 2)] {
        let ring = cohomology_ring(&complex(data, name)?, FieldSpec::Rationals)?;
        let r = cup_length_search(&ring, SearchConfig::default());
        c.check(format!("{name}: search complete"), !r.truncated);
        c.eq(&format!("cl_Q({name})"), r.length, want);
    }
    Ok(())
}

fn zero_divisor_lengths(data: &Path, c: &mut Checks) -> Result<()> {
    for (name, want) in [("circle", 1), ("sphere2", 2), ("wedge2", 2), ("torus", 2)] {
        let ring = cohomology_ring(&complex(data, name)?, FieldSpec::Rationals)?;
        let r = zero_divisor_search(&ring, 2, SearchConfig::default())?;
        c.check(format!("{name}: search complete"), !r.truncated);
        c.eq(&format!("zcl_Q({name})"), r.length, want);
    }
    Ok(())
}

fn engine_values(data: &Path, c: &mut Checks) -> Result<()> {
    let base = build_fact_base(data, EngineConfig::default())?;
    let p2 = Interval::point(2);
    for x in ["torus", "genus2", "s2xs2", "s3xs3", "cp2"] {
        c.eq(&format!("icat({x})"), base.interval(x, Invariant::Icat), p2);
    }
    for (x, inv, want) in [
        ("sphere2", Invariant::Itc(2), p2),
        ("circle", Invariant::Itc(2), Interval::point(1)),
        ("torus", Invariant::Itc(2), p2),
        ("circle", Invariant::Itc(3), p2),
        ("wedge2", Invariant::Itc(2), p2),
        ("s3xs3", Invariant::Itc(2), p2),
        ("point", Invariant::Itc(5), Interval::point(0)),
        ("klein", Invariant::Icat, Interval::new(1, Some(2))?),
    ] {
        c.eq(&format!("{inv}({x})"), base.interval(x, inv), want);
    }
    let torus = base.derive("torus", Invariant::Itc(2))?;
    c.check(
        "iTC(torus) upper bound goes through the topological-group rule",
        torus.upper.as_ref().is_some_and(|t| trace_uses(t, RuleId::R6)),
    );
    let c3 = base.derive("circle", Invariant::Itc(3))?;
    c.check(
        "iTC_3(circle) lower bound goes through the positive-cohomology rule",
        c3.lower.as_ref().is_some_and(|t| trace_uses(t, RuleId::R13)),
    );
    let mut replay_ok = true;
    for (x, inv) in base.known() {
        replay_ok &= base.replay(&x, inv)? == base.interval(&x, inv);
    }
    c.check("every stored bound replays", replay_ok);
    Ok(())
}

fn higman(data: &Path, c: &mut Checks) -> Result<()> {
    let base = build_fact_base(data, EngineConfig::default())?;
    let seps = base.separations();
    for m in 2..=5u32 {
        c.eq(&format!("iTC_{m}(higman)"), base.interval("higman", Invariant::Itc(m)), Interval::point(1));
        c.eq(
            &format!("dTC_{m}(higman)"),
            base.interval("higman", Invariant::Dtc(m)),
            Interval::at_least(2 * (m - 1)),
        );
        c.check(
            format!("separation flagged for m = {m}"),
            seps.iter().any(|s| s.space == "higman" && s.m == m),
        );
    }
    let off = build_fact_base(data, EngineConfig { external_rules: false, ..EngineConfig::default() })?;
    c.check(
        "no separation without the external rule",
        off.separations().iter().all(|s| s.space != "higman"),
    );
    Ok(())
}

fn exact_weights(d: &BranchingDiagram, rs: &[Resolver]) -> bool {
    rs.iter().all(|r| d.check_resolver(r).is_ok() && r.weights.values().sum::<Q>() == Q::one())
}

fn resolver_counts(data: &Path, c: &mut Checks) -> Result<()> {
    let e1 = diagram(data, "example1")?;
    for n in [2, 3] {
        let r = enumerate_resolvers(&e1, n)?;
        c.eq(&format!("example1 resolvers at n = {n}"), r.vertex_resolvers.len(), 2);
        c.eq(&format!("example1 polytope dimension at n = {n}"), r.polytope_dimension, 1);
        c.check(format!("example1 weights exact at n = {n}"), exact_weights(&e1, &r.vertex_resolvers));
    }
    let e2 = diagram(data, "example2")?;
    c.eq("example2 resolvers at n = 2", enumerate_resolvers(&e2, 2)?.vertex_resolvers.len(), 0);
    c.eq("example2 min_support", min_support(&e2)?, 3);
    let e3 = diagram(data, "example3")?;
    c.eq("example3 min_support", min_support(&e3)?, 4);
    let e4 = diagram(data, "example4")?;
    let r4 = enumerate_resolvers(&e4, 4)?;
    let n4 = r4.vertex_resolvers.len();
    c.check(format!("example4 has {n4} ≥ 12 vertex resolvers at n = 4"), n4 >= 12);
    c.check("example4 weights exact", exact_weights(&e4, &r4.vertex_resolvers));
    Ok(())
}

fn well_defined(data: &Path, c: &mut Checks) -> Result<()> {
    let times = uniform_times(100);
    for (name, d) in corpus_diagrams(data)? {
        let rs = enumerate_resolvers(&d, 4)?.vertex_resolvers;
        let expected = times.iter().map(|t| d.measure_at(t)).collect::<Result<Vec<FiniteMeasure>>>()?;
        let mut ok = !rs.is_empty();
        for r in &rs {
            ok &= pushforward(r, &d, &times)? == expected;
        }
        c.check(format!("{name}: {} resolvers push forward to one path at 101 times", rs.len()), ok);
    }
    Ok(())
}

fn trace_dichotomy(data: &Path, c: &mut Checks) -> Result<()> {
    let times = uniform_times(100);
    for (name, d) in corpus_diagrams(data)? {
        let rs = enumerate_resolvers(&d, 2)?.vertex_resolvers;
        let traces = rs.iter().map(|r| symmetric_trace(r, &d, &times)).collect::<Result<Vec<_>>>()?;
        let same = traces.windows(2).all(|w| w[0] == w[1]);
        c.check(format!("{name}: {} support-2 resolvers share one symmetric trace", rs.len()), same);
    }
    let d = diagram(data, "counterexample")?;
    let rs = enumerate_resolvers(&d, 3)?.vertex_resolvers;
    c.check("counterexample: support-3 collapse detected", support3_counterexample_check(&d, &rs, &times)?);
    Ok(())
}

/// Supports of the sampled path `½δ_0 + ½δ_1` for `t < ½`, then `¼δ_{3/10} + ¾δ_{7/10}`.
/// No resolver produces it: the support jumps at `t = ½`.
pub fn engineered_jump_supports(steps: usize) -> Vec<FiniteSet> {
    uniform_times(steps)
        .into_iter()
        .map(|t| {
            if t < q(1, 2) {
                FiniteSet::new([MetricPoint::real(Q::zero()), MetricPoint::real(Q::one())])
            } else {
                FiniteSet::new([MetricPoint::real(q(3, 10)), MetricPoint::real(q(7, 10))])
            }
        })
        .collect()
}

fn continuity(data: &Path, c: &mut Checks) -> Result<()> {
    let d = diagram(data, "example1")?;
    let r = enumerate_resolvers(&d, 2)?
        .vertex_resolvers
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidDiagram(vec!["example1 has no resolver".into()]))?;
    let rows = support_continuity_report(&r, &d, &[q(1, 100), q(1, 200)])?;
    let (a, b) = (rows[0].max_step, rows[1].max_step);
    c.check(format!("example1 step {a:.6} → {b:.6} at least halves (10% slack)"), a > 0.0 && b <= 0.5 * a * 1.1);
    let line = MetricSpace::real_line();
    let j1 = max_support_step(&line, &engineered_jump_supports(100))?;
    let j2 = max_support_step(&line, &engineered_jump_supports(200))?;
    c.check(format!("jump path step {j1:.3} ≥ 0.2"), j1 >= 0.2);
    c.check(format!("jump path step {j2:.3} does not shrink"), j2 >= 0.2 && j2 >= 0.9 * j1);
    Ok(())
}

fn random_rational(rng: &mut StdRng, den: i64) -> Q {
    q(rng.gen_range(0..=den), den)
}

fn navigation(cfg: &SuiteConfig, c: &mut Checks) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for m in 2..=8usize {
        let mut nodes_ok = true;
        for i in 0..m {
            let w = join_weights(m, &q(i as i64, (m - 1) as i64));
            nodes_ok &= w.iter().enumerate().all(|(j, v)| *v == if i == j { Q::one() } else { Q::zero() });
        }
        c.check(format!("w_j(t_i) = δ_ij for m = {m}"), nodes_ok);
        let mut sum_ok = true;
        for _ in 0..cfg.probes {
            let den = rng.gen_range(1..=1000);
            let w = join_weights(m, &random_rational(&mut rng, den));
            sum_ok &= w.iter().sum::<Q>() == Q::one() && w.iter().all(|v| *v >= Q::zero());
        }
        c.check(format!("Σ w_i = 1 on {} probes for m = {m}", cfg.probes), sum_ok);
    }
    let mut theta_ok = true;
    for pieces in 1..=7usize {
        let mut schemes = vec![TimestampScheme::uniform(pieces)];
        let mut a: Vec<Q> = (0..pieces - 1).map(|_| q(rng.gen_range(1001..=20000), 1000)).collect();
        a.sort_by(|x, y| y.cmp(x));
        a.dedup();
        if a.len() == pieces - 1 {
            schemes.push(TimestampScheme::new(a)?);
        }
        for s in schemes {
            theta_ok &= theta_identities(&s, &mut rng)?;
        }
    }
    c.check("theta concatenation breakpoint identities", theta_ok);
    let mut min_ok = 0;
    for _ in 0..cfg.triples {
        let pts: Vec<MetricPoint> = (0..3).map(|_| MetricPoint::turns(q(rng.gen_range(0..360), 360))).collect();
        let d = sequential_compose(&CircleNavigator, &pts)?;
        if min_support(&d)? == 2 {
            min_ok += 1;
        }
    }
    c.eq("circle triples with min_support 2", min_ok, cfg.triples);
    Ok(())
}

fn theta_identities(s: &TimestampScheme, rng: &mut StdRng) -> Result<bool> {
    let m = s.pieces();
    let b = s.breakpoints();
    let mut ok = s.local_parameter(&Q::zero()) == (0, Q::zero()) && s.local_parameter(&Q::one()) == (m - 1, Q::one());
    for i in 0..m {
        ok &= s.piece_parameter(i, &b[i]).is_zero() && s.piece_parameter(i, &b[i + 1]).is_one();
    }
    let line = MetricSpace::real_line();
    let mut pts: Vec<Q> = (0..=m).map(|_| random_rational(rng, 16)).collect();
    pts[0] = Q::zero();
    let paths = pts
        .windows(2)
        .map(|w| {
            SampledPath::new(
                line.clone(),
                vec![
                    crate::strand::Sample(Q::zero(), MetricPoint::real(w[0].clone())),
                    crate::strand::Sample(Q::one(), MetricPoint::real(w[1].clone())),
                ],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let cat = theta_concat(&paths, s)?;
    for (i, t) in b.iter().enumerate() {
        ok &= cat.at(t)? == MetricPoint::real(pts[i].clone());
    }
    Ok(ok)
}

fn random_point(rng: &mut StdRng, space: &MetricSpace) -> MetricPoint {
    match space {
        MetricSpace::Circle => MetricPoint::turns(q(rng.gen_range(0..12), 12)),
        MetricSpace::Graph(g) => {
            if rng.gen_bool(0.5) {
                MetricPoint::Vertex(rng.gen_range(0..g.vertex_count))
            } else {
                let e = rng.gen_range(0..g.edges.len());
                MetricPoint::Edge(e, q(rng.gen_range(1..4), 4))
            }
        }
        MetricSpace::Euclidean { dim } => {
            MetricPoint::Euclidean((0..*dim).map(|_| q(rng.gen_range(0..=10), 8)).collect())
        }
    }
}

/// Random probability measure with at most `max_atoms` atoms.
pub fn random_measure(rng: &mut StdRng, space: &MetricSpace, max_atoms: usize) -> FiniteMeasure {
    let n = rng.gen_range(1..=max_atoms);
    let pts: Vec<(MetricPoint, i64)> = (0..n).map(|_| (random_point(rng, space), rng.gen_range(1..=6))).collect();
    let total: i64 = pts.iter().map(|p| p.1).sum();
    FiniteMeasure::canonicalize(pts.into_iter().map(|(p, w)| (p, q(w, total))).collect())
}

fn random_set(rng: &mut StdRng, space: &MetricSpace, max_points: usize) -> FiniteSet {
    let n = rng.gen_range(1..=max_points);
    FiniteSet::new((0..n).map(|_| random_point(rng, space)))
}

/// Spaces used by the randomized suites.
pub fn test_spaces() -> Vec<MetricSpace> {
    let square = WeightedGraph::new(
        4,
        vec![(0, 1, q(1, 2)), (1, 2, q(1, 3)), (2, 3, q(1, 2)), (3, 0, Q::one())],
    )
    .expect("connected");
    vec![
        MetricSpace::real_line(),
        MetricSpace::Euclidean { dim: 2 },
        MetricSpace::Circle,
        MetricSpace::Graph(square),
    ]
}

/// Distance by exhaustive search over subsets and critical radii.
///
/// On each interval between consecutive pairwise distances the closed
/// neighborhoods are fixed, so the infimum there is `max(radius, worst mass gap)`.
pub fn lp_bruteforce(space: &MetricSpace, mu: &FiniteMeasure, nu: &FiniteMeasure) -> f64 {
    one_sided_bruteforce(space, mu, nu).max(one_sided_bruteforce(space, nu, mu))
}

fn one_sided_bruteforce(space: &MetricSpace, mu: &FiniteMeasure, nu: &FiniteMeasure) -> f64 {
    let a = mu.atoms();
    let b = nu.atoms();
    let d: Vec<Vec<f64>> = a.iter().map(|(x, _)| b.iter().map(|(y, _)| space.distance(x, y)).collect()).collect();
    let mut radii: Vec<f64> = d.iter().flatten().copied().filter(|r| *r < 1.0).collect();
    radii.push(0.0);
    radii.sort_by(|x, y| x.total_cmp(y));
    radii.dedup();
    let mut best = 1.0f64;
    for (k, &r) in radii.iter().enumerate() {
        let next = radii.get(k + 1).copied().unwrap_or(1.0);
        let mut gap = 0.0f64;
        for mask in 1u32..(1 << a.len()) {
            let mut ma = 0.0;
            let mut hit = vec![false; b.len()];
            for (i, (_, w)) in a.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    ma += crate::field::q_to_f64(w);
                    for (j, h) in hit.iter_mut().enumerate() {
                        *h |= d[i][j] <= r;
                    }
                }
            }
            let mb: f64 = b.iter().zip(&hit).filter(|(_, h)| **h).map(|((_, w), _)| crate::field::q_to_f64(w)).sum();
            gap = gap.max(ma - mb);
        }
        let cand = r.max(gap);
        if cand < next {
            best = best.min(cand);
        }
    }
    best
}

fn metric_suites(cfg: &SuiteConfig, c: &mut Checks) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x5eed);
    let spaces = test_spaces();
    let mut fails: BTreeMap<&str, usize> = BTreeMap::new();
    for i in 0..cfg.metric_instances {
        let sp = &spaces[i % spaces.len()];
        let (x, y, z) = (random_measure(&mut rng, sp, 3), random_measure(&mut rng, sp, 3), random_measure(&mut rng, sp, 3));
        let dxy = lp_distance(sp, &x, &y)?;
        let dyx = lp_distance(sp, &y, &x)?;
        let dyz = lp_distance(sp, &y, &z)?;
        let dxz = lp_distance(sp, &x, &z)?;
        let dxx = lp_distance(sp, &x, &x)?;
        let mut bump = |k: &'static str, ok: bool| {
            if !ok {
                *fails.entry(k).or_default() += 1;
            }
        };
        bump("lp identity", dxx.abs() <= METRIC_TOL && (x == y) == (dxy <= METRIC_TOL));
        bump("lp symmetry", (dxy - dyx).abs() <= METRIC_TOL);
        bump("lp triangle", dxz <= dxy + dyz + METRIC_TOL);
        bump("lp range", (0.0..=1.0 + METRIC_TOL).contains(&dxy));
        let (a, b, e) = (random_set(&mut rng, sp, 4), random_set(&mut rng, sp, 4), random_set(&mut rng, sp, 4));
        let hab = hausdorff_distance(sp, &a, &b)?;
        let hba = hausdorff_distance(sp, &b, &a)?;
        let hbe = hausdorff_distance(sp, &b, &e)?;
        let hae = hausdorff_distance(sp, &a, &e)?;
        bump("hausdorff identity", hausdorff_distance(sp, &a, &a)? <= METRIC_TOL && (a == b) == (hab <= METRIC_TOL));
        bump("hausdorff symmetry", (hab - hba).abs() <= METRIC_TOL);
        bump("hausdorff triangle", hae <= hab + hbe + METRIC_TOL);
    }
    for k in ["lp identity", "lp symmetry", "lp triangle", "lp range", "hausdorff identity", "hausdorff symmetry", "hausdorff triangle"] {
        let n = fails.get(k).copied().unwrap_or(0);
        c.check(format!("{k}: {n} failures in {} instances", cfg.metric_instances), n == 0);
    }
    let mut oracle_fail = 0;
    for i in 0..cfg.oracle_pairs {
        let sp = &spaces[i % spaces.len()];
        let (x, y) = (random_point(&mut rng, sp), random_point(&mut rng, sp));
        let (mx, my) = (crate::measure::dirac(x.clone()), crate::measure::dirac(y.clone()));
        let got = lp_distance(sp, &mx, &my)?;
        let want = sp.distance(&x, &y).min(1.0);
        let brute = lp_bruteforce(sp, &mx, &my);
        if (got - want).abs() > METRIC_TOL || (brute - want).abs() > METRIC_TOL {
            oracle_fail += 1;
        }
    }
    c.check(
        format!("lp(δx, δy) = min(d, 1) and matches brute force: {oracle_fail} failures in {}", cfg.oracle_pairs),
        oracle_fail == 0,
    );
    Ok(())
}
