//! Branching diagrams of weighted strands, their resolvers, the pushforward to
//! measure paths, and the weighted-configuration traces of resolvers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{self, FieldSpec, Q};
use crate::linalg::{EchelonSpan, Matrix};
use crate::measure::{hausdorff_distance, support, FiniteMeasure, FiniteSet, MetricPoint, MetricSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strand {
    pub id: String,
    #[serde(with = "field::q_str")]
    pub weight: Q,
}

/// Strands that meet at an event: `incoming` end there, `outgoing` start there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetingGroup {
    pub incoming: Vec<String>,
    pub outgoing: Vec<String>,
}

/// One piecewise-linear sample of a strand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample(#[serde(with = "field::q_str")] pub Q, pub MetricPoint);

/// Geometric realization: each strand is a piecewise-geodesic path over its interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Realization {
    pub space: MetricSpace,
    pub strands: BTreeMap<String, Vec<Sample>>,
}

/// Weighted strands between event times, with meeting groups at interior events.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchingDiagram {
    pub name: String,
    #[serde(with = "field::q_vec")]
    pub event_times: Vec<Q>,
    pub intervals: Vec<Vec<Strand>>,
    #[serde(default)]
    pub events: Vec<Vec<MeetingGroup>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<Realization>,
}

/// Sequence of strand ids, one per interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Route(pub Vec<String>);

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.0.join(","))
    }
}

/// Route-weight map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Resolver {
    pub weights: BTreeMap<Route, Q>,
}

impl Resolver {
    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    pub fn from_pairs(pairs: &[(&[&str], Q)]) -> Self {
        let weights = pairs
            .iter()
            .map(|(r, w)| (Route(r.iter().map(|s| s.to_string()).collect()), w.clone()))
            .collect();
        Resolver { weights }
    }
}

impl std::fmt::Display for Resolver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|(r, w)| format!("{}·{r}", field::fmt_q(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct ResolverEntry {
    route: Vec<String>,
    #[serde(with = "field::q_str")]
    weight: Q,
}

impl Serialize for Resolver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<ResolverEntry> = self
            .weights
            .iter()
            .map(|(r, w)| ResolverEntry { route: r.0.clone(), weight: w.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Resolver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<ResolverEntry> = Vec::deserialize(d)?;
        Ok(Resolver { weights: v.into_iter().map(|e| (Route(e.route), e.weight)).collect() })
    }
}

/// Limits for route and basis enumeration.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationLimits {
    pub max_routes: usize,
    pub max_nodes: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_routes: 1_000_000, max_nodes: 20_000_000 }
    }
}

/// Vertex resolvers of bounded support plus the dimension of the full resolver polytope.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolverReport {
    pub route_count: usize,
    pub constraint_rank: usize,
    pub polytope_dimension: usize,
    pub vertex_resolvers: Vec<Resolver>,
}

impl BranchingDiagram {
    pub fn from_json(text: &str) -> Result<Self> {
        let d: BranchingDiagram = serde_json::from_str(text)?;
        d.validate()?;
        Ok(d)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    pub fn interval_count(&self) -> usize {
        self.intervals.len()
    }

    fn strand_index(&self) -> HashMap<&str, (usize, usize)> {
        let mut m = HashMap::new();
        for (j, ss) in self.intervals.iter().enumerate() {
            for (i, s) in ss.iter().enumerate() {
                m.insert(s.id.as_str(), (j, i));
            }
        }
        m
    }

    /// Checks every structural invariant; all violations are reported together.
    pub fn validate(&self) -> Result<()> {
        let diags = self.diagnostics();
        if diags.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(diags))
        }
    }

    pub fn diagnostics(&self) -> Vec<String> {
        let mut d = Vec::new();
        let k = self.event_times.len().saturating_sub(1);
        if self.event_times.len() < 2 {
            d.push("need at least the event times 0 and 1".to_string());
            return d;
        }
        if !self.event_times[0].is_zero() || !self.event_times[k].is_one() {
            d.push("event times must start at 0 and end at 1".into());
        }
        if self.event_times.windows(2).any(|w| w[0] >= w[1]) {
            d.push("event times must be strictly increasing".into());
        }
        if self.intervals.len() != k {
            d.push(format!("expected {k} intervals, found {}", self.intervals.len()));
            return d;
        }
        if self.events.len() != k - 1 {
            d.push(format!("expected {} interior events, found {}", k - 1, self.events.len()));
            return d;
        }
        let mut seen = BTreeSet::new();
        for (j, ss) in self.intervals.iter().enumerate() {
            if ss.is_empty() {
                d.push(format!("interval {j}: no strands"));
            }
            for s in ss {
                if !seen.insert(s.id.clone()) {
                    d.push(format!("strand id `{}` used twice", s.id));
                }
                if !s.weight.is_positive() {
                    d.push(format!("interval {j}: strand `{}` has nonpositive weight", s.id));
                }
            }
            let total: Q = ss.iter().map(|s| s.weight.clone()).sum();
            if !total.is_one() {
                d.push(format!("interval {j}: interval mass ≠ 1 (total {})", field::fmt_q(&total)));
            }
        }
        let index = self.strand_index();
        for (e, groups) in self.events.iter().enumerate() {
            let mut in_count: HashMap<&str, usize> = HashMap::new();
            let mut out_count: HashMap<&str, usize> = HashMap::new();
            for (g, group) in groups.iter().enumerate() {
                if group.incoming.is_empty() || group.outgoing.is_empty() {
                    d.push(format!("event {}: group {g} needs incoming and outgoing strands", e + 1));
                }
                let mut win = Q::zero();
                let mut wout = Q::zero();
                for id in &group.incoming {
                    match index.get(id.as_str()) {
                        Some(&(j, i)) if j == e => {
                            win += &self.intervals[j][i].weight;
                            *in_count.entry(id).or_default() += 1;
                        }
                        _ => d.push(format!("event {}: `{id}` is not a strand of interval {e}", e + 1)),
                    }
                }
                for id in &group.outgoing {
                    match index.get(id.as_str()) {
                        Some(&(j, i)) if j == e + 1 => {
                            wout += &self.intervals[j][i].weight;
                            *out_count.entry(id).or_default() += 1;
                        }
                        _ => d.push(format!("event {}: `{id}` is not a strand of interval {}", e + 1, e + 1)),
                    }
                }
                if win != wout {
                    d.push(format!(
                        "event {}: group {g} weight mismatch ({} in, {} out)",
                        e + 1,
                        field::fmt_q(&win),
                        field::fmt_q(&wout)
                    ));
                }
            }
            for s in &self.intervals[e] {
                let c = in_count.get(s.id.as_str()).copied().unwrap_or(0);
                if c != 1 {
                    d.push(format!("event {}: strand `{}` is in {c} meeting groups", e + 1, s.id));
                }
            }
            for s in &self.intervals[e + 1] {
                let c = out_count.get(s.id.as_str()).copied().unwrap_or(0);
                if c != 1 {
                    d.push(format!("event {}: strand `{}` is in {c} meeting groups", e + 1, s.id));
                }
            }
        }
        if let Some(r) = &self.realization {
            d.extend(self.realization_diagnostics(r));
        }
        d
    }

    fn realization_diagnostics(&self, r: &Realization) -> Vec<String> {
        let mut d = Vec::new();
        for (j, ss) in self.intervals.iter().enumerate() {
            let (a, b) = (&self.event_times[j], &self.event_times[j + 1]);
            for s in ss {
                let Some(samples) = r.strands.get(&s.id) else {
                    d.push(format!("strand `{}` has no realization", s.id));
                    continue;
                };
                if samples.len() < 2 || samples[0].0 != *a || samples[samples.len() - 1].0 != *b {
                    d.push(format!("strand `{}`: samples must cover [{}, {}]", s.id, field::fmt_q(a), field::fmt_q(b)));
                    continue;
                }
                if samples.windows(2).any(|w| w[0].0 >= w[1].0) {
                    d.push(format!("strand `{}`: sample times must increase", s.id));
                }
                for smp in samples {
                    if let Err(e) = r.space.check(&smp.1) {
                        d.push(format!("strand `{}`: {e}", s.id));
                    }
                }
                for w in samples.windows(2) {
                    if let Err(e) = r.space.interpolate(&w[0].1, &w[1].1, &Q::zero()) {
                        d.push(format!("strand `{}`: {e}", s.id));
                    }
                }
            }
        }
        for extra in r.strands.keys() {
            if !self.intervals.iter().flatten().any(|s| &s.id == extra) {
                d.push(format!("realization names unknown strand `{extra}`"));
            }
        }
        if !d.is_empty() {
            return d;
        }
        for (e, groups) in self.events.iter().enumerate() {
            for (g, group) in groups.iter().enumerate() {
                let mut pts = BTreeSet::new();
                for id in &group.incoming {
                    pts.insert(r.strands[id].last().expect("nonempty").1.clone());
                }
                for id in &group.outgoing {
                    pts.insert(r.strands[id][0].1.clone());
                }
                if pts.len() > 1 {
                    d.push(format!("event {}: group {g} meeting point mismatch", e + 1));
                }
            }
        }
        d
    }

    /// All routes through meeting groups, in lexicographic id order.
    pub fn routes(&self, max_routes: usize) -> Result<Vec<Route>> {
        let mut succ: Vec<HashMap<usize, Vec<usize>>> = Vec::new();
        for (e, groups) in self.events.iter().enumerate() {
            let pos: HashMap<&str, usize> = self.intervals[e + 1].iter().enumerate().map(|(i, s)| (s.id.as_str(), i)).collect();
            let pin: HashMap<&str, usize> = self.intervals[e].iter().enumerate().map(|(i, s)| (s.id.as_str(), i)).collect();
            let mut m = HashMap::new();
            for g in groups {
                let outs: Vec<usize> = g.outgoing.iter().map(|id| pos[id.as_str()]).collect();
                for id in &g.incoming {
                    m.insert(pin[id.as_str()], outs.clone());
                }
            }
            succ.push(m);
        }
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..self.intervals[0].len()).rev().map(|i| vec![i]).collect();
        while let Some(path) = stack.pop() {
            let j = path.len() - 1;
            if j + 1 == self.intervals.len() {
                out.push(path);
                if out.len() > max_routes {
                    return Err(Error::Budget(format!("more than {max_routes} routes")));
                }
                continue;
            }
            let last = *path.last().expect("nonempty");
            for &nx in succ[j][&last].iter().rev() {
                let mut p = path.clone();
                p.push(nx);
                stack.push(p);
            }
        }
        let mut routes: Vec<Route> = out
            .into_iter()
            .map(|p| Route(p.iter().enumerate().map(|(j, &i)| self.intervals[j][i].id.clone()).collect()))
            .collect();
        routes.sort();
        Ok(routes)
    }

    /// Marginal constraint system: one row per strand, one column per route.
    pub fn constraint_system(&self, routes: &[Route]) -> (Matrix, Vec<Q>) {
        let index = self.strand_index();
        let rows: usize = self.intervals.iter().map(Vec::len).sum();
        let offsets: Vec<usize> = self
            .intervals
            .iter()
            .scan(0, |acc, ss| {
                let o = *acc;
                *acc += ss.len();
                Some(o)
            })
            .collect();
        let mut a = Matrix::zeros(rows, routes.len());
        for (c, r) in routes.iter().enumerate() {
            for id in &r.0 {
                let (j, i) = index[id.as_str()];
                a.set(offsets[j] + i, c, Q::one());
            }
        }
        let b = self.intervals.iter().flatten().map(|s| s.weight.clone()).collect();
        (a, b)
    }

    /// Checks that a resolver uses valid routes and meets every marginal exactly.
    pub fn check_resolver(&self, r: &Resolver) -> Result<()> {
        let routes: BTreeSet<Route> = self.routes(EnumerationLimits::default().max_routes)?.into_iter().collect();
        let mut errs = Vec::new();
        for (route, w) in &r.weights {
            if !routes.contains(route) {
                errs.push(format!("{route} is not a route"));
            }
            if !w.is_positive() {
                errs.push(format!("{route} has nonpositive weight"));
            }
        }
        let mut through: HashMap<&str, Q> = HashMap::new();
        for (route, w) in &r.weights {
            for id in &route.0 {
                *through.entry(id.as_str()).or_insert_with(Q::zero) += w;
            }
        }
        for s in self.intervals.iter().flatten() {
            let got = through.get(s.id.as_str()).cloned().unwrap_or_else(Q::zero);
            if got != s.weight {
                errs.push(format!("strand `{}` carries {} instead of {}", s.id, field::fmt_q(&got), field::fmt_q(&s.weight)));
            }
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(errs))
        }
    }

    fn realization(&self) -> Result<&Realization> {
        self.realization
            .as_ref()
            .ok_or_else(|| Error::InvalidDiagram(vec![format!("{}: diagram is not realized", self.name)]))
    }

    /// Interval containing `t`; event times belong to the later interval except `t = 1`.
    fn interval_at(&self, t: &Q) -> usize {
        let k = self.intervals.len();
        (0..k).find(|&j| *t < self.event_times[j + 1]).unwrap_or(k - 1)
    }

    /// Position of a strand at time `t` within its interval.
    pub fn strand_position(&self, id: &str, t: &Q) -> Result<MetricPoint> {
        let r = self.realization()?;
        let samples = r
            .strands
            .get(id)
            .ok_or_else(|| Error::InvalidDiagram(vec![format!("unknown strand `{id}`")]))?;
        let (first, last) = (&samples[0].0, &samples[samples.len() - 1].0);
        if t < first || t > last {
            return Err(Error::InvalidPath(format!("time {} outside strand `{id}`", field::fmt_q(t))));
        }
        let k = samples.windows(2).position(|w| *t <= w[1].0).expect("covered");
        let (a, b) = (&samples[k], &samples[k + 1]);
        let s = (t - &a.0) / (&b.0 - &a.0);
        r.space.interpolate(&a.1, &b.1, &s)
    }

    /// Position of a route at time `t`.
    pub fn route_position(&self, route: &Route, t: &Q) -> Result<MetricPoint> {
        let j = self.interval_at(t);
        self.strand_position(&route.0[j], t)
    }

    /// The measure carried by the strands themselves, independent of any resolver.
    pub fn measure_at(&self, t: &Q) -> Result<FiniteMeasure> {
        let j = self.interval_at(t);
        let atoms = self.intervals[j]
            .iter()
            .map(|s| Ok((self.strand_position(&s.id, t)?, s.weight.clone())))
            .collect::<Result<Vec<_>>>()?;
        FiniteMeasure::new(atoms)
    }

    pub fn space(&self) -> Result<&MetricSpace> {
        Ok(&self.realization()?.space)
    }
}

/// Uniform grid `0, 1/k, …, 1`.
pub fn uniform_times(k: usize) -> Vec<Q> {
    (0..=k).map(|i| field::q(i as i64, k as i64)).collect()
}

/// All vertex resolvers with at most `n` routes, and the polytope dimension.
pub fn enumerate_resolvers(d: &BranchingDiagram, n: usize) -> Result<ResolverReport> {
    enumerate_resolvers_with(d, n, EnumerationLimits::default())
}

/// Depth-first search over increasing sets of linearly independent route columns;
/// each set whose basic solution is strictly positive is a vertex.
pub fn enumerate_resolvers_with(d: &BranchingDiagram, n: usize, limits: EnumerationLimits) -> Result<ResolverReport> {
    d.validate()?;
    let f = FieldSpec::Rationals;
    let routes = d.routes(limits.max_routes)?;
    let (a, b) = d.constraint_system(&routes);
    let rank = a.rank(f);
    let cols: Vec<Vec<Q>> = (0..routes.len()).map(|c| a.col(c)).collect();
    let max_size = n.min(rank);
    let mut found = Vec::new();
    let mut nodes = 0u64;
    let mut stack: Vec<(Vec<usize>, EchelonSpan)> = vec![(Vec::new(), EchelonSpan::new(f, a.rows))];
    while let Some((set, span)) = stack.pop() {
        nodes += 1;
        if nodes > limits.max_nodes {
            return Err(Error::Budget(format!("resolver search exceeded {} nodes", limits.max_nodes)));
        }
        if !set.is_empty() {
            let sub = Matrix::from_cols(a.rows, &set.iter().map(|&c| cols[c].clone()).collect::<Vec<_>>());
            if let Some(x) = sub.solve(&b, f) {
                if x.iter().all(Signed::is_positive) {
                    let weights = set.iter().zip(x).map(|(&c, w)| (routes[c].clone(), w)).collect();
                    found.push(Resolver { weights });
                }
            }
        }
        if set.len() == max_size {
            continue;
        }
        let start = set.last().map_or(0, |&c| c + 1);
        for c in (start..routes.len()).rev() {
            let mut sp = span.clone();
            if sp.insert(&cols[c]) {
                let mut s = set.clone();
                s.push(c);
                stack.push((s, sp));
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(ResolverReport {
        route_count: routes.len(),
        constraint_rank: rank,
        polytope_dimension: routes.len() - rank,
        vertex_resolvers: found,
    })
}

/// Least number of routes of any resolver.
pub fn min_support(d: &BranchingDiagram) -> Result<usize> {
    let routes = d.routes(EnumerationLimits::default().max_routes)?;
    let (a, _) = d.constraint_system(&routes);
    let rank = a.rank(FieldSpec::Rationals);
    for n in 1..=rank {
        if !enumerate_resolvers(d, n)?.vertex_resolvers.is_empty() {
            return Ok(n);
        }
    }
    Err(Error::InvalidDiagram(vec![format!("{}: no resolver exists", d.name)]))
}

/// `Σ_routes weight · δ_{route(t)}` at each sample time.
pub fn pushforward(r: &Resolver, d: &BranchingDiagram, times: &[Q]) -> Result<Vec<FiniteMeasure>> {
    times
        .iter()
        .map(|t| {
            let atoms = r
                .weights
                .iter()
                .map(|(route, w)| Ok((d.route_position(route, t)?, w.clone())))
                .collect::<Result<Vec<_>>>()?;
            FiniteMeasure::new(atoms)
        })
        .collect()
}

/// Sorted multiset of `(weight, position)` over the routes of a resolver, without merging.
pub fn weighted_configuration(r: &Resolver, d: &BranchingDiagram, t: &Q) -> Result<Vec<(Q, MetricPoint)>> {
    let mut v = r
        .weights
        .iter()
        .map(|(route, w)| Ok((w.clone(), d.route_position(route, t)?)))
        .collect::<Result<Vec<_>>>()?;
    v.sort();
    Ok(v)
}

/// Point of the symmetric square traced by a resolver with at most two routes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetricTracePoint {
    Merged { point: MetricPoint },
    Split { first: (MetricPoint, String), second: (MetricPoint, String) },
}

impl SymmetricTracePoint {
    /// Image in the unweighted symmetric square.
    pub fn unweighted(&self) -> (MetricPoint, MetricPoint) {
        match self {
            SymmetricTracePoint::Merged { point } => (point.clone(), point.clone()),
            SymmetricTracePoint::Split { first, second } => (first.0.clone(), second.0.clone()),
        }
    }
}

pub fn symmetric_trace(r: &Resolver, d: &BranchingDiagram, times: &[Q]) -> Result<Vec<SymmetricTracePoint>> {
    if r.support_size() > 2 {
        return Err(Error::InvalidDiagram(vec![format!(
            "symmetric trace needs at most 2 routes, resolver has {}",
            r.support_size()
        )]));
    }
    times
        .iter()
        .map(|t| {
            let cfg = weighted_configuration(r, d, t)?;
            let mut pts: Vec<(MetricPoint, Q)> = cfg.into_iter().map(|(w, p)| (p, w)).collect();
            pts.sort();
            Ok(match pts.as_slice() {
                [(p, _)] => SymmetricTracePoint::Merged { point: p.clone() },
                [(p, _), (q, _)] if p == q => SymmetricTracePoint::Merged { point: p.clone() },
                [(p, a), (q, b)] => SymmetricTracePoint::Split {
                    first: (p.clone(), field::fmt_q(a)),
                    second: (q.clone(), field::fmt_q(b)),
                },
                _ => unreachable!("support checked"),
            })
        })
        .collect()
}

/// Witness of non-injectivity: two times with equal measures but different configurations.
#[derive(Clone, Debug, PartialEq)]
pub struct CollapseWitness {
    pub resolver: Resolver,
    pub s: Q,
    pub t: Q,
}

/// Searches for a resolver and two sample times whose pushforward measures agree
/// while the weighted route configurations differ.
pub fn find_collapse(d: &BranchingDiagram, resolvers: &[Resolver], times: &[Q]) -> Result<Option<CollapseWitness>> {
    for r in resolvers {
        let mut seen: HashMap<FiniteMeasure, (Q, Vec<(Q, MetricPoint)>)> = HashMap::new();
        for t in times {
            let m = pushforward(r, d, std::slice::from_ref(t))?.remove(0);
            let cfg = weighted_configuration(r, d, t)?;
            match seen.get(&m) {
                Some((s, c)) if *c != cfg => {
                    return Ok(Some(CollapseWitness { resolver: r.clone(), s: s.clone(), t: t.clone() }));
                }
                Some(_) => {}
                None => {
                    seen.insert(m, (t.clone(), cfg));
                }
            }
        }
    }
    Ok(None)
}

pub fn support3_counterexample_check(d: &BranchingDiagram, resolvers: &[Resolver], times: &[Q]) -> Result<bool> {
    Ok(find_collapse(d, resolvers, times)?.is_some())
}

/// First time at which two resolvers give different weighted configurations.
pub fn configuration_disagreement(d: &BranchingDiagram, a: &Resolver, b: &Resolver, times: &[Q]) -> Result<Option<Q>> {
    for t in times {
        if weighted_configuration(a, d, t)? != weighted_configuration(b, d, t)? {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

/// Largest Hausdorff distance between consecutive supports.
pub fn max_support_step(space: &MetricSpace, supports: &[FiniteSet]) -> Result<f64> {
    let mut best = 0.0f64;
    for w in supports.windows(2) {
        best = best.max(hausdorff_distance(space, &w[0], &w[1])?);
    }
    Ok(best)
}

/// Row of a support-continuity table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuityRow {
    #[serde(with = "field::q_str")]
    pub dt: Q,
    pub max_step: f64,
}

/// For each step `dt` (with `1/dt` an integer), the largest Hausdorff step between
/// supports of the pushforward at consecutive grid times.
pub fn support_continuity_report(r: &Resolver, d: &BranchingDiagram, dts: &[Q]) -> Result<Vec<ContinuityRow>> {
    let space = d.space()?;
    dts.iter()
        .map(|dt| {
            let k = Q::one() / dt;
            if !k.is_integer() || !dt.is_positive() {
                return Err(Error::InvalidPath(format!("step {} does not divide 1", field::fmt_q(dt))));
            }
            let k: usize = k.to_integer().try_into().map_err(|_| Error::Budget("step too small".into()))?;
            let ms = pushforward(r, d, &uniform_times(k))?;
            let sup: Vec<FiniteSet> = ms.iter().map(support).collect();
            Ok(ContinuityRow { dt: dt.clone(), max_step: max_support_step(space, &sup)? })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn two_by_two(out: (Q, Q)) -> BranchingDiagram {
        BranchingDiagram {
            name: "t".into(),
            event_times: vec![q(0, 1), q(1, 2), q(1, 1)],
            intervals: vec![
                vec![Strand { id: "a".into(), weight: q(1, 2) }, Strand { id: "b".into(), weight: q(1, 2) }],
                vec![Strand { id: "c".into(), weight: out.0 }, Strand { id: "d".into(), weight: out.1 }],
            ],
            events: vec![vec![MeetingGroup {
                incoming: vec!["a".into(), "b".into()],
                outgoing: vec!["c".into(), "d".into()],
            }]],
            realization: None,
        }
    }

    #[test]
    fn half_half_has_two_vertices() {
        let d = two_by_two((q(1, 2), q(1, 2)));
        let r = enumerate_resolvers(&d, 4).unwrap();
        assert_eq!((r.route_count, r.constraint_rank, r.polytope_dimension), (4, 3, 1));
        assert_eq!(r.vertex_resolvers.len(), 2);
        assert!(r.vertex_resolvers.iter().all(|v| v.support_size() == 2));
        for v in &r.vertex_resolvers {
            d.check_resolver(v).unwrap();
        }
    }

    #[test]
    fn quarter_split_needs_three() {
        let d = two_by_two((q(1, 4), q(3, 4)));
        assert!(enumerate_resolvers(&d, 2).unwrap().vertex_resolvers.is_empty());
        assert_eq!(min_support(&d).unwrap(), 3);
    }

    #[test]
    fn bad_mass_reported() {
        let mut d = two_by_two((q(1, 2), q(1, 2)));
        d.intervals[0][0].weight = q(1, 4);
        let e = d.validate().unwrap_err().to_string();
        assert!(e.contains("interval mass ≠ 1"), "{e}");
    }
}
