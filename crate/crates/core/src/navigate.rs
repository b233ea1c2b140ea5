//! Explicit path constructions: timestamped concatenation, join weights,
//! two-strand circle navigation and sequential composition of navigations.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{self, q, Q};
use crate::measure::{FiniteMeasure, MetricPoint, MetricSpace};
use crate::strand::{uniform_times, BranchingDiagram, MeetingGroup, Realization, Sample, Strand};

/// Piecewise-geodesic path sampled at rational times from 0 to 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledPath {
    pub space: MetricSpace,
    pub samples: Vec<Sample>,
}

impl SampledPath {
    pub fn new(space: MetricSpace, samples: Vec<Sample>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidPath("a path needs at least two samples".into()));
        }
        if !samples[0].0.is_zero() || !samples[samples.len() - 1].0.is_one() {
            return Err(Error::InvalidPath("sample times must start at 0 and end at 1".into()));
        }
        if samples.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidPath("sample times must increase strictly".into()));
        }
        for s in &samples {
            space.check(&s.1)?;
        }
        for w in samples.windows(2) {
            space.interpolate(&w[0].1, &w[1].1, &Q::zero())?;
        }
        Ok(SampledPath { space, samples })
    }

    pub fn constant(space: MetricSpace, p: MetricPoint) -> Result<Self> {
        Self::new(space, vec![Sample(Q::zero(), p.clone()), Sample(Q::one(), p)])
    }

    pub fn start(&self) -> &MetricPoint {
        &self.samples[0].1
    }

    pub fn end(&self) -> &MetricPoint {
        &self.samples[self.samples.len() - 1].1
    }

    /// Value at `t ∈ [0, 1]`.
    pub fn at(&self, t: &Q) -> Result<MetricPoint> {
        if t.is_negative() || *t > Q::one() {
            return Err(Error::InvalidPath(format!("time {} outside [0,1]", field::fmt_q(t))));
        }
        let k = self.samples.windows(2).position(|w| *t <= w[1].0).expect("covered");
        let (a, b) = (&self.samples[k], &self.samples[k + 1]);
        self.space.interpolate(&a.1, &b.1, &((t - &a.0) / (&b.0 - &a.0)))
    }
}

/// Decreasing timestamps `a_1 > … > a_{m−1} > 1`; breakpoints are `1/a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimestampScheme {
    #[serde(with = "field::q_vec")]
    pub a: Vec<Q>,
}

impl TimestampScheme {
    pub fn new(a: Vec<Q>) -> Result<Self> {
        if a.iter().any(|x| *x <= Q::one()) {
            return Err(Error::InvalidPath("timestamps must exceed 1".into()));
        }
        if a.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPath("timestamps must decrease strictly".into()));
        }
        Ok(TimestampScheme { a })
    }

    /// `a_i = k/i` for `i = 1..k−1`, splitting `[0,1]` into `k` equal pieces.
    pub fn uniform(pieces: usize) -> Self {
        assert!(pieces >= 1);
        let k = pieces as i64;
        TimestampScheme { a: (1..k).map(|i| q(k, i)).collect() }
    }

    /// `0, 1/a_1, …, 1/a_{m−1}, 1`.
    pub fn breakpoints(&self) -> Vec<Q> {
        let mut b = vec![Q::zero()];
        b.extend(self.a.iter().map(|x| x.recip()));
        b.push(Q::one());
        b
    }

    /// Number of pieces.
    pub fn pieces(&self) -> usize {
        self.a.len() + 1
    }

    /// Local parameter of piece `i` at `t`: `a_1 t` on the first piece,
    /// `a_i(a_{i−1}t − 1)/(a_{i−1} − a_i)` on middle pieces and
    /// `(1 − a_{m−1}t)/(1 − a_{m−1})` on the last one.
    pub fn piece_parameter(&self, i: usize, t: &Q) -> Q {
        let a = &self.a;
        let m = self.pieces();
        assert!(i < m, "piece {i} out of range");
        if m == 1 {
            t.clone()
        } else if i == 0 {
            &a[0] * t
        } else if i == m - 1 {
            let last = &a[m - 2];
            (Q::one() - last * t) / (Q::one() - last)
        } else {
            &a[i] * (&a[i - 1] * t - Q::one()) / (&a[i - 1] - &a[i])
        }
    }

    /// Piece containing `t` (breakpoints go to the earlier piece) and its local parameter.
    pub fn local_parameter(&self, t: &Q) -> (usize, Q) {
        let i = self.a.iter().position(|x| *t <= x.recip()).unwrap_or(self.a.len());
        (i, self.piece_parameter(i, t))
    }
}

/// Concatenation of `m` paths with breakpoints `1/a_i`.
pub fn theta_concat(paths: &[SampledPath], scheme: &TimestampScheme) -> Result<SampledPath> {
    if paths.is_empty() || scheme.a.len() + 1 != paths.len() {
        return Err(Error::InvalidPath(format!(
            "{} paths need {} timestamps, got {}",
            paths.len(),
            paths.len().saturating_sub(1),
            scheme.a.len()
        )));
    }
    let space = paths[0].space.clone();
    for (i, w) in paths.windows(2).enumerate() {
        if w[1].space != space {
            return Err(Error::InvalidPath("paths live in different spaces".into()));
        }
        if w[0].end() != w[1].start() {
            return Err(Error::InvalidPath(format!("path {} ends where path {} does not start", i + 1, i + 2)));
        }
    }
    let b = scheme.breakpoints();
    let mut samples: Vec<Sample> = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        let (lo, hi) = (&b[i], &b[i + 1]);
        for s in &p.samples {
            let t = lo + (hi - lo) * &s.0;
            if samples.last().is_some_and(|l| l.0 == t) {
                continue;
            }
            samples.push(Sample(t, s.1.clone()));
        }
    }
    SampledPath::new(space, samples)
}

/// Join weights `w_1(t), …, w_m(t)` with nodes `t_i = (i−1)/(m−1)`.
pub fn join_weights(m: usize, t: &Q) -> Vec<Q> {
    assert!(m >= 2);
    let nodes: Vec<Q> = (0..m).map(|i| q(i as i64, (m - 1) as i64)).collect();
    let z = |j: usize, x: &Q| -> Q {
        nodes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .fold(Q::one(), |acc, (_, ti)| acc * (x - ti))
    };
    let y: Vec<Q> = (0..m).map(|j| z(j, t) / z(j, &nodes[j])).collect();
    let total: Q = y.iter().map(|v| v * v).sum();
    y.iter().map(|v| v * v / &total).collect()
}

/// A measure path sampled on a grid together with the diagram that generates it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Navigation {
    pub diagram: BranchingDiagram,
    pub times: Vec<String>,
    pub measures: Vec<FiniteMeasure>,
}

impl Navigation {
    pub fn from_diagram(diagram: BranchingDiagram, grid: usize) -> Result<Self> {
        diagram.validate()?;
        let ts = uniform_times(grid);
        let measures = ts.iter().map(|t| diagram.measure_at(t)).collect::<Result<Vec<_>>>()?;
        Ok(Navigation { diagram, times: ts.iter().map(field::fmt_q).collect(), measures })
    }
}

/// Emits a branching diagram from `δ_x` to `δ_y` over `[0, 1]`.
pub trait PairNavigator {
    fn space(&self) -> MetricSpace;
    fn navigate(&self, x: &MetricPoint, y: &MetricPoint) -> Result<BranchingDiagram>;
}

/// Half the mass along each of the two arcs from `x` to `y`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CircleNavigator;

impl PairNavigator for CircleNavigator {
    fn space(&self) -> MetricSpace {
        MetricSpace::Circle
    }

    fn navigate(&self, x: &MetricPoint, y: &MetricPoint) -> Result<BranchingDiagram> {
        let (MetricPoint::Circle(a), MetricPoint::Circle(b)) = (x, y) else {
            return Err(Error::InvalidPath("circle navigation needs circle points".into()));
        };
        let times = [q(0, 1), q(1, 4), q(1, 2), q(3, 4), q(1, 1)];
        let arc = |delta: Q| -> Vec<Sample> {
            times.iter().map(|s| Sample(s.clone(), MetricPoint::turns(a + &delta * s))).collect()
        };
        let delta = b - a;
        let delta = delta.clone() - Q::from_integer(delta.floor().to_integer());
        let (strands, samples): (Vec<Strand>, Vec<(String, Vec<Sample>)>) = if delta.is_zero() {
            (
                vec![Strand { id: "stay".into(), weight: Q::one() }],
                vec![("stay".into(), arc(Q::zero()))],
            )
        } else {
            (
                vec![
                    Strand { id: "ccw".into(), weight: q(1, 2) },
                    Strand { id: "cw".into(), weight: q(1, 2) },
                ],
                vec![("ccw".into(), arc(delta.clone())), ("cw".into(), arc(delta - Q::one()))],
            )
        };
        let d = BranchingDiagram {
            name: format!("circle {} -> {}", field::fmt_q(a), field::fmt_q(b)),
            event_times: vec![Q::zero(), Q::one()],
            intervals: vec![strands],
            events: vec![],
            realization: Some(Realization { space: MetricSpace::Circle, strands: samples.into_iter().collect() }),
        };
        d.validate()?;
        Ok(d)
    }
}

/// Measure path from `δ_x` to `δ_y` on the circle, sampled at `k/100`.
pub fn circle_navigate(x: &Q, y: &Q) -> Result<Navigation> {
    let d = CircleNavigator.navigate(&MetricPoint::turns(x.clone()), &MetricPoint::turns(y.clone()))?;
    Navigation::from_diagram(d, 100)
}

/// Chains pairwise navigations through `points`, reaching `δ_{x_i}` at `t_i = (i−1)/(m−1)`.
/// Segment `i` occupies `[t_i, t_{i+1}]`; every junction is one full meeting group.
pub fn sequential_compose(nav: &dyn PairNavigator, points: &[MetricPoint]) -> Result<BranchingDiagram> {
    let m = points.len();
    if m < 2 {
        return Err(Error::InvalidPath("need at least two points".into()));
    }
    let segments = points.windows(2).map(|w| nav.navigate(&w[0], &w[1])).collect::<Result<Vec<_>>>()?;
    if m == 2 {
        return Ok(segments.into_iter().next().expect("one segment"));
    }
    let b = TimestampScheme::uniform(m - 1).breakpoints();
    let mut event_times = vec![Q::zero()];
    let mut intervals = Vec::new();
    let mut events: Vec<Vec<MeetingGroup>> = Vec::new();
    let mut strands = std::collections::BTreeMap::new();
    for (i, seg) in segments.iter().enumerate() {
        let (lo, hi) = (&b[i], &b[i + 1]);
        let rescale = |t: &Q| lo + (hi - lo) * t;
        let pre = |id: &str| format!("s{}.{id}", i + 1);
        if i > 0 {
            let prev: &Vec<Strand> = intervals.last().expect("previous segment");
            events.push(vec![MeetingGroup {
                incoming: prev.iter().map(|s| s.id.clone()).collect(),
                outgoing: seg.intervals[0].iter().map(|s| pre(&s.id)).collect(),
            }]);
        }
        for t in &seg.event_times[1..] {
            event_times.push(rescale(t));
        }
        for ss in &seg.intervals {
            intervals.push(ss.iter().map(|s| Strand { id: pre(&s.id), weight: s.weight.clone() }).collect());
        }
        for groups in &seg.events {
            events.push(
                groups
                    .iter()
                    .map(|g| MeetingGroup {
                        incoming: g.incoming.iter().map(|s| pre(s)).collect(),
                        outgoing: g.outgoing.iter().map(|s| pre(s)).collect(),
                    })
                    .collect(),
            );
        }
        let real = seg
            .realization
            .as_ref()
            .ok_or_else(|| Error::InvalidPath("segment navigation is not realized".into()))?;
        for (id, samples) in &real.strands {
            strands.insert(pre(id), samples.iter().map(|s| Sample(rescale(&s.0), s.1.clone())).collect());
        }
    }
    let name = format!("sequential({})", points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" -> "));
    let d = BranchingDiagram {
        name,
        event_times,
        intervals,
        events,
        realization: Some(Realization { space: nav.space(), strands }),
    };
    d.validate()?;
    Ok(d)
}
