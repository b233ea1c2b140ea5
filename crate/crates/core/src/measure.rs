//! Metric points, finitely supported probability measures, and the
//! Lévy–Prokhorov and Hausdorff distances.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{self, q_to_f64, Q};

/// A point of one of the supported metric spaces.
///
/// Circle points are stored in turns, a rational in `[0, 1)`; the metric is arc
/// length on the circle of circumference `2π`. Graph points are either a vertex
/// or an interior point of an edge at parameter `t ∈ (0, 1)` measured from the
/// edge's first endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricPoint {
    Euclidean(#[serde(with = "field::q_vec")] Vec<Q>),
    Circle(#[serde(with = "field::q_str")] Q),
    Vertex(usize),
    Edge(usize, #[serde(with = "field::q_str")] Q),
}

impl MetricPoint {
    pub fn real(x: Q) -> Self {
        MetricPoint::Euclidean(vec![x])
    }

    /// Circle point from any rational number of turns, reduced mod 1.
    pub fn turns(x: Q) -> Self {
        MetricPoint::Circle(frac(&x))
    }
}

impl fmt::Display for MetricPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricPoint::Euclidean(v) => {
                let parts: Vec<String> = v.iter().map(field::fmt_q).collect();
                write!(f, "({})", parts.join(", "))
            }
            MetricPoint::Circle(t) => write!(f, "turn {}", field::fmt_q(t)),
            MetricPoint::Vertex(v) => write!(f, "v{v}"),
            MetricPoint::Edge(e, t) => write!(f, "e{e}@{}", field::fmt_q(t)),
        }
    }
}

fn frac(x: &Q) -> Q {
    x - Q::from_integer(x.floor().to_integer())
}

/// Edge-weighted undirected graph with shortest-path metric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GraphSpec", into = "GraphSpec")]
pub struct WeightedGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, Q)>,
    dist: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GraphSpec {
    vertex_count: usize,
    edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct EdgeSpec {
    from: usize,
    to: usize,
    #[serde(with = "field::q_str")]
    weight: Q,
}

impl TryFrom<GraphSpec> for WeightedGraph {
    type Error = Error;
    fn try_from(g: GraphSpec) -> Result<Self> {
        WeightedGraph::new(g.vertex_count, g.edges.into_iter().map(|e| (e.from, e.to, e.weight)).collect())
    }
}

impl From<WeightedGraph> for GraphSpec {
    fn from(g: WeightedGraph) -> Self {
        GraphSpec {
            vertex_count: g.vertex_count,
            edges: g.edges.into_iter().map(|(from, to, weight)| EdgeSpec { from, to, weight }).collect(),
        }
    }
}

impl WeightedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, Q)>) -> Result<Self> {
        let mut dist = vec![vec![f64::INFINITY; vertex_count]; vertex_count];
        for (i, row) in dist.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        for (a, b, w) in &edges {
            if *a >= vertex_count || *b >= vertex_count || a == b {
                return Err(Error::InvalidMeasure(format!("bad edge ({a},{b})")));
            }
            if !w.is_positive() {
                return Err(Error::InvalidMeasure(format!("edge ({a},{b}) has nonpositive length")));
            }
            let w = q_to_f64(w);
            if w < dist[*a][*b] {
                dist[*a][*b] = w;
                dist[*b][*a] = w;
            }
        }
        for k in 0..vertex_count {
            for i in 0..vertex_count {
                for j in 0..vertex_count {
                    let via = dist[i][k] + dist[k][j];
                    if via < dist[i][j] {
                        dist[i][j] = via;
                    }
                }
            }
        }
        if dist.iter().flatten().any(|d| d.is_infinite()) {
            return Err(Error::InvalidMeasure("graph is not connected".into()));
        }
        Ok(WeightedGraph { vertex_count, edges, dist })
    }

    /// Endpoint distances `(vertex, distance)` from a graph point.
    fn anchors(&self, p: &MetricPoint) -> Vec<(usize, f64)> {
        match p {
            MetricPoint::Vertex(v) => vec![(*v, 0.0)],
            MetricPoint::Edge(e, t) => {
                let (a, b, w) = &self.edges[*e];
                let (w, t) = (q_to_f64(w), q_to_f64(t));
                vec![(*a, t * w), (*b, (1.0 - t) * w)]
            }
            _ => unreachable!("not a graph point"),
        }
    }

    fn distance(&self, p: &MetricPoint, q: &MetricPoint) -> f64 {
        let mut best = f64::INFINITY;
        if let (MetricPoint::Edge(e1, t1), MetricPoint::Edge(e2, t2)) = (p, q) {
            if e1 == e2 {
                best = q_to_f64(&(t1 - t2).abs()) * q_to_f64(&self.edges[*e1].2);
            }
        }
        for (a, da) in self.anchors(p) {
            for (b, db) in self.anchors(q) {
                best = best.min(da + self.dist[a][b] + db);
            }
        }
        best
    }

    /// Position of `p` on edge `e` as a parameter in `[0, 1]`, if it lies on it.
    fn position_on(&self, e: usize, p: &MetricPoint) -> Option<Q> {
        let (a, b, _) = &self.edges[e];
        match p {
            MetricPoint::Vertex(v) if v == a => Some(Q::zero()),
            MetricPoint::Vertex(v) if v == b => Some(Q::one()),
            MetricPoint::Edge(f, t) if *f == e => Some(t.clone()),
            _ => None,
        }
    }

    fn point_at(&self, e: usize, t: Q) -> MetricPoint {
        let (a, b, _) = &self.edges[e];
        if t.is_zero() {
            MetricPoint::Vertex(*a)
        } else if t.is_one() {
            MetricPoint::Vertex(*b)
        } else {
            MetricPoint::Edge(e, t)
        }
    }
}

/// The metric spaces measures can live on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricSpace {
    Euclidean { dim: usize },
    Circle,
    Graph(WeightedGraph),
}

impl MetricSpace {
    pub fn real_line() -> Self {
        MetricSpace::Euclidean { dim: 1 }
    }

    /// Checks that `p` is a well-formed point of this space.
    pub fn check(&self, p: &MetricPoint) -> Result<()> {
        let ok = match (self, p) {
            (MetricSpace::Euclidean { dim }, MetricPoint::Euclidean(v)) => v.len() == *dim,
            (MetricSpace::Circle, MetricPoint::Circle(t)) => !t.is_negative() && *t < Q::one(),
            (MetricSpace::Graph(g), MetricPoint::Vertex(v)) => *v < g.vertex_count,
            (MetricSpace::Graph(g), MetricPoint::Edge(e, t)) => {
                *e < g.edges.len() && t.is_positive() && *t < Q::one()
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidMeasure(format!("point {p} does not belong to {self:?}")))
        }
    }

    pub fn distance(&self, p: &MetricPoint, q: &MetricPoint) -> f64 {
        match (self, p, q) {
            (MetricSpace::Euclidean { .. }, MetricPoint::Euclidean(a), MetricPoint::Euclidean(b)) => a
                .iter()
                .zip(b)
                .map(|(x, y)| {
                    let d = q_to_f64(&(x - y));
                    d * d
                })
                .sum::<f64>()
                .sqrt(),
            (MetricSpace::Circle, MetricPoint::Circle(a), MetricPoint::Circle(b)) => {
                let d = frac(&(a - b));
                let d = q_to_f64(&d.clone().min(Q::one() - d));
                TAU * d
            }
            (MetricSpace::Graph(g), _, _) => g.distance(p, q),
            _ => panic!("points {p} and {q} are not in {self:?}"),
        }
    }

    /// Geodesic interpolation from `p` (at `s = 0`) to `q` (at `s = 1`).
    pub fn interpolate(&self, p: &MetricPoint, q: &MetricPoint, s: &Q) -> Result<MetricPoint> {
        if p == q {
            return Ok(p.clone());
        }
        match (self, p, q) {
            (MetricSpace::Euclidean { .. }, MetricPoint::Euclidean(a), MetricPoint::Euclidean(b)) => {
                Ok(MetricPoint::Euclidean(a.iter().zip(b).map(|(x, y)| x + (y - x) * s).collect()))
            }
            (MetricSpace::Circle, MetricPoint::Circle(a), MetricPoint::Circle(b)) => {
                let delta = frac(&(b - a));
                let half = field::q(1, 2);
                if delta == half {
                    return Err(Error::InvalidPath(format!("{p} and {q} are antipodal; geodesic is ambiguous")));
                }
                let step = if delta < half { delta } else { delta - Q::one() };
                Ok(MetricPoint::turns(a + step * s))
            }
            (MetricSpace::Graph(g), _, _) => {
                for e in 0..g.edges.len() {
                    if let (Some(x), Some(y)) = (g.position_on(e, p), g.position_on(e, q)) {
                        return Ok(g.point_at(e, &x + (&y - &x) * s));
                    }
                }
                Err(Error::InvalidPath(format!("{p} and {q} do not share an edge")))
            }
            _ => Err(Error::InvalidPath(format!("points {p} and {q} are not in {self:?}"))),
        }
    }
}

/// Finitely supported probability measure with exact weights, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMeasure {
    atoms: Vec<(MetricPoint, Q)>,
}

impl FiniteMeasure {
    /// Canonicalizes (merge equal points, sort) and checks positivity and total mass 1.
    pub fn new(atoms: Vec<(MetricPoint, Q)>) -> Result<Self> {
        let m = Self::canonicalize(atoms);
        if m.atoms.iter().any(|(_, w)| !w.is_positive()) {
            return Err(Error::InvalidMeasure("weights must be positive".into()));
        }
        let total: Q = m.atoms.iter().map(|(_, w)| w.clone()).sum();
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!("total mass {} ≠ 1", field::fmt_q(&total))));
        }
        Ok(m)
    }

    /// Merges duplicate points and sorts; no mass checks. Zero-weight atoms are dropped.
    pub fn canonicalize(atoms: Vec<(MetricPoint, Q)>) -> Self {
        let mut atoms = atoms;
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(MetricPoint, Q)> = Vec::with_capacity(atoms.len());
        for (p, w) in atoms {
            match out.last_mut() {
                Some((lp, lw)) if *lp == p => *lw += w,
                _ => out.push((p, w)),
            }
        }
        out.retain(|(_, w)| !w.is_zero());
        FiniteMeasure { atoms: out }
    }

    pub fn atoms(&self) -> &[(MetricPoint, Q)] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_dirac(&self) -> bool {
        self.atoms.len() == 1
    }

    pub fn mass_of(&self, p: &MetricPoint) -> Q {
        self.atoms.iter().find(|(x, _)| x == p).map(|(_, w)| w.clone()).unwrap_or_else(Q::zero)
    }
}

impl Serialize for FiniteMeasure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(MetricPoint, String)> = self.atoms.iter().map(|(p, w)| (p.clone(), field::fmt_q(w))).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteMeasure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<(MetricPoint, String)> = Vec::deserialize(d)?;
        let atoms = v
            .into_iter()
            .map(|(p, w)| field::parse_q(&w).map(|w| (p, w)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        FiniteMeasure::new(atoms).map_err(serde::de::Error::custom)
    }
}

/// Finite subset of a metric space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteSet {
    pub points: BTreeSet<MetricPoint>,
}

impl FiniteSet {
    pub fn new(points: impl IntoIterator<Item = MetricPoint>) -> Self {
        FiniteSet { points: points.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn support(mu: &FiniteMeasure) -> FiniteSet {
    FiniteSet::new(mu.atoms.iter().map(|(p, _)| p.clone()))
}

pub fn dirac(x: MetricPoint) -> FiniteMeasure {
    FiniteMeasure { atoms: vec![(x, Q::one())] }
}

/// Default cap on `|supp μ ∪ supp ν|` for [`lp_distance`].
pub const LP_SUPPORT_CAP: usize = 16;

/// Lévy–Prokhorov distance with the default support cap.
pub fn lp_distance(space: &MetricSpace, mu: &FiniteMeasure, nu: &FiniteMeasure) -> Result<f64> {
    lp_distance_capped(space, mu, nu, LP_SUPPORT_CAP)
}

/// Lévy–Prokhorov distance by bisection over `ε ∈ [0, 1]` with an exact
/// subset feasibility check on the union of supports.
pub fn lp_distance_capped(space: &MetricSpace, mu: &FiniteMeasure, nu: &FiniteMeasure, cap: usize) -> Result<f64> {
    let table = LpTable::new(space, mu, nu, cap)?;
    if table.feasible(0.0) {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if table.feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Precomputed data for the feasibility predicate: integer masses over a common
/// denominator, per-subset mass sums and pairwise distances.
pub struct LpTable {
    n: usize,
    dist: Vec<Vec<f64>>,
    mu_sum: Vec<i128>,
    nu_sum: Vec<i128>,
    denom: f64,
}

impl LpTable {
    pub fn new(space: &MetricSpace, mu: &FiniteMeasure, nu: &FiniteMeasure, cap: usize) -> Result<Self> {
        let pts: Vec<MetricPoint> = support(mu).points.union(&support(nu).points).cloned().collect();
        let n = pts.len();
        if n > cap || n > 24 {
            return Err(Error::Budget(format!("support union has {n} points, cap is {cap}")));
        }
        for p in &pts {
            space.check(p)?;
        }
        let mut l = BigInt::one();
        for (_, w) in mu.atoms.iter().chain(&nu.atoms) {
            l = l.lcm(w.denom());
        }
        let to_int = |w: &Q| -> Result<i128> {
            (w.numer() * (&l / w.denom()))
                .to_i128()
                .ok_or_else(|| Error::Budget("weight denominators too large".into()))
        };
        let mut mu_w = vec![0i128; n];
        let mut nu_w = vec![0i128; n];
        for (i, p) in pts.iter().enumerate() {
            mu_w[i] = to_int(&mu.mass_of(p))?;
            nu_w[i] = to_int(&nu.mass_of(p))?;
        }
        let denom = l.to_f64().ok_or_else(|| Error::Budget("denominator too large".into()))?;
        let size = 1usize << n;
        let mut mu_sum = vec![0i128; size];
        let mut nu_sum = vec![0i128; size];
        for a in 1..size {
            let low = a.trailing_zeros() as usize;
            let rest = a & (a - 1);
            mu_sum[a] = mu_sum[rest] + mu_w[low];
            nu_sum[a] = nu_sum[rest] + nu_w[low];
        }
        let dist = pts.iter().map(|p| pts.iter().map(|q| space.distance(p, q)).collect()).collect();
        Ok(LpTable { n, dist, mu_sum, nu_sum, denom })
    }

    /// Whether `μ(A) ≤ ν(A^ε) + ε` and `ν(A) ≤ μ(A^ε) + ε` for every subset `A`,
    /// with closed `ε`-neighborhoods.
    pub fn feasible(&self, eps: f64) -> bool {
        let n = self.n;
        let nbhd: Vec<usize> = (0..n)
            .map(|i| (0..n).filter(|&j| self.dist[i][j] <= eps).fold(0usize, |m, j| m | (1 << j)))
            .collect();
        let size = 1usize << n;
        let mut grown = vec![0usize; size];
        for a in 1..size {
            let low = a.trailing_zeros() as usize;
            grown[a] = grown[a & (a - 1)] | nbhd[low];
        }
        (1..size).all(|a| {
            let g = grown[a];
            let d1 = (self.mu_sum[a] - self.nu_sum[g]) as f64 / self.denom;
            let d2 = (self.nu_sum[a] - self.mu_sum[g]) as f64 / self.denom;
            d1 <= eps && d2 <= eps
        })
    }

    pub fn points(&self) -> usize {
        self.n
    }
}

/// Hausdorff distance between nonempty finite sets.
pub fn hausdorff_distance(space: &MetricSpace, a: &FiniteSet, b: &FiniteSet) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidMeasure("Hausdorff distance of an empty set".into()));
    }
    let one_sided = |x: &FiniteSet, y: &FiniteSet| {
        x.points
            .iter()
            .map(|p| y.points.iter().map(|q| space.distance(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    Ok(one_sided(a, b).max(one_sided(b, a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qi};

    fn r(x: i64) -> MetricPoint {
        MetricPoint::real(qi(x))
    }

    #[test]
    fn canonical_merge() {
        let m = FiniteMeasure::new(vec![(r(1), q(1, 4)), (r(1), q(3, 4))]).unwrap();
        assert_eq!(support(&m).len(), 1);
        assert!(FiniteMeasure::new(vec![(r(1), q(1, 2))]).is_err());
    }

    #[test]
    fn lp_basic() {
        let s = MetricSpace::real_line();
        let x = dirac(MetricPoint::real(q(0, 1)));
        let y = dirac(MetricPoint::real(q(3, 10)));
        assert!((lp_distance(&s, &x, &y).unwrap() - 0.3).abs() < 1e-9);
        assert_eq!(lp_distance(&s, &x, &x).unwrap(), 0.0);
        let far = dirac(r(5));
        assert!((lp_distance(&s, &x, &far).unwrap() - 1.0).abs() < 1e-9);
        let half = FiniteMeasure::new(vec![(r(0), q(1, 2)), (r(5), q(1, 2))]).unwrap();
        assert!((lp_distance(&s, &half, &x).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn hausdorff_line() {
        let s = MetricSpace::real_line();
        let a = FiniteSet::new([r(0), r(10)]);
        let b = FiniteSet::new([r(0)]);
        assert_eq!(hausdorff_distance(&s, &a, &b).unwrap(), 10.0);
        assert!(hausdorff_distance(&s, &a, &FiniteSet::new([])).is_err());
    }

    #[test]
    fn circle_geodesics() {
        let s = MetricSpace::Circle;
        let a = MetricPoint::turns(q(9, 10));
        let b = MetricPoint::turns(q(1, 10));
        assert_eq!(s.interpolate(&a, &b, &q(1, 2)).unwrap(), MetricPoint::Circle(qi(0)));
        assert!((s.distance(&a, &b) - 0.2 * TAU).abs() < 1e-12);
        assert!(s.interpolate(&MetricPoint::turns(qi(0)), &MetricPoint::turns(q(1, 2)), &q(1, 2)).is_err());
    }

    #[test]
    fn graph_metric() {
        let g = WeightedGraph::new(3, vec![(0, 1, qi(1)), (1, 2, qi(2)), (0, 2, qi(4))]).unwrap();
        let s = MetricSpace::Graph(g);
        assert_eq!(s.distance(&MetricPoint::Vertex(0), &MetricPoint::Vertex(2)), 3.0);
        let mid = MetricPoint::Edge(2, q(1, 2));
        assert_eq!(s.distance(&MetricPoint::Vertex(0), &mid), 2.0);
        let p = s.interpolate(&MetricPoint::Vertex(1), &MetricPoint::Vertex(2), &q(1, 4)).unwrap();
        assert_eq!(p, MetricPoint::Edge(1, q(1, 4)));
    }

    #[test]
    fn point_json() {
        let p = MetricPoint::Edge(2, q(1, 3));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"edge":[2,"1/3"]}"#);
        assert_eq!(serde_json::from_str::<MetricPoint>(&s).unwrap(), p);
        let c: MetricPoint = serde_json::from_str(r#"{"circle":"1/4"}"#).unwrap();
        assert_eq!(c, MetricPoint::Circle(q(1, 4)));
    }
}
