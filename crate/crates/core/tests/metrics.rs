use intertwine::field::{q, q_to_f64};
use intertwine::measure::{dirac, hausdorff_distance, lp_distance, lp_distance_capped, support};
use intertwine::reproduce::{lp_bruteforce, test_spaces};
use intertwine::{Error, FiniteMeasure, FiniteSet, MetricPoint, MetricSpace, Q};
use proptest::prelude::*;

const TOL: f64 = 2e-9;

/// Smallest candidate radius passing the defining subset inequality; the infimum
/// is always a pairwise distance or a difference of subset masses.
fn lp_oracle(space: &MetricSpace, mu: &FiniteMeasure, nu: &FiniteMeasure) -> f64 {
    let a = mu.atoms();
    let b = nu.atoms();
    let masses = |xs: &[(MetricPoint, Q)]| -> Vec<Q> {
        (0..1u32 << xs.len())
            .map(|m| xs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, x)| x.1.clone()).sum())
            .collect()
    };
    let (ma, mb) = (masses(a), masses(b));
    let mut cand: Vec<f64> = vec![0.0, 1.0];
    for x in a {
        for y in b {
            cand.push(space.distance(&x.0, &y.0));
        }
    }
    for s in &ma {
        for t in &mb {
            cand.push(q_to_f64(&(s - t)).abs());
        }
    }
    cand.retain(|c| (0.0..=1.0).contains(c));
    cand.sort_by(|x, y| x.total_cmp(y));
    let one_way = |a: &[(MetricPoint, Q)], b: &[(MetricPoint, Q)], eps: f64| {
        (1u32..1 << a.len()).all(|m| {
            let chosen: Vec<&MetricPoint> = a.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, x)| &x.0).collect();
            let mass_a: f64 = a.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, x)| q_to_f64(&x.1)).sum();
            let mass_b: f64 = b
                .iter()
                .filter(|(y, _)| chosen.iter().any(|x| space.distance(x, y) <= eps))
                .map(|(_, w)| q_to_f64(w))
                .sum();
            mass_a <= mass_b + eps + 1e-12
        })
    };
    cand.into_iter().find(|&e| one_way(a, b, e) && one_way(b, a, e)).unwrap_or(1.0)
}

fn hausdorff_oracle(space: &MetricSpace, a: &FiniteSet, b: &FiniteSet) -> f64 {
    let side = |x: &FiniteSet, y: &FiniteSet| {
        x.points.iter().map(|p| y.points.iter().map(|r| space.distance(p, r)).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max)
    };
    side(a, b).max(side(b, a))
}

fn arb_point(kind: usize) -> BoxedStrategy<MetricPoint> {
    match kind {
        0 => (0i64..=16).prop_map(|k| MetricPoint::real(q(k, 8))).boxed(),
        1 => (0i64..=8, 0i64..=8).prop_map(|(x, y)| MetricPoint::Euclidean(vec![q(x, 8), q(y, 8)])).boxed(),
        2 => (0i64..12).prop_map(|k| MetricPoint::turns(q(k, 12))).boxed(),
        _ => prop_oneof![
            (0usize..4).prop_map(MetricPoint::Vertex),
            (0usize..4, 1i64..4).prop_map(|(e, k)| MetricPoint::Edge(e, q(k, 4))),
        ]
        .boxed(),
    }
}

fn arb_measure(kind: usize) -> impl Strategy<Value = FiniteMeasure> {
    proptest::collection::vec((arb_point(kind), 1i64..=6), 1..=4).prop_map(|atoms| {
        let total: i64 = atoms.iter().map(|a| a.1).sum();
        FiniteMeasure::canonicalize(atoms.into_iter().map(|(p, w)| (p, q(w, total))).collect())
    })
}

fn arb_set(kind: usize) -> impl Strategy<Value = FiniteSet> {
    proptest::collection::vec(arb_point(kind), 1..=5).prop_map(FiniteSet::new)
}

fn triple() -> impl Strategy<Value = (usize, FiniteMeasure, FiniteMeasure, FiniteMeasure)> {
    (0usize..4).prop_flat_map(|k| (Just(k), arb_measure(k), arb_measure(k), arb_measure(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lp_matches_oracles((k, x, y, _) in triple()) {
        let sp = &test_spaces()[k];
        let d = lp_distance(sp, &x, &y).unwrap();
        let o = lp_oracle(sp, &x, &y);
        prop_assert!((d - o).abs() <= TOL, "lp {d} oracle {o}");
        prop_assert!((d - lp_bruteforce(sp, &x, &y)).abs() <= TOL);
    }

    #[test]
    fn lp_is_a_metric((k, x, y, z) in triple()) {
        let sp = &test_spaces()[k];
        let (dxy, dyz, dxz) = (lp_distance(sp, &x, &y).unwrap(), lp_distance(sp, &y, &z).unwrap(), lp_distance(sp, &x, &z).unwrap());
        prop_assert!(lp_distance(sp, &x, &x).unwrap() == 0.0);
        prop_assert!((dxy - lp_distance(sp, &y, &x).unwrap()).abs() <= TOL);
        prop_assert!(dxz <= dxy + dyz + TOL);
        prop_assert_eq!(dxy == 0.0, x == y);
    }

    #[test]
    fn hausdorff_is_a_metric((a, b, c) in (0usize..4).prop_flat_map(|k| (arb_set(k), arb_set(k), arb_set(k)))) {
        for sp in test_spaces() {
            if a.points.iter().chain(&b.points).chain(&c.points).any(|p| sp.check(p).is_err()) {
                continue;
            }
            let h = |x: &FiniteSet, y: &FiniteSet| hausdorff_distance(&sp, x, y).unwrap();
            prop_assert!((h(&a, &b) - hausdorff_oracle(&sp, &a, &b)).abs() <= TOL);
            prop_assert!((h(&a, &b) - h(&b, &a)).abs() <= TOL);
            prop_assert!(h(&a, &c) <= h(&a, &b) + h(&b, &c) + TOL);
            prop_assert_eq!(h(&a, &b) == 0.0, a == b);
        }
    }

    #[test]
    fn canonicalize_is_idempotent((_k, x, _, _) in triple()) {
        let again = FiniteMeasure::canonicalize(x.atoms().to_vec());
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(x.atoms().iter().map(|a| a.1.clone()).sum::<Q>(), q(1, 1));
        prop_assert_eq!(support(&x).len(), x.len());
    }
}

#[test]
fn dirac_distance_is_capped_metric() {
    for sp in test_spaces() {
        let pts: Vec<MetricPoint> = match &sp {
            MetricSpace::Euclidean { dim: 1 } => (0..=16).map(|k| MetricPoint::real(q(k, 8))).collect(),
            MetricSpace::Circle => (0..12).map(|k| MetricPoint::turns(q(k, 12))).collect(),
            _ => continue,
        };
        for x in &pts {
            for y in &pts {
                let d = lp_distance(&sp, &dirac(x.clone()), &dirac(y.clone())).unwrap();
                assert!((d - sp.distance(x, y).min(1.0)).abs() <= TOL);
            }
        }
    }
}

#[test]
fn support_cap_is_a_budget_error() {
    let line = MetricSpace::real_line();
    let mu = FiniteMeasure::new((0..5).map(|k| (MetricPoint::real(q(k, 1)), q(1, 5))).collect()).unwrap();
    let nu = dirac(MetricPoint::real(q(1, 2)));
    assert!(matches!(lp_distance_capped(&line, &mu, &nu, 4), Err(Error::Budget(_))));
}

#[test]
fn measures_must_be_probability() {
    assert!(FiniteMeasure::new(vec![(MetricPoint::real(q(0, 1)), q(1, 2))]).is_err());
    assert!(FiniteMeasure::new(vec![(MetricPoint::real(q(0, 1)), q(3, 2)), (MetricPoint::real(q(1, 1)), q(-1, 2))]).is_err());
}
