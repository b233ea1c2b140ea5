use intertwine::field::q;
use intertwine::navigate::{
    circle_navigate, join_weights, sequential_compose, theta_concat, CircleNavigator, PairNavigator, SampledPath,
    TimestampScheme,
};
use intertwine::strand::{enumerate_resolvers, min_support, Sample};
use intertwine::{MetricPoint, MetricSpace, Q};
use num::{One, Zero};
use proptest::prelude::*;

fn line_path(a: Q, b: Q) -> SampledPath {
    SampledPath::new(
        MetricSpace::real_line(),
        vec![Sample(Q::zero(), MetricPoint::real(a)), Sample(Q::one(), MetricPoint::real(b))],
    )
    .unwrap()
}

#[test]
fn uniform_breakpoints() {
    assert_eq!(TimestampScheme::uniform(3).breakpoints(), vec![q(0, 1), q(1, 3), q(2, 3), q(1, 1)]);
    assert!(TimestampScheme::new(vec![q(2, 1), q(3, 1)]).is_err());
    assert!(TimestampScheme::new(vec![q(1, 1)]).is_err());
}

#[test]
fn theta_concat_rejects_gaps() {
    let s = TimestampScheme::uniform(2);
    assert!(theta_concat(&[line_path(q(0, 1), q(1, 1)), line_path(q(2, 1), q(3, 1))], &s).is_err());
    assert!(theta_concat(&[line_path(q(0, 1), q(1, 1))], &s).is_err());
}

#[test]
fn circle_navigation_endpoints() {
    let nav = circle_navigate(&q(1, 8), &q(5, 8)).unwrap();
    assert_eq!(nav.measures.len(), 101);
    assert!(nav.measures[0].is_dirac() && nav.measures[100].is_dirac());
    assert_eq!(nav.measures[50].len(), 2);
    let stay = CircleNavigator.navigate(&MetricPoint::turns(q(1, 3)), &MetricPoint::turns(q(1, 3))).unwrap();
    assert_eq!(min_support(&stay).unwrap(), 1);
}

#[test]
fn composition_has_two_vertex_resolvers_per_segment_choice() {
    let pts: Vec<MetricPoint> = [q(0, 1), q(1, 4), q(2, 3)].into_iter().map(MetricPoint::turns).collect();
    let d = sequential_compose(&CircleNavigator, &pts).unwrap();
    assert_eq!(d.event_times, vec![q(0, 1), q(1, 2), q(1, 1)]);
    let rep = enumerate_resolvers(&d, 2).unwrap();
    assert_eq!(rep.vertex_resolvers.len(), 2);
    for t in [q(0, 1), q(1, 2), q(1, 1)] {
        assert!(d.measure_at(&t).unwrap().is_dirac());
    }
}

fn arb_scheme() -> impl Strategy<Value = TimestampScheme> {
    proptest::collection::btree_set(1001i64..=50_000, 0..6).prop_map(|s| {
        let mut a: Vec<Q> = s.into_iter().map(|k| q(k, 1000)).collect();
        a.reverse();
        TimestampScheme::new(a).unwrap()
    })
}

proptest! {
    #[test]
    fn join_weights_partition_unity(m in 2usize..=8, num in 0i64..=997, den in 1i64..=997) {
        let t = q(num.min(den), den);
        let w = join_weights(m, &t);
        prop_assert_eq!(w.iter().sum::<Q>(), Q::one());
        prop_assert!(w.iter().all(|x| *x >= Q::zero()));
    }

    #[test]
    fn join_weights_interpolate_nodes(m in 2usize..=8) {
        for i in 0..m {
            let w = join_weights(m, &q(i as i64, (m - 1) as i64));
            for (j, x) in w.iter().enumerate() {
                prop_assert_eq!(x.clone(), if i == j { Q::one() } else { Q::zero() });
            }
        }
    }

    #[test]
    fn theta_breakpoints_hit_endpoints(s in arb_scheme(), pts in proptest::collection::vec(0i64..=32, 7)) {
        let m = s.pieces();
        let b = s.breakpoints();
        for i in 0..m {
            prop_assert!(s.piece_parameter(i, &b[i]).is_zero());
            prop_assert!(s.piece_parameter(i, &b[i + 1]).is_one());
        }
        let xs: Vec<Q> = pts[..=m].iter().map(|k| q(*k, 8)).collect();
        let paths: Vec<SampledPath> = xs.windows(2).map(|w| line_path(w[0].clone(), w[1].clone())).collect();
        let cat = theta_concat(&paths, &s).unwrap();
        for (i, t) in b.iter().enumerate() {
            prop_assert_eq!(cat.at(t).unwrap(), MetricPoint::real(xs[i].clone()));
        }
    }

    #[test]
    fn local_parameter_is_monotone_on_pieces(s in arb_scheme(), k in 0i64..=100) {
        let t = q(k, 100);
        let (i, u) = s.local_parameter(&t);
        prop_assert!(u >= Q::zero() && u <= Q::one());
        let b = s.breakpoints();
        prop_assert!(b[i] <= t && t <= b[i + 1]);
    }

    #[test]
    fn circle_triples_need_two_strands(a in 0i64..360, b in 0i64..360, c in 0i64..360) {
        let pts: Vec<MetricPoint> = [a, b, c].iter().map(|k| MetricPoint::turns(q(*k, 360))).collect();
        let d = sequential_compose(&CircleNavigator, &pts).unwrap();
        let want = if a == b && b == c { 1 } else { 2 };
        prop_assert_eq!(min_support(&d).unwrap(), want);
    }
}
