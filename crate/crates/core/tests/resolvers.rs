use intertwine::field::q;
use intertwine::reproduce::{corpus_diagrams, data_dir};
use intertwine::strand::{
    enumerate_resolvers, find_collapse, min_support, pushforward, symmetric_trace, uniform_times, BranchingDiagram,
    Resolver,
};
use intertwine::Q;
use num::One;

fn load(name: &str) -> BranchingDiagram {
    BranchingDiagram::load(data_dir().join("diagrams").join(format!("{name}.bd"))).unwrap()
}

fn r(pairs: &[(&[&str], Q)]) -> Resolver {
    Resolver::from_pairs(pairs)
}

fn vertices(d: &BranchingDiagram, n: usize) -> Vec<Resolver> {
    enumerate_resolvers(d, n).unwrap().vertex_resolvers
}

#[test]
fn example1_two_vertices_and_interior_point() {
    let d = load("example1");
    let v = vertices(&d, 3);
    let mu = r(&[(&["a", "a2"], q(1, 2)), (&["b", "b2"], q(1, 2))]);
    let nu = r(&[(&["a", "b2"], q(1, 2)), (&["b", "a2"], q(1, 2))]);
    assert_eq!(v.len(), 2);
    assert!(v.contains(&mu) && v.contains(&nu));
    let quarter = r(&[
        (&["a", "a2"], q(1, 4)),
        (&["b", "b2"], q(1, 4)),
        (&["a", "b2"], q(1, 4)),
        (&["b", "a2"], q(1, 4)),
    ]);
    d.check_resolver(&quarter).unwrap();
    assert!(!vertices(&d, 4).contains(&quarter));
}

#[test]
fn example2_stated_resolvers() {
    let d = load("example2");
    let mu = r(&[(&["a", "c1"], q(1, 4)), (&["a", "c2"], q(1, 4)), (&["b", "c2"], q(1, 2))]);
    let nu = r(&[(&["a", "c2"], q(1, 2)), (&["b", "c1"], q(1, 4)), (&["b", "c2"], q(1, 4))]);
    let v = vertices(&d, 3);
    assert_eq!(v.len(), 2);
    assert!(v.contains(&mu) && v.contains(&nu));
    assert!(vertices(&d, 2).is_empty());
}

#[test]
fn example3_stated_resolvers_are_vertices() {
    let d = load("example3");
    let v = vertices(&d, 4);
    let third = q(1, 3);
    let sixth = q(1, 6);
    let stated = [
        r(&[(&["a", "p"], third.clone()), (&["c", "p"], sixth.clone()), (&["c", "r"], sixth.clone()), (&["b", "q"], third.clone())]),
        r(&[(&["c", "p"], third.clone()), (&["a", "p"], sixth.clone()), (&["a", "r"], sixth.clone()), (&["b", "q"], third.clone())]),
        r(&[(&["b", "p"], third.clone()), (&["c", "r"], sixth.clone()), (&["c", "p"], sixth.clone()), (&["a", "q"], third.clone())]),
        r(&[(&["b", "p"], third.clone()), (&["a", "r"], sixth.clone()), (&["a", "p"], sixth.clone()), (&["c", "q"], third.clone())]),
    ];
    for s in &stated {
        d.check_resolver(s).unwrap();
        assert!(v.contains(s), "{s} missing");
    }
    assert_eq!(min_support(&d).unwrap(), 4);
    assert!(vertices(&d, 3).is_empty());
}

#[test]
fn example4_counts() {
    let d = load("example4");
    let rep = enumerate_resolvers(&d, 4).unwrap();
    let mu = r(&[
        (&["a", "p", "u"], q(1, 3)),
        (&["c", "p", "u"], q(1, 6)),
        (&["c", "r", "u"], q(1, 6)),
        (&["b", "q", "v"], q(1, 3)),
    ]);
    assert!(rep.vertex_resolvers.contains(&mu));
    assert_eq!((rep.route_count, rep.constraint_rank, rep.polytope_dimension), (18, 6, 12));
    // Regression constant: vertices of support at most 4.
    assert_eq!(rep.vertex_resolvers.len(), 18);
    assert!(vertices(&d, 3).is_empty());
}

#[test]
fn counterexample_resolvers_collapse() {
    let d = load("counterexample");
    let mu = r(&[(&["alpha", "a1"], q(1, 2)), (&["gamma", "b1"], q(1, 4)), (&["gamma", "c1"], q(1, 4))]);
    let nu = r(&[(&["gamma", "a1"], q(1, 2)), (&["alpha", "b1"], q(1, 4)), (&["alpha", "c1"], q(1, 4))]);
    let v = vertices(&d, 3);
    assert!(v.contains(&mu) && v.contains(&nu));
    let times = uniform_times(100);
    let w = find_collapse(&d, std::slice::from_ref(&mu), &times).unwrap().expect("collapse");
    assert_eq!(w.resolver, mu);
    assert!(w.s < w.t && w.t <= q(1, 2));
}

#[test]
fn pushforward_matches_measure_path_everywhere() {
    let times = uniform_times(100);
    for (name, d) in corpus_diagrams(&data_dir()).unwrap() {
        let path: Vec<_> = times.iter().map(|t| d.measure_at(t).unwrap()).collect();
        for v in vertices(&d, 4) {
            assert_eq!(pushforward(&v, &d, &times).unwrap(), path, "{name}: {v}");
            assert_eq!(v.weights.values().sum::<Q>(), Q::one());
        }
    }
}

#[test]
fn support_two_traces_agree() {
    let times = uniform_times(100);
    for (name, d) in corpus_diagrams(&data_dir()).unwrap() {
        let traces: Vec<_> = vertices(&d, 2).iter().map(|v| symmetric_trace(v, &d, &times).unwrap()).collect();
        assert!(traces.windows(2).all(|w| w[0] == w[1]), "{name}");
    }
}

#[test]
fn graph_realization_matches_circle_counts() {
    let a = enumerate_resolvers(&load("example1"), 4).unwrap();
    let b = enumerate_resolvers(&load("example5"), 4).unwrap();
    assert_eq!(a.vertex_resolvers, b.vertex_resolvers);
}
