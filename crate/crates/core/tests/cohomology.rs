use intertwine::complex::{betti_numbers, cochain_complex, cohomology_ring, SimplicialComplex};
use intertwine::reproduce::data_dir;
use intertwine::ring::{
    cup_length, diagonal_kernel, tensor_product, zero_divisor_cup_length, GradedAlgebra,
};
use intertwine::FieldSpec;
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;
const Z2: FieldSpec = FieldSpec::Prime(2);

fn load(name: &str) -> SimplicialComplex {
    SimplicialComplex::load(data_dir().join("complexes").join(format!("{name}.cx"))).unwrap()
}

#[test]
fn corpus_betti_numbers() {
    for (name, f, want) in [
        ("circle", Q, vec![1, 1]),
        ("sphere2", Q, vec![1, 0, 1]),
        ("torus", Q, vec![1, 2, 1]),
        ("genus2", Q, vec![1, 4, 1]),
        ("rp2", Q, vec![1, 0, 0]),
        ("rp2", Z2, vec![1, 1, 1]),
        ("wedge2", Q, vec![1, 2]),
    ] {
        assert_eq!(betti_numbers(&load(name), f).unwrap(), want, "{name} over {f}");
    }
    assert_eq!(load("torus").face_counts(), vec![7, 21, 14]);
    assert_eq!(load("genus2").euler_characteristic(), -2);
}

#[test]
fn field_changes_cup_length() {
    let rp2 = load("rp2");
    assert_eq!(cup_length(&cohomology_ring(&rp2, Q).unwrap()), 0);
    assert_eq!(cup_length(&cohomology_ring(&rp2, Z2).unwrap()), 2);
    let s2 = cohomology_ring(&load("sphere2"), Z2).unwrap();
    assert_eq!(zero_divisor_cup_length(&s2, 2).unwrap(), 1);
}

#[test]
fn sphere_zero_divisors_follow_parity() {
    for k in 1..=4usize {
        let s = GradedAlgebra::sphere(k, Q);
        for m in 2..=3usize {
            let want = if k % 2 == 1 { m - 1 } else { m };
            assert_eq!(zero_divisor_cup_length(&s, m).unwrap(), want, "S^{k}, m = {m}");
        }
    }
}

#[test]
fn products_add_zero_divisor_lengths() {
    for (a, b) in [(1, 1), (1, 2), (2, 2), (3, 3)] {
        let sa = GradedAlgebra::sphere(a, Q);
        let sb = GradedAlgebra::sphere(b, Q);
        let p = tensor_product(&[&sa, &sb]).unwrap().algebra;
        p.check_axioms().unwrap();
        let z = |k: usize| if k % 2 == 1 { 1 } else { 2 };
        assert_eq!(cup_length(&p), 2);
        assert_eq!(zero_divisor_cup_length(&p, 2).unwrap(), z(a) + z(b), "S^{a} x S^{b}");
    }
}

#[test]
fn truncated_polynomials() {
    for h in 1..=3usize {
        let cp = GradedAlgebra::truncated_polynomial("cp", 2, h, Q).unwrap();
        assert_eq!(cup_length(&cp), h);
        assert_eq!(zero_divisor_cup_length(&cp, 2).unwrap(), 2 * h, "CP^{h}");
    }
}

#[test]
fn kernel_is_an_ideal() {
    let torus = cohomology_ring(&load("torus"), Q).unwrap();
    for m in 2..=3 {
        let (pow, ker) = diagonal_kernel(&torus, m).unwrap();
        assert!(ker.is_closed_in(&pow.algebra));
        let total: usize = pow.algebra.dims.iter().sum();
        assert_eq!(ker.dims().iter().sum::<usize>(), total - torus.total_dim());
    }
}

#[test]
fn simplicial_ring_matches_abstract_ring() {
    let torus = cohomology_ring(&load("torus"), Q).unwrap();
    let s1 = GradedAlgebra::sphere(1, Q);
    let t = tensor_product(&[&s1, &s1]).unwrap().algebra;
    assert_eq!(torus.dims, t.dims);
    assert_eq!(cup_length(&torus), cup_length(&t));
    assert_eq!(zero_divisor_cup_length(&torus, 2).unwrap(), zero_divisor_cup_length(&t, 2).unwrap());
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (3usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=4), 0..8).prop_map(move |extra| {
            let mut simplices: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
            simplices.extend(extra.into_iter().map(|s| s.into_iter().collect::<Vec<_>>()));
            let maximal: Vec<Vec<usize>> = simplices
                .iter()
                .filter(|s| !simplices.iter().any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v))))
                .cloned()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            SimplicialComplex::new("random", n, maximal).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundary_squares_to_zero(k in arb_complex(), prime in prop::bool::ANY) {
        let f = if prime { Z2 } else { Q };
        let cc = cochain_complex(&k, f).unwrap();
        for w in cc.delta.windows(2) {
            prop_assert!(w[1].mul(&w[0], f).is_zero());
        }
    }

    #[test]
    fn euler_characteristic_from_betti(k in arb_complex(), prime in prop::bool::ANY) {
        let f = if prime { Z2 } else { Q };
        let b = betti_numbers(&k, f).unwrap();
        let chi: i64 = b.iter().enumerate().map(|(i, x)| if i % 2 == 0 { *x as i64 } else { -(*x as i64) }).sum();
        prop_assert_eq!(chi, k.euler_characteristic());
        prop_assert_eq!(b[0], 1);
    }

    #[test]
    fn cohomology_rings_satisfy_axioms(k in arb_complex()) {
        let ring = cohomology_ring(&k, Q).unwrap();
        prop_assert!(ring.check_axioms().is_ok());
        let mut b = betti_numbers(&k, Q).unwrap();
        while b.len() > 1 && b.last() == Some(&0) {
            b.pop();
        }
        prop_assert_eq!(ring.dims.clone(), b);
        prop_assert!(cup_length(&ring) <= k.dimension());
    }
}
