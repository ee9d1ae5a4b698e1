use layerwr::distance::{is_nontrivial_logical, logical_basis};
use layerwr::expansion::{check_tensor_bound, GraphComplex};
use layerwr::hastings::{hastings_pipeline, HastingsOptions};
use layerwr::{
    distance_exact, distance_lower_bound, distance_upper, fixtures, lift_logical, sparsify, CodeFile, Distance, SearchOptions,
    Side, SparsifyOptions,
};
use num_rational::Ratio;
use proptest::prelude::*;

#[test]
fn tri_distances_respect_the_bound() {
    let tri = fixtures::tri();
    let s = sparsify(&tri, &SparsifyOptions::default()).unwrap();
    for side in [Side::X, Side::Z] {
        let d = distance_exact(&tri, side).unwrap().distance;
        let bound = distance_lower_bound(&tri, s.report.chi, side, d).unwrap();
        let out = distance_exact(&s.code, side).unwrap().distance.finite().unwrap();
        assert!(Ratio::from_integer(out as u64) >= bound, "{side}: {out} < {bound}");
    }
}

#[test]
fn lifted_logicals_stay_nontrivial() {
    for i in 0..6 {
        let code = fixtures::bulk_instance(i);
        let s = sparsify(&code, &SparsifyOptions::default()).unwrap();
        for la in logical_basis(&code, Side::X) {
            let l = lift_logical(&s.assembly, &la).unwrap();
            assert!(is_nontrivial_logical(&s.code, Side::X, &l), "instance {i}");
        }
    }
}

#[test]
fn upper_search_never_beats_exact() {
    for i in 0..8 {
        let code = fixtures::bulk_instance(i);
        for side in [Side::X, Side::Z] {
            let d = distance_exact(&code, side).unwrap().distance;
            let u = distance_upper(&code, side, SearchOptions::new(200, i)).unwrap().distance;
            assert!(u >= d, "instance {i} side {side}");
            let again = distance_upper(&code, side, SearchOptions::new(200, i)).unwrap().distance;
            assert_eq!(u, again);
        }
    }
}

#[test]
fn sparsified_output_round_trips_through_files() {
    let s = sparsify(&fixtures::steane(), &SparsifyOptions::default()).unwrap();
    let text = CodeFile::from_code(&s.code).render();
    let back = CodeFile::parse(&text).unwrap();
    assert_eq!(back.render(), text);
    assert_eq!(back.to_code().unwrap(), s.code);
}

#[test]
fn hastings_on_reasonable_products() {
    let mut ran = 0;
    for i in 0..12 {
        let code = fixtures::bulk_instance(i);
        if code.n() > 20 {
            continue;
        }
        match hastings_pipeline(&code, &HastingsOptions::default()) {
            Ok(r) => {
                assert!(r.report.k_preserved, "instance {i}");
                assert!(r.report.cone.image_preserved, "instance {i}");
                ran += 1;
            }
            Err(layerwr::Error::Reasonableness { .. }) => {}
            Err(e) => panic!("instance {i}: {e}"),
        }
    }
    assert!(ran > 0);
}

fn factors() -> Vec<(&'static str, GraphComplex)> {
    vec![
        ("R(1)", GraphComplex::repetition(1)),
        ("R(2)", GraphComplex::repetition(2)),
        ("R(3)", GraphComplex::repetition(3)),
        ("R(4)", GraphComplex::repetition(4)),
        ("C(4)", GraphComplex::new(4, vec![[0, 1], [1, 2], [2, 3], [3, 0]])),
        ("K(1,3)", GraphComplex::new(4, vec![[0, 1], [0, 2], [0, 3]])),
    ]
}

#[test]
fn tensor_bound_on_small_factors() {
    let fs = factors();
    let prefixes = |n: usize| -> Vec<Vec<usize>> { (0..=n).map(|w| (0..w).collect()).collect() };
    for (na, a) in &fs {
        for (nb, b) in &fs {
            if a.vertices * b.vertices > 16 {
                continue;
            }
            for pa in prefixes(a.vertices) {
                for pb in prefixes(b.vertices) {
                    if pa.is_empty() && pb.is_empty() {
                        continue;
                    }
                    let r = check_tensor_bound(a, b, &pa, &pb).unwrap();
                    assert!(r.holds, "{na} x {nb}, pa={pa:?}, pb={pb:?}: {r:?}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sparsify_preserves_k_on_products(s1 in 0u64..1000, s2 in 0u64..1000) {
        let code = fixtures::hypergraph_product(
            &fixtures::random_classical(4, 2, 2, s1),
            &fixtures::random_classical(3, 2, 2, s2),
        );
        let s = sparsify(&code, &SparsifyOptions::default()).unwrap();
        prop_assert_eq!(s.code.k(), code.k());
        prop_assert!(s.report.flags.all(), "{:?}", s.report.flags.failures());
        if let Some(b) = s.report.bound_x {
            if let (Some(r), Distance::Finite(_)) = (b.ratio(), b.input_distance) {
                let u = distance_upper(&s.code, Side::X, SearchOptions::new(50, s1)).unwrap().distance;
                if let Distance::Finite(w) = u {
                    prop_assert!(Ratio::from_integer(w as u64) >= r);
                }
            }
        }
    }
}
