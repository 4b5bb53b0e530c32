use dualgraph::arrangement::SubspaceArrangement;
use dualgraph::census;
use dualgraph::complex::{crosspolytope_boundary, simplex_boundary};
use dualgraph::graph::dual_graph;
use dualgraph::homology::{is_homology_sphere, regularity, DEFAULT_HOCHSTER_CAP};
use dualgraph::{Error, FieldSpec};
use num_rational::BigRational;
use proptest::prelude::*;

#[test]
fn coordinate_arrangements_match_complexes() {
    for k in 1..=4 {
        for c in census::pure_complexes(5, k).unwrap() {
            if c.facet_count() > 12 {
                continue;
            }
            match SubspaceArrangement::from_complex(&c) {
                Ok(a) => {
                    assert_eq!(a.multiplicity(), c.facet_count());
                    assert!(a.heights().iter().all(|&h| h == c.height_of_ideal().unwrap()));
                    assert_eq!(a.dual_graph().unwrap().edges(), dual_graph(&c).unwrap().edges());
                    let g = a.dual_graph().unwrap();
                    assert_eq!(g.order(), a.multiplicity());
                }
                Err(Error::Hypothesis(_)) => assert_eq!(c.facet_count(), 1, "{c:?}"),
                Err(e) => panic!("{c:?}: {e}"),
            }
        }
    }
}

#[test]
fn hyperplane_sections_preserve_the_dual_graph() {
    let inputs = [
        crosspolytope_boundary(3).unwrap(),
        crosspolytope_boundary(4).unwrap(),
        simplex_boundary(4).unwrap(),
        crosspolytope_boundary(2).unwrap().join(&simplex_boundary(2).unwrap()).unwrap(),
    ];
    for c in &inputs {
        let a = SubspaceArrangement::from_complex(c).unwrap();
        for seed in 0..5 {
            let s = a.generic_hyperplane_section(seed).unwrap();
            assert_eq!(s.variables(), a.variables() - 1);
            assert_eq!(s.len(), a.len());
            assert_eq!(s.heights(), a.heights());
            assert!(s.dual_graph().unwrap().is_isomorphic(&a.dual_graph().unwrap()));
        }
    }
}

#[test]
fn generated_spheres_are_regularity_connected() {
    let cp = |r| crosspolytope_boundary(r).unwrap();
    let sb = |d| simplex_boundary(d).unwrap();
    let spheres = [cp(2), cp(3), cp(4), sb(2), sb(3), sb(4), cp(2).join(&sb(2)).unwrap(), sb(2).join(&sb(2)).unwrap()];
    for c in &spheres {
        assert!(is_homology_sphere(c, FieldSpec::Rationals).unwrap());
        let r = regularity(c, FieldSpec::Rationals, DEFAULT_HOCHSTER_CAP).unwrap().value;
        let a = SubspaceArrangement::from_complex(c).unwrap();
        assert!(a.verify_regularity_connectivity(r).unwrap().passed, "{c:?}");
    }
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn json_round_trip(forms in proptest::collection::vec(proptest::collection::vec(rational(), 3), 1..4)) {
        let components: Vec<Vec<Vec<BigRational>>> = forms.into_iter().map(|f| vec![f]).collect();
        if let Ok(a) = SubspaceArrangement::new(3, components) {
            let text = a.to_json();
            let back = SubspaceArrangement::from_json(&text).unwrap();
            prop_assert_eq!(back.to_json(), text);
            prop_assert_eq!(back, a);
        }
    }

    #[test]
    fn multiplicity_counts_components(seed in any::<u64>()) {
        let a = SubspaceArrangement::from_complex(&crosspolytope_boundary(3).unwrap()).unwrap();
        let s = a.generic_hyperplane_section(seed).unwrap();
        prop_assert_eq!(s.multiplicity(), 8);
    }
}
