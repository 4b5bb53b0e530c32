use dualgraph::census;
use dualgraph::complex::{clique_complex, crosspolytope_boundary, simplex_boundary, triangle_with_tail};
use dualgraph::graph::{dual_graph, Diameter};
use dualgraph::{Graph, SimplicialComplex, VertexSet};
use proptest::prelude::*;

/// Product of the face polynomials `Σ f_{i-1} t^i`.
fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_skeleton(c: &SimplicialComplex) -> Graph {
    let mut g = Graph::with_vertices(c.labels()).unwrap();
    for face in &c.faces_by_size()[2.min(c.faces_by_size().len() - 1)] {
        let v = face.to_vec();
        if v.len() == 2 {
            g.add_index_edge(v[0], v[1]).unwrap();
        }
    }
    g
}

#[test]
fn minimal_nonfaces_match_subset_search() {
    for c in census::labeled_complexes(5).unwrap() {
        let n = c.vertex_count();
        let mut expected: Vec<VertexSet> = VertexSet::full(n)
            .subsets()
            .filter(|s| !c.is_face(s) && s.iter().all(|v| {
                let mut t = s.clone();
                t.remove(v);
                c.is_face(&t)
            }))
            .collect();
        expected.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        assert_eq!(c.minimal_nonfaces(), expected, "{c:?}");
    }
}

#[test]
fn flag_means_clique_complex_of_the_skeleton() {
    for c in census::labeled_complexes(5).unwrap() {
        if c.vertex_count() == 0 {
            continue;
        }
        let rebuilt = clique_complex(&one_skeleton(&c)).unwrap();
        assert_eq!(c.is_flag(), rebuilt == c, "{c:?}");
    }
}

#[test]
fn self_join_doubles_diameter_and_height() {
    let inputs = [
        crosspolytope_boundary(2).unwrap(),
        crosspolytope_boundary(3).unwrap(),
        simplex_boundary(3).unwrap(),
        triangle_with_tail(),
    ];
    for c in &inputs {
        let j = c.join(c).unwrap();
        let d = dual_graph(c).unwrap().diameter().unwrap();
        let dj = dual_graph(&j).unwrap().diameter().unwrap();
        let (Diameter::Finite(d), Diameter::Finite(dj)) = (d, dj) else { panic!("disconnected") };
        assert_eq!(dj, 2 * d);
        assert_eq!(j.height_of_ideal().unwrap(), 2 * c.height_of_ideal().unwrap());
    }
}

#[test]
fn links_and_stars() {
    let oct = crosspolytope_boundary(3).unwrap();
    for v in 0..oct.vertex_count() {
        let link = oct.link(&VertexSet::singleton(v)).unwrap();
        assert_eq!(link.facet_count(), 4);
        assert_eq!(oct.star(&VertexSet::singleton(v)).unwrap().facet_count(), 4);
    }
}

fn arbitrary_complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(proptest::collection::btree_set(1u32..8, 1..5), 1..7)
        .prop_map(|facets| SimplicialComplex::from_facets(facets).unwrap())
}

proptest! {
    #[test]
    fn join_multiplies_face_polynomials(a in arbitrary_complex(), b in arbitrary_complex()) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.f_vector().0, poly_mul(&a.f_vector().0, &b.f_vector().0));
        prop_assert_eq!(j.dimension(), a.dimension() + b.dimension() + 1);
    }

    #[test]
    fn text_format_round_trips(c in arbitrary_complex()) {
        let back = SimplicialComplex::parse_facet_file(&c.to_facet_file()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn link_faces_are_complements(c in arbitrary_complex(), pick in any::<prop::sample::Index>()) {
        let facet = &c.facets()[pick.index(c.facet_count())];
        let v = facet.iter().next().unwrap();
        let face = VertexSet::singleton(v);
        let link = c.link(&face).unwrap();
        for g in link.facets() {
            let labels: Vec<&str> = link.set_labels(g);
            let back = c.face_from_labels(&labels).unwrap();
            prop_assert!(!back.contains(v));
            prop_assert!(c.is_face(&back.union(&face)));
        }
    }
}
