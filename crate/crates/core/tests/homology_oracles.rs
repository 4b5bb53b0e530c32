use dualgraph::census;
use dualgraph::complex::{crosspolytope_boundary, simplex, simplex_boundary};
use dualgraph::homology::{
    boundary_matrix, is_cohen_macaulay, is_gorenstein, is_homology_sphere, reduced_betti_numbers, regularity,
    DEFAULT_HOCHSTER_CAP,
};
use dualgraph::{FieldSpec, SimplicialComplex, VertexSet};

const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)];

fn cx(facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
}

fn rp2() -> SimplicialComplex {
    cx(&[
        &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
        &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
    ])
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Faces counted by testing every vertex subset.
fn brute_f_vector(c: &SimplicialComplex) -> Vec<u64> {
    let mut f = vec![0u64; c.vertex_count() + 1];
    for s in VertexSet::full(c.vertex_count()).subsets() {
        if c.is_face(&s) {
            f[s.len()] += 1;
        }
    }
    while f.len() > 1 && f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Number of degree-`m` monomials whose support is a face.
fn hilbert_function(c: &SimplicialComplex, m: usize) -> i64 {
    fn count(c: &SimplicialComplex, v: usize, left: usize, support: &mut VertexSet) -> i64 {
        if left == 0 {
            return i64::from(c.is_face(support));
        }
        if v == c.vertex_count() {
            return 0;
        }
        let mut total = count(c, v + 1, left, support);
        support.insert(v);
        for e in 1..=left {
            total += count(c, v + 1, left - e, support);
        }
        support.remove(v);
        total
    }
    count(c, 0, m, &mut VertexSet::new())
}

/// Regularity by evaluating every Betti number of every induced subcomplex.
fn brute_regularity(c: &SimplicialComplex, field: FieldSpec) -> usize {
    let mut best = 0;
    for w in VertexSet::full(c.vertex_count()).subsets() {
        let betti = reduced_betti_numbers(&c.induced_subcomplex(&w), field).unwrap();
        for (k, &b) in betti.reduced_betti.iter().enumerate() {
            if b > 0 {
                best = best.max(k);
            }
        }
    }
    best
}

#[test]
fn euler_poincare_on_all_complexes_up_to_five_vertices() {
    for c in census::labeled_complexes(5).unwrap() {
        let f = c.f_vector().0;
        let chi: i64 = f.iter().enumerate().map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) }).sum();
        for field in FIELDS {
            let betti = reduced_betti_numbers(&c, field).unwrap();
            assert_eq!(betti.euler_characteristic(), chi, "{c:?} over {field}");
        }
    }
}

#[test]
fn f_vector_matches_subset_enumeration() {
    for c in census::labeled_complexes(5).unwrap() {
        assert_eq!(c.f_vector().0, brute_f_vector(&c), "{c:?}");
    }
}

#[test]
fn boundary_squares_to_zero() {
    for c in census::labeled_complexes(4).unwrap().into_iter().chain([rp2(), crosspolytope_boundary(3).unwrap()]) {
        for i in 0..=c.dimension() {
            let lower = boundary_matrix(&c, i - 1).unwrap();
            let upper = boundary_matrix(&c, i).unwrap();
            assert!(lower.mul(&upper).unwrap().is_zero(), "{c:?} at {i}");
        }
    }
}

#[test]
fn h_vector_matches_hilbert_series() {
    for n in 1..=6 {
        for k in 1..=n {
            for c in census::pure_complexes(n, k).unwrap() {
                let d = k as i64;
                let hilbert: Vec<i64> = (0..=k).map(|m| hilbert_function(&c, m)).collect();
                // h(t) = (1 - t)^d Σ H(m) t^m, truncated at degree d
                let expected: Vec<i64> = (0..=d)
                    .map(|j| (0..=j).map(|i| (-1i64).pow(i as u32) * binomial(d, i) * hilbert[(j - i) as usize]).sum())
                    .collect();
                let h = c.h_vector().unwrap();
                assert_eq!(h.0, expected, "{c:?}");
                assert_eq!(h.sum(), c.facet_count() as i64);
                assert_eq!(c.multiplicity().unwrap(), c.facet_count() as u64);
            }
        }
    }
}

#[test]
fn regularity_matches_exhaustive_betti_search() {
    let mut inputs = census::labeled_complexes(4).unwrap();
    for k in 1..=4 {
        inputs.extend(census::pure_complexes(5, k).unwrap());
    }
    inputs.push(rp2());
    for c in &inputs {
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
            let cert = regularity(c, field, DEFAULT_HOCHSTER_CAP).unwrap();
            assert_eq!(cert.value, brute_regularity(c, field), "{c:?} over {field}");
            assert!(cert.verify(c, field).unwrap());
        }
    }
}

#[test]
fn cohen_macaulay_regularity_is_h_degree() {
    for k in 1..=5 {
        for c in census::pure_complexes(6, k).unwrap() {
            if is_cohen_macaulay(&c, FieldSpec::Rationals).unwrap() {
                let reg = regularity(&c, FieldSpec::Rationals, DEFAULT_HOCHSTER_CAP).unwrap().value;
                assert_eq!(reg, c.h_vector().unwrap().degree(), "{c:?}");
            }
        }
    }
}

#[test]
fn projective_plane_depends_on_the_field() {
    let p = rp2();
    assert_eq!(reduced_betti_numbers(&p, FieldSpec::Rationals).unwrap().reduced_betti, vec![0, 0, 0, 0]);
    assert_eq!(reduced_betti_numbers(&p, FieldSpec::PrimeField(2)).unwrap().reduced_betti, vec![0, 0, 1, 1]);
    assert_eq!(reduced_betti_numbers(&p, FieldSpec::PrimeField(3)).unwrap().reduced_betti, vec![0, 0, 0, 0]);
    assert!(is_cohen_macaulay(&p, FieldSpec::Rationals).unwrap());
    assert!(!is_cohen_macaulay(&p, FieldSpec::PrimeField(2)).unwrap());
    assert!(!is_gorenstein(&p, FieldSpec::Rationals).unwrap());
}

#[test]
fn spheres_and_cones() {
    let octahedron = crosspolytope_boundary(3).unwrap();
    let square = crosspolytope_boundary(2).unwrap();
    let triangle = simplex_boundary(2).unwrap();
    let joined = square.join(&triangle).unwrap();
    for field in FIELDS {
        assert!(is_homology_sphere(&octahedron, field).unwrap());
        assert!(is_homology_sphere(&joined, field).unwrap());
        assert!(is_gorenstein(&joined.join(&simplex(2).unwrap()).unwrap(), field).unwrap());
    }
    assert_eq!(regularity(&joined, FieldSpec::Rationals, DEFAULT_HOCHSTER_CAP).unwrap().value, 4);
}

#[test]
fn betti_numbers_of_small_examples() {
    let two_points = cx(&[&[1], &[2]]);
    assert_eq!(reduced_betti_numbers(&two_points, FieldSpec::Rationals).unwrap().reduced_betti, vec![0, 1]);
    let wedge = cx(&[&[1, 2], &[2, 3], &[1, 3], &[3, 4], &[4, 5], &[3, 5]]);
    assert_eq!(reduced_betti_numbers(&wedge, FieldSpec::Rationals).unwrap().reduced_betti, vec![0, 0, 2]);
    let torus_free = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
    assert_eq!(reduced_betti_numbers(&torus_free, FieldSpec::PrimeField(5)).unwrap().betti(2), 1);
}

#[test]
fn betti_numbers_match_dense_boundary_ranks() {
    for n in 1..=5 {
        for c in census::labeled_complexes(n).unwrap() {
            let dim = c.dimension();
            let f: Vec<usize> = std::iter::once(1).chain(brute_f_vector(&c).into_iter().skip(1).map(|x| x as usize)).collect();
            for field in FIELDS {
                let rank = |i: isize| {
                    if i < -1 || i > dim {
                        0
                    } else {
                        boundary_matrix(&c, i).unwrap().rank(field).unwrap()
                    }
                };
                let dense: Vec<usize> = (-1..=dim).map(|i| f[(i + 1) as usize] - rank(i) - rank(i + 1)).collect();
                assert_eq!(reduced_betti_numbers(&c, field).unwrap().reduced_betti, dense, "{c:?} over {field}");
            }
        }
    }
}
