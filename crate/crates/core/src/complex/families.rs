use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::SimplicialComplex;

/// Family names accepted by [`generate`].
pub const COMPLEX_FAMILIES: &[&str] =
    &["crosspolytope", "simplex-boundary", "simplex", "triangle-with-tail"];

fn numeric_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn require_positive(parameter: usize) -> Result<()> {
    if parameter == 0 {
        return Err(Error::InvalidParameter("family parameter must be at least 1".into()));
    }
    Ok(())
}

/// Boundary of the `r`-dimensional crosspolytope on vertices `1..=2r`, with
/// antipodal pairs `(2i-1, 2i)`. Its facets pick one vertex from each pair.
pub fn crosspolytope_boundary(r: usize) -> Result<SimplicialComplex> {
    require_positive(r)?;
    if r > 20 {
        return Err(Error::InvalidParameter(format!("crosspolytope dimension {r} exceeds 20")));
    }
    let facets = (0u32..1 << r)
        .map(|choice| (0..r).map(|i| 2 * i + ((choice >> i) & 1) as usize).collect())
        .collect();
    SimplicialComplex::from_indexed_facets(numeric_labels(2 * r), facets)
}

/// Boundary of the `d`-simplex: all `d`-subsets of `{1, ..., d+1}`.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    require_positive(d)?;
    let full = VertexSet::full(d + 1);
    let facets = (0..=d)
        .map(|skip| {
            let mut f = full.clone();
            f.remove(skip);
            f
        })
        .collect();
    SimplicialComplex::from_indexed_facets(numeric_labels(d + 1), facets)
}

/// The full simplex on `{1, ..., k}`.
pub fn simplex(k: usize) -> Result<SimplicialComplex> {
    require_positive(k)?;
    SimplicialComplex::from_indexed_facets(numeric_labels(k), vec![VertexSet::full(k)])
}

/// The graph `12, 13, 23, 14, 45`: a triangle with a two-edge tail. It is
/// Cohen–Macaulay of regularity 2 while its dual graph has a cut vertex.
pub fn triangle_with_tail() -> SimplicialComplex {
    SimplicialComplex::from_facets([[1, 2], [1, 3], [2, 3], [1, 4], [4, 5]])
        .expect("fixed facet list is valid")
}

/// The flag complex whose faces are the cliques of `graph`.
pub fn clique_complex(graph: &Graph) -> Result<SimplicialComplex> {
    if graph.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut cliques = Vec::new();
    bron_kerbosch(graph, VertexSet::new(), VertexSet::full(graph.order()), VertexSet::new(), &mut cliques);
    SimplicialComplex::from_indexed_facets(graph.labels().to_vec(), cliques)
}

fn bron_kerbosch(
    graph: &Graph,
    current: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        out.push(current);
        return;
    }
    for v in candidates.clone().iter() {
        let nbrs: VertexSet = graph.neighbors(v).collect();
        let mut next = current.clone();
        next.insert(v);
        bron_kerbosch(graph, next, candidates.intersection(&nbrs), excluded.intersection(&nbrs), out);
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Builds a named family. `triangle-with-tail` ignores the parameter.
pub fn generate(family: &str, parameter: usize) -> Result<SimplicialComplex> {
    match family {
        "crosspolytope" => crosspolytope_boundary(parameter),
        "simplex-boundary" => simplex_boundary(parameter),
        "simplex" => simplex(parameter),
        "triangle-with-tail" => Ok(triangle_with_tail()),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}
