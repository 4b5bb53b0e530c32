//! Exhaustive enumeration of small graphs and complexes.
//!
//! Graphs are generated up to isomorphism by adding one vertex at a time with
//! every possible neighborhood and keeping one member of each canonical class.
//! Complexes on at most five vertices are enumerated as labeled down-sets of
//! the Boolean lattice. Pure complexes are enumerated up to relabeling as
//! uniform set systems, adding one facet at a time.

use std::collections::{BTreeSet, HashSet};

use crate::complex::{clique_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{canonical_code, Graph};
use crate::vertex_set::VertexSet;

/// One graph per isomorphism class on exactly `n` vertices, `1 <= n <= 10`.
pub fn graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!("graph census supports 1..=10 vertices, got {n}")));
    }
    let mut level = vec![Graph::with_vertices([0])?];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (m - 1) {
                let mut edges = g.edges();
                edges.extend((0..m - 1).filter(|v| mask >> v & 1 == 1).map(|v| (v, m - 1)));
                let h = Graph::from_index_edges(m, &edges)?;
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// One graph per isomorphism class on `1..=max_n` vertices.
pub fn graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(graphs(n)?);
    }
    Ok(all)
}

/// One flag complex per isomorphism class with at most `max_n` vertices, as
/// clique complexes of the graphs from [`graphs_up_to`].
pub fn flag_complexes(max_n: usize) -> Result<Vec<SimplicialComplex>> {
    graphs_up_to(max_n)?.iter().map(clique_complex).collect()
}

/// Every nonvoid complex whose vertices lie in `{1, ..., n}`, `n <= 5`, the
/// complex `{∅}` included. Labeled, so isomorphic copies all appear.
pub fn labeled_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n > 5 {
        return Err(Error::InvalidParameter(format!("labeled complex census supports at most 5 vertices, got {n}")));
    }
    // subsets of {0..n} ordered by size, so that every subset follows its facets
    let mut subsets: Vec<u32> = (0..1u32 << n).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = Vec::new();
    let mut chosen: u64 = 1; // the empty face
    extend_downsets(n, &subsets, 1, &mut chosen, &mut out)?;
    Ok(out)
}

fn extend_downsets(n: usize, subsets: &[u32], at: usize, chosen: &mut u64, out: &mut Vec<SimplicialComplex>) -> Result<()> {
    let Some(&s) = subsets.get(at) else {
        out.push(downset_complex(n, *chosen)?);
        return Ok(());
    };
    extend_downsets(n, subsets, at + 1, chosen, out)?;
    let closed = (0..n).filter(|v| s >> v & 1 == 1).all(|v| *chosen >> (s & !(1 << v)) & 1 == 1);
    if closed {
        *chosen |= 1 << s;
        extend_downsets(n, subsets, at + 1, chosen, out)?;
        *chosen &= !(1 << s);
    }
    Ok(())
}

fn to_vertex_set(mask: u32) -> VertexSet {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

fn downset_complex(n: usize, faces: u64) -> Result<SimplicialComplex> {
    let members: Vec<u32> = (0..1u32 << n).filter(|&s| faces >> s & 1 == 1).collect();
    let facets: Vec<VertexSet> = members
        .iter()
        .filter(|&&s| !members.iter().any(|&t| t != s && t & s == s))
        .map(|&s| to_vertex_set(s))
        .collect();
    if facets == [VertexSet::new()] {
        return Ok(SimplicialComplex::empty_complex());
    }
    SimplicialComplex::from_indexed_facets((1..=n).map(|v| v.to_string()).collect(), facets)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One pure complex per isomorphism class whose facets are `k`-subsets of
/// `{1, ..., n}`, `1 <= k <= n <= 7`.
pub fn pure_complexes(n: usize, k: usize) -> Result<Vec<SimplicialComplex>> {
    if !(1..=7).contains(&n) || !(1..=n).contains(&k) {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n <= 7, got n = {n}, k = {k}")));
    }
    let blocks: Vec<u32> = (0..1u32 << n).filter(|s| s.count_ones() as usize == k).collect();
    let position = |s: u32| blocks.binary_search(&s).expect("k-subsets map to k-subsets");
    // action of each permutation on block indices
    let actions: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| {
            blocks
                .iter()
                .map(|&s| position((0..n).filter(|&v| s >> v & 1 == 1).map(|v| 1u32 << p[v]).sum()))
                .collect()
        })
        .collect();
    let canonical = |family: &BTreeSet<usize>| -> Vec<usize> {
        actions
            .iter()
            .map(|act| {
                let mut image: Vec<usize> = family.iter().map(|&b| act[b]).collect();
                image.sort_unstable();
                image
            })
            .min()
            .expect("at least one permutation")
    };
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut level: Vec<BTreeSet<usize>> = Vec::new();
    for b in 0..blocks.len() {
        let f = BTreeSet::from([b]);
        if seen.insert(canonical(&f)) {
            level.push(f);
        }
    }
    let mut families = level.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for family in &level {
            for b in 0..blocks.len() {
                if family.contains(&b) {
                    continue;
                }
                let mut bigger = family.clone();
                bigger.insert(b);
                if seen.insert(canonical(&bigger)) {
                    next.push(bigger);
                }
            }
        }
        families.extend(next.iter().cloned());
        level = next;
    }
    families
        .into_iter()
        .map(|family| {
            let facets = family.iter().map(|&b| to_vertex_set(blocks[b])).collect();
            SimplicialComplex::from_indexed_facets((1..=n).map(|v| v.to_string()).collect(), facets)
        })
        .collect()
}
