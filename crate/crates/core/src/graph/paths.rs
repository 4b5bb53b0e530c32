//! Non-revisiting dual paths: once a step leaves the star of a vertex, no
//! later facet of the path may contain that vertex again.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

struct Search<'a> {
    facets: &'a [VertexSet],
    neighbors: Vec<Vec<usize>>,
    target: usize,
    dead: HashSet<(usize, VertexSet)>,
}

impl Search<'_> {
    fn run(&mut self, at: usize, abandoned: &VertexSet, path: &mut Vec<usize>) -> bool {
        if at == self.target {
            return true;
        }
        if self.dead.contains(&(at, abandoned.clone())) {
            return false;
        }
        let goal = &self.facets[self.target];
        // steps that enter the target facet first
        let mut moves: Vec<usize> = self.neighbors[at]
            .iter()
            .copied()
            .filter(|&g| self.facets[g].is_disjoint(abandoned))
            .filter(|&g| !self.facets[at].difference(&self.facets[g]).is_subset(goal))
            .collect();
        moves.sort_by_key(|&g| std::cmp::Reverse(self.facets[g].intersection_len(goal)));
        for g in moves {
            let next_abandoned = abandoned.union(&self.facets[at].difference(&self.facets[g]));
            path.push(g);
            if self.run(g, &next_abandoned, path) {
                return true;
            }
            path.pop();
        }
        self.dead.insert((at, abandoned.clone()));
        false
    }
}

/// Searches exhaustively for a non-revisiting path between two facets of a
/// pure complex. The path lists facet indices from `from` to `to`; `None`
/// proves that no such path exists.
pub fn non_revisiting_path(
    complex: &SimplicialComplex,
    from: &VertexSet,
    to: &VertexSet,
) -> Result<Option<Vec<usize>>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = complex.facets();
    let locate = |f: &VertexSet| {
        facets
            .iter()
            .position(|g| g == f)
            .ok_or_else(|| Error::NotAFacet(complex.set_labels(f).join(",")))
    };
    let (start, target) = (locate(from)?, locate(to)?);
    let d = facets[0].len();
    let neighbors = (0..facets.len())
        .map(|i| {
            (0..facets.len())
                .filter(|&j| j != i && facets[i].intersection_len(&facets[j]) + 1 == d)
                .collect()
        })
        .collect();
    let mut search = Search { facets, neighbors, target, dead: HashSet::new() };
    let mut path = vec![start];
    Ok(search.run(start, &VertexSet::new(), &mut path).then_some(path))
}
