//! Isomorphism, canonical forms and induced-subgraph search.
//!
//! Canonical forms come from an individualization–refinement search: the
//! vertex partition is refined until equitable, a vertex of the first
//! non-singleton cell is split off, and the search recurses. Each discrete
//! partition orders the vertices; the canonical code is the largest adjacency
//! code over all leaves. Interchangeable twin vertices are branched on once.

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

type Partition = Vec<Vec<usize>>;

struct Dense {
    n: usize,
    adj: Vec<bool>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![false; n * n];
        for (u, v) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Self { n, adj }
    }

    fn edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Splits cells by neighbor counts into other cells until stable.
    fn refine(&self, mut cells: Partition) -> Partition {
        let mut changed = true;
        while changed {
            changed = false;
            let mut ci = 0;
            while ci < cells.len() {
                let target = cells[ci].clone();
                let mut next = Vec::with_capacity(cells.len());
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(usize, usize)> = cell
                        .iter()
                        .map(|&v| (target.iter().filter(|&&w| self.edge(v, w)).count(), v))
                        .collect();
                    keyed.sort();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                }
                if next.len() != cells.len() {
                    changed = true;
                }
                cells = next;
                ci += 1;
            }
        }
        cells
    }

    /// Cell sizes and neighbor counts between cells; equal for corresponding
    /// nodes of the search trees of isomorphic graphs.
    fn quotient(&self, cells: &Partition) -> Vec<usize> {
        let mut out: Vec<usize> = cells.iter().map(Vec::len).collect();
        for a in cells {
            for b in cells {
                out.push(b.iter().filter(|&&w| self.edge(a[0], w)).count());
            }
        }
        out
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (0..self.n).all(|w| w == u || w == v || self.edge(u, w) == self.edge(v, w))
    }

    /// Adjacency bits of the upper triangle in the order given by a discrete partition.
    fn code(&self, cells: &Partition) -> Vec<bool> {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut code = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                code.push(self.edge(order[i], order[j]));
            }
        }
        code
    }

    fn initial(&self) -> Partition {
        self.refine(vec![(0..self.n).collect()])
    }

    fn individualize(&self, cells: &Partition, cell: usize, v: usize) -> Partition {
        let mut next = cells.clone();
        let rest: Vec<usize> = next[cell].iter().copied().filter(|&w| w != v).collect();
        next[cell] = vec![v];
        next.insert(cell + 1, rest);
        self.refine(next)
    }

    fn best_leaf(&self, cells: Partition, best: &mut Option<Vec<bool>>) {
        let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
            let code = self.code(&cells);
            if best.as_ref().is_none_or(|b| code > *b) {
                *best = Some(code);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[ci] {
            if tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            tried.push(v);
            self.best_leaf(self.individualize(&cells, ci, v), best);
        }
    }

    /// The leaf reached by always individualizing the first vertex, with the
    /// quotient invariants along the way.
    fn first_path(&self) -> (Vec<Vec<usize>>, Vec<bool>) {
        let mut cells = self.initial();
        let mut trace = vec![self.quotient(&cells)];
        while let Some(ci) = cells.iter().position(|c| c.len() > 1) {
            let v = cells[ci][0];
            cells = self.individualize(&cells, ci, v);
            trace.push(self.quotient(&cells));
        }
        (trace, self.code(&cells))
    }

    fn find_leaf(&self, cells: Partition, depth: usize, trace: &[Vec<usize>], target: &[bool]) -> bool {
        if self.quotient(&cells) != trace[depth] {
            return false;
        }
        let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
            return self.code(&cells) == target;
        };
        if depth + 1 >= trace.len() {
            return false;
        }
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[ci] {
            if tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            tried.push(v);
            if self.find_leaf(self.individualize(&cells, ci, v), depth + 1, trace, target) {
                return true;
            }
        }
        false
    }
}

/// A canonical code: isomorphic graphs, and only those, get equal codes.
/// Intended for small graphs; the search can be slow on large symmetric ones.
pub fn canonical_code(g: &Graph) -> (usize, Vec<bool>) {
    let dense = Dense::new(g);
    let mut best = None;
    dense.best_leaf(dense.initial(), &mut best);
    (g.order(), best.unwrap_or_default())
}

/// A map from the vertices of a pattern into a host graph that preserves
/// both adjacency and non-adjacency; `map[p]` is the host image of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedEmbedding {
    pub map: Vec<usize>,
    pub host_labels: Vec<String>,
}

/// `K6` minus the disjoint edges `25` and `34`, on vertices `1..=6`: no line
/// arrangement, and hence no pure complex, has it as an induced subgraph of
/// its dual graph.
pub fn line_arrangement_obstruction() -> Graph {
    let edges = [
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4),
        (2, 6), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
    ];
    let mut g = Graph::with_vertices(1..=6).expect("distinct labels");
    for (u, v) in edges {
        g.add_index_edge(u - 1, v - 1).expect("valid edge");
    }
    g
}

impl Graph {
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        if self.order() != other.order() || self.size() != other.size() {
            return false;
        }
        let mut da: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.order()).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let a = Dense::new(self);
        let b = Dense::new(other);
        let (trace, target) = a.first_path();
        b.find_leaf(b.initial(), 0, &trace, &target)
    }

    /// Searches for an induced copy of `pattern`, assigning pattern vertices
    /// in order of decreasing degree. The returned map is re-verified.
    pub fn find_induced_subgraph(&self, pattern: &Graph) -> Result<Option<InducedEmbedding>> {
        let k = pattern.order();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&p| std::cmp::Reverse(pattern.degree(p)));
        let mut map = vec![usize::MAX; k];
        let mut used = vec![false; self.order()];
        if !self.extend(pattern, &order, 0, &mut map, &mut used) {
            return Ok(None);
        }
        for p in 0..k {
            for q in p + 1..k {
                if pattern.has_edge(p, q) != self.has_edge(map[p], map[q]) {
                    return Err(Error::Invariant("induced embedding failed re-verification".into()));
                }
            }
        }
        let host_labels = map.iter().map(|&h| self.label(h).to_string()).collect();
        Ok(Some(InducedEmbedding { map, host_labels }))
    }

    fn extend(&self, pattern: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&p) = order.get(depth) else {
            return true;
        };
        for h in 0..self.order() {
            if used[h] || self.degree(h) < pattern.degree(p) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&q| pattern.has_edge(p, q) == self.has_edge(h, map[q]));
            if !consistent {
                continue;
            }
            map[p] = h;
            used[h] = true;
            if self.extend(pattern, order, depth + 1, map, used) {
                return true;
            }
            used[h] = false;
            map[p] = usize::MAX;
        }
        false
    }

    /// An induced copy of [`line_arrangement_obstruction`], if present.
    pub fn contains_forbidden_line_graph(&self) -> Result<Option<InducedEmbedding>> {
        self.find_induced_subgraph(&line_arrangement_obstruction())
    }
}
