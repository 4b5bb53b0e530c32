//! Vertex and edge connectivity by unit-capacity max-flow.
//!
//! Local vertex connectivity `κ(s, t)` is the max-flow in the split digraph
//! where each vertex `v` becomes an arc `v_in → v_out` of capacity one. The
//! global value follows Esfahanian and Hakimi: with `v` of minimum degree it is
//! enough to take `κ(v, u)` over the non-neighbors `u` of `v` and `κ(x, y)` over
//! the non-adjacent pairs of neighbors of `v`.

use std::collections::VecDeque;

use serde::Serialize;

use super::{Diameter, Graph};
use crate::error::{Error, Result};

const INF: u32 = u32::MAX / 2;

struct Arc {
    to: usize,
    cap: u32,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Edmonds–Karp; stops once the flow reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![usize::MAX; self.out.len()];
            let mut queue = VecDeque::from([s]);
            via[s] = usize::MAX - 1;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.out[u] {
                    let v = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && via[v] == usize::MAX {
                        via[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if via[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.arcs[a].cap -= 1;
                self.arcs[a ^ 1].cap += 1;
                v = self.arcs[a ^ 1].to;
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let v = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Minimum separator between two non-adjacent vertices, by vertex splitting.
fn local_vertex_cut(g: &Graph, s: usize, t: usize) -> Vec<usize> {
    let n = g.order();
    let mut net = Network::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { INF } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
        for w in g.neighbors(v) {
            net.add_arc(2 * v + 1, 2 * w, INF);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, n);
    let seen = net.reachable(2 * s + 1);
    (0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect()
}

fn local_edge_cut(g: &Graph, s: usize, t: usize) -> Vec<(usize, usize)> {
    let mut net = Network::new(g.order());
    for (u, v) in g.edges() {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    net.max_flow(s, t, g.order() * g.order());
    let seen = net.reachable(s);
    g.edges().into_iter().filter(|&(u, v)| seen[u] != seen[v]).collect()
}

/// A minimum vertex separator, or `None` for complete graphs, which have none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCut {
    pub connectivity: usize,
    pub cut: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub connectivity: usize,
    pub cut: Vec<(usize, usize)>,
}

/// Connectivity data of a graph with at least two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub vertex_connectivity: usize,
    pub vertex_cut: Option<Vec<usize>>,
    pub edge_connectivity: usize,
    pub edge_cut: Vec<(usize, usize)>,
    pub diameter: Diameter,
}

impl Graph {
    fn require_two(&self) -> Result<()> {
        if self.order() < 2 {
            return Err(Error::TooFewVertices { needed: 2, found: self.order() });
        }
        Ok(())
    }

    /// Vertex connectivity with a minimum separator. `K_n` has connectivity
    /// `n - 1` and no separator.
    pub fn vertex_connectivity(&self) -> Result<VertexCut> {
        self.require_two()?;
        let n = self.order();
        if self.is_complete() {
            return Ok(VertexCut { connectivity: n - 1, cut: None });
        }
        let v = (0..n).min_by_key(|&v| self.degree(v)).expect("nonempty graph");
        let mut best: Option<Vec<usize>> = None;
        let consider = |s: usize, t: usize, best: &mut Option<Vec<usize>>| {
            let cut = local_vertex_cut(self, s, t);
            if best.as_ref().is_none_or(|b| cut.len() < b.len()) {
                *best = Some(cut);
            }
        };
        for u in 0..n {
            if u != v && !self.has_edge(u, v) {
                consider(v, u, &mut best);
            }
        }
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if !self.has_edge(x, y) {
                    consider(x, y, &mut best);
                }
            }
        }
        let cut = best.expect("a non-complete graph has a non-adjacent pair");
        Ok(VertexCut { connectivity: cut.len(), cut: Some(cut) })
    }

    /// At least `k + 1` vertices and no separator with fewer than `k` vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.order() < k + 1 {
            return false;
        }
        k == 0 || self.vertex_connectivity().is_ok_and(|c| c.connectivity >= k)
    }

    /// Edge connectivity with a minimum edge cut, by max-flow from vertex 0.
    pub fn edge_connectivity(&self) -> Result<EdgeCut> {
        self.require_two()?;
        let best = (1..self.order())
            .map(|t| local_edge_cut(self, 0, t))
            .min_by_key(Vec::len)
            .expect("at least two vertices");
        Ok(EdgeCut { connectivity: best.len(), cut: best })
    }

    /// At least `k + 1` vertices and no edge cut with fewer than `k` edges.
    pub fn is_k_edge_connected(&self, k: usize) -> bool {
        if self.order() < k + 1 {
            return false;
        }
        k == 0 || self.edge_connectivity().is_ok_and(|c| c.connectivity >= k)
    }

    pub fn connectivity_report(&self) -> Result<ConnectivityReport> {
        let vertex = self.vertex_connectivity()?;
        let edge = self.edge_connectivity()?;
        Ok(ConnectivityReport {
            vertices: self.order(),
            edges: self.size(),
            min_degree: self.min_degree().unwrap_or(0),
            vertex_connectivity: vertex.connectivity,
            vertex_cut: vertex.cut,
            edge_connectivity: edge.connectivity,
            edge_cut: edge.cut,
            diameter: self.diameter()?,
        })
    }

    /// Whether removing `edges` disconnects the graph.
    pub fn edge_cut_disconnects(&self, edges: &[(usize, usize)]) -> bool {
        let mut h = self.clone();
        for &(u, v) in edges {
            h.adj[u].remove(&v);
            h.adj[v].remove(&u);
        }
        !h.is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{complete, hypercube, path};
    use super::*;

    #[test]
    fn hypercubes() {
        for r in 1..=5 {
            let q = hypercube(r).unwrap();
            let c = q.vertex_connectivity().unwrap();
            assert_eq!(c.connectivity, r);
            assert!(q.is_k_connected(r));
            assert!(!q.is_k_connected(r + 1));
            if let Some(cut) = c.cut {
                assert!(!q.remove_vertices(&cut).is_connected());
            }
        }
    }

    #[test]
    fn complete_graphs() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.vertex_connectivity().unwrap(), VertexCut { connectivity: 3, cut: None });
        assert_eq!(k4.edge_connectivity().unwrap().connectivity, 3);
        assert!(k4.is_k_connected(3));
        assert!(!k4.is_k_connected(4));
    }

    #[test]
    fn glued_squares() {
        let g = Graph::from_index_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
        assert_eq!(g.vertex_connectivity().unwrap().cut, Some(vec![0]));
        let e = g.edge_connectivity().unwrap();
        assert_eq!(e.connectivity, 2);
        assert!(g.edge_cut_disconnects(&e.cut));
    }

    #[test]
    fn small_and_disconnected() {
        assert!(matches!(
            Graph::with_vertices(["a"]).unwrap().vertex_connectivity(),
            Err(Error::TooFewVertices { needed: 2, found: 1 })
        ));
        let two = Graph::with_vertices(["a", "b"]).unwrap();
        assert_eq!(two.vertex_connectivity().unwrap().connectivity, 0);
        assert_eq!(two.edge_connectivity().unwrap().connectivity, 0);
        assert_eq!(path(4).unwrap().vertex_connectivity().unwrap().connectivity, 1);
        assert!(Graph::with_vertices(["a"]).unwrap().is_k_connected(0));
    }
}
