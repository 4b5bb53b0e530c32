//! Finite simple graphs with labeled vertices.
//!
//! Vertices are dense indices into an ordered label list, as for complexes.
//! The dual graph of a pure complex has the facets as vertices and joins two
//! facets when they share a codimension-one face.

mod flow;
mod io;
mod iso;
mod paths;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::{validate_label, SimplicialComplex};
use crate::error::{Error, Result};

pub use flow::{ConnectivityReport, EdgeCut, VertexCut};
pub use iso::{canonical_code, line_arrangement_obstruction, InducedEmbedding};
pub use io::parse_edge_file;
pub use paths::non_revisiting_path;

/// Graph families understood by [`generate_graph`].
pub const GRAPH_FAMILIES: [&str; 4] = ["complete", "hypercube", "k6-minus-matching", "path"];

#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

/// Diameter of a graph; disconnected graphs have infinite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// A number, or the string `"infinite"`.
impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Whether `diam G(I) <= height I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HirschVerdict {
    Hirsch,
    NotHirsch,
    Disconnected,
}

impl fmt::Display for HirschVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HirschVerdict::Hirsch => "Hirsch",
            HirschVerdict::NotHirsch => "NotHirsch",
            HirschVerdict::Disconnected => "Disconnected",
        })
    }
}

pub fn hirsch_verdict(diameter: Diameter, height: usize) -> HirschVerdict {
    match diameter {
        Diameter::Infinite => HirschVerdict::Disconnected,
        Diameter::Finite(d) if d <= height => HirschVerdict::Hirsch,
        Diameter::Finite(_) => HirschVerdict::NotHirsch,
    }
}

impl Graph {
    pub fn new() -> Self {
        Self { labels: Vec::new(), index: HashMap::new(), adj: Vec::new() }
    }

    /// A graph with the given vertices and no edges.
    pub fn with_vertices<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let mut g = Self::new();
        for label in labels {
            let label = label.to_string();
            if g.index.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            g.add_vertex(&label)?;
        }
        Ok(g)
    }

    /// Vertices `0..n` labeled by their index, with the given index edges.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_vertices(0..n)?;
        for &(u, v) in edges {
            g.add_index_edge(u, v)?;
        }
        Ok(g)
    }

    /// Vertices in first-appearance order.
    pub fn from_labeled_edges<I, S>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: ToString,
    {
        let mut g = Self::new();
        for (u, v) in edges {
            g.add_edge(&u.to_string(), &v.to_string())?;
        }
        Ok(g)
    }

    /// Returns the index of `label`, adding the vertex if it is new.
    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if let Some(&i) = self.index.get(label) {
            return Ok(i);
        }
        validate_label(label)?;
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(BTreeSet::new());
        Ok(i)
    }

    /// Adds the edge, creating missing endpoints. Repeated edges are ignored.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u.to_string()));
        }
        let a = self.add_vertex(u)?;
        let b = self.add_vertex(v)?;
        self.add_index_edge(a, b)
    }

    pub fn add_index_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, len: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Neighbors of `v` in increasing index order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.contains(&v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| self.adj[u].range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|a| a.len() + 1 == n)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected; the graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<Diameter> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s) {
                match d {
                    None => return Ok(Diameter::Infinite),
                    Some(d) => best = best.max(d),
                }
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// The subgraph induced on `keep`, in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Self {
        let position: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|w| position.get(w).copied()).collect())
            .collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Self { labels, index, adj }
    }

    pub fn remove_vertices(&self, removed: &[usize]) -> Self {
        let removed: HashSet<usize> = removed.iter().copied().collect();
        let keep: Vec<usize> = (0..self.order()).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Cartesian product; the vertex `(u, v)` is labeled `u:v`.
    pub fn cartesian_product(&self, other: &Self) -> Result<Self> {
        let m = other.order();
        let mut g = Self::with_vertices(
            self.labels.iter().flat_map(|a| other.labels.iter().map(move |b| format!("{a}:{b}"))),
        )?;
        for u in 0..self.order() {
            for v in 0..m {
                for &w in self.adj[u].range(u + 1..) {
                    g.add_index_edge(u * m + v, w * m + v)?;
                }
                for &w in other.adj[v].range(v + 1..) {
                    g.add_index_edge(u * m + v, u * m + w)?;
                }
            }
        }
        Ok(g)
    }
}

impl Default for Graph {
    fn default() -> Self {
        Self::new()
    }
}

/// Equality of labeled graphs: same vertex labels and same edges between them.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        let edge_labels = |g: &Self| -> BTreeSet<(String, String)> {
            g.edges()
                .into_iter()
                .map(|(u, v)| {
                    let (a, b) = (g.labels[u].clone(), g.labels[v].clone());
                    if a < b { (a, b) } else { (b, a) }
                })
                .collect()
        };
        let a: BTreeSet<&String> = self.labels.iter().collect();
        let b: BTreeSet<&String> = other.labels.iter().collect();
        a == b && edge_labels(self) == edge_labels(other)
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "Graph[{} vertices; {}]", self.order(), edges.join(" "))
    }
}

/// The dual graph of a pure complex: facets are vertices, adjacent when they
/// share a face of codimension one. A facet is labeled by its vertex labels
/// joined with commas, or `F<i>` if those names would collide.
pub fn dual_graph(complex: &SimplicialComplex) -> Result<Graph> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = complex.facets();
    let mut names: Vec<String> = facets
        .iter()
        .map(|f| {
            if f.is_empty() {
                "empty".to_string()
            } else {
                complex.set_labels(f).join(",")
            }
        })
        .collect();
    let distinct: HashSet<&String> = names.iter().collect();
    if distinct.len() < names.len() {
        names = (0..facets.len()).map(|i| format!("F{i}")).collect();
    }
    let mut g = Graph::with_vertices(names)?;
    let d = facets[0].len();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            if facets[i].intersection_len(&facets[j]) + 1 == d {
                g.add_index_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// The 1-skeleton of the `n`-cube. Vertex `i` is the subset with bitmask `i`,
/// written as a 0/1 string whose `j`-th character records element `j`.
pub fn hypercube(n: usize) -> Result<Graph> {
    if !(1..=16).contains(&n) {
        return Err(Error::InvalidParameter(format!("hypercube dimension must be in 1..=16, got {n}")));
    }
    let labels = (0..1usize << n).map(|m| (0..n).map(|j| if m >> j & 1 == 1 { '1' } else { '0' }).collect::<String>());
    let mut g = Graph::with_vertices(labels)?;
    for m in 0..1usize << n {
        for j in 0..n {
            if m >> j & 1 == 0 {
                g.add_index_edge(m, m | 1 << j)?;
            }
        }
    }
    Ok(g)
}

/// The path on `n` vertices labeled `1..=n`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a path needs at least one vertex".into()));
    }
    let mut g = Graph::with_vertices(1..=n)?;
    for i in 1..n {
        g.add_index_edge(i - 1, i)?;
    }
    Ok(g)
}

/// The complete graph on `n` vertices labeled `1..=n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a complete graph needs at least one vertex".into()));
    }
    let mut g = Graph::with_vertices(1..=n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_index_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Builds a member of one of the [`GRAPH_FAMILIES`]. The parameter of
/// `k6-minus-matching` must be 6.
pub fn generate_graph(family: &str, param: usize) -> Result<Graph> {
    match family {
        "complete" => complete(param),
        "hypercube" => hypercube(param),
        "path" => path(param),
        "k6-minus-matching" if param == 6 => Ok(line_arrangement_obstruction()),
        "k6-minus-matching" => Err(Error::InvalidParameter(format!(
            "k6-minus-matching has exactly 6 vertices, got {param}"
        ))),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{crosspolytope_boundary, simplex_boundary, triangle_with_tail};

    #[test]
    fn dual_graphs() {
        let c4 = dual_graph(&crosspolytope_boundary(2).unwrap()).unwrap();
        assert_eq!((c4.order(), c4.size()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert!(dual_graph(&simplex_boundary(3).unwrap()).unwrap().is_complete());

        let tail = dual_graph(&triangle_with_tail()).unwrap();
        let leaf = tail.index_of("4,5").unwrap();
        assert_eq!(tail.degree(leaf), 1);
        assert_eq!((tail.order(), tail.size()), (5, 6));

        let mixed = SimplicialComplex::from_facets([vec![1, 2], vec![3]]).unwrap();
        assert_eq!(dual_graph(&mixed).unwrap_err(), Error::NotPure);
    }

    #[test]
    fn diameters() {
        let c4 = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.diameter().unwrap(), Diameter::Finite(2));
        for r in 1..=6 {
            assert_eq!(hypercube(r).unwrap().diameter().unwrap(), Diameter::Finite(r));
        }
        assert_eq!(Graph::with_vertices(["a", "b"]).unwrap().diameter().unwrap(), Diameter::Infinite);
        assert_eq!(Graph::with_vertices(["a"]).unwrap().diameter().unwrap(), Diameter::Finite(0));
        assert_eq!(Graph::new().diameter().unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn verdicts() {
        assert_eq!(hirsch_verdict(Diameter::Finite(3), 2), HirschVerdict::NotHirsch);
        assert_eq!(hirsch_verdict(Diameter::Finite(3), 3), HirschVerdict::Hirsch);
        assert_eq!(hirsch_verdict(Diameter::Infinite, 3), HirschVerdict::Disconnected);
    }

    #[test]
    fn construction_errors() {
        let mut g = Graph::new();
        assert!(matches!(g.add_edge("a", "a"), Err(Error::SelfLoop(_))));
        assert!(matches!(g.add_edge("a b", "c"), Err(Error::BadLabel(_))));
        g.add_edge("a", "b").unwrap();
        g.add_edge("b", "a").unwrap();
        assert_eq!(g.size(), 1);
        assert!(matches!(Graph::with_vertices(["x", "x"]), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn families() {
        let q3 = generate_graph("hypercube", 3).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert_eq!(generate_graph("k6-minus-matching", 6).unwrap().size(), 13);
        assert!(generate_graph("complete", 4).unwrap().is_complete());
        assert_eq!(generate_graph("path", 4).unwrap().diameter().unwrap(), Diameter::Finite(3));
        assert!(matches!(generate_graph("petersen", 1), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn products() {
        let p2 = path(2).unwrap();
        let square = p2.cartesian_product(&p2).unwrap();
        assert_eq!((square.order(), square.size()), (4, 4));
        assert_eq!(square.diameter().unwrap(), Diameter::Finite(2));
    }
}
