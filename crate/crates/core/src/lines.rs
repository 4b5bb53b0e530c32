//! Arrangements of lines in rational projective space.
//!
//! A line is the span of two points. Two distinct lines meet exactly when
//! their four spanning points have rank 3. For an arrangement without triple
//! points the curve has genus `t - s + 1` (`s` lines, `t` intersection points)
//! and, if canonically embedded, its ideal has height `g - 2`. A canonically
//! embedded arrangement has a 3-edge-connected dual graph; that necessary
//! condition is the only part of canonicity checked here.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Diameter, Graph};
use crate::linalg::{FieldSpec, RationalMatrix};
use crate::rational::JsonRational;

fn rank(m: &RationalMatrix) -> usize {
    m.rank(FieldSpec::Rationals).expect("rank over the rationals cannot fail")
}

/// A point of projective space as a primitive integer vector whose first
/// nonzero coordinate is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(pub Vec<BigInt>);

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|x| JsonRational(BigRational::from_integer(x.clone()))))
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Clears denominators, divides by the content and makes the first nonzero
/// coordinate positive. `None` for the zero vector.
pub fn canonical_point(v: &[BigRational]) -> Option<ProjectivePoint> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return None;
    }
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let sign = if lead_negative { -BigInt::one() } else { BigInt::one() };
    Some(ProjectivePoint(ints.iter().map(|x| x / &gcd * &sign).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveLine {
    p: Vec<BigRational>,
    q: Vec<BigRational>,
}

impl ProjectiveLine {
    /// The line through two distinct points of the same length.
    pub fn new(p: Vec<BigRational>, q: Vec<BigRational>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::RaggedMatrix { row: 1, expected: p.len(), found: q.len() });
        }
        let m = RationalMatrix::from_rows(vec![p.clone(), q.clone()], p.len())?;
        if rank(&m) != 2 {
            return Err(Error::InvalidParameter("the two points do not span a line".into()));
        }
        Ok(Self { p, q })
    }

    pub fn from_integers(p: &[i64], q: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        Self::new(conv(p), conv(q))
    }

    pub fn ambient_dim(&self) -> usize {
        self.p.len() - 1
    }

    pub fn points(&self) -> [&[BigRational]; 2] {
        [&self.p, &self.q]
    }

    fn span(&self) -> RationalMatrix {
        RationalMatrix::from_rows(vec![self.p.clone(), self.q.clone()], self.p.len()).expect("equal lengths")
    }

    /// Rank of the four spanning points: 2 for equal lines, 3 for meeting
    /// lines and 4 for skew lines.
    fn joint_rank(&self, other: &Self) -> Result<usize> {
        Ok(rank(&self.span().stack(&other.span())?))
    }
}

/// The common point of two lines, if any. Equal lines are an error.
pub fn intersects(l1: &ProjectiveLine, l2: &ProjectiveLine) -> Result<Option<ProjectivePoint>> {
    match l1.joint_rank(l2)? {
        2 => Err(Error::IdenticalLines(0, 1)),
        3 => {
            // a p1 + b q1 - c p2 - d q2 = 0 has a one-dimensional solution space
            let n = l1.p.len();
            let cols = |i: usize| vec![l1.p[i].clone(), l1.q[i].clone(), -&l2.p[i], -&l2.q[i]];
            let m = RationalMatrix::from_rows((0..n).map(cols).collect(), 4)?;
            let kernel = m.nullspace();
            let [a, b, ..] = kernel[0].as_slice() else {
                unreachable!("kernel vectors have four entries");
            };
            let point: Vec<BigRational> = (0..n).map(|i| a * &l1.p[i] + b * &l1.q[i]).collect();
            Ok(canonical_point(&point))
        }
        _ => Ok(None),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineEntry {
    points: [Vec<JsonRational>; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinesFile {
    ambient_dim: usize,
    lines: Vec<LineEntry>,
}

/// Lines through one point, reported when an arrangement has a triple point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriplePoint {
    pub point: ProjectivePoint,
    pub lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    ambient_dim: usize,
    lines: Vec<ProjectiveLine>,
    /// Intersection point of each meeting pair `(i, j)`, `i < j`.
    meets: Vec<((usize, usize), ProjectivePoint)>,
}

/// Which counting argument bounds the diameter of a 3-edge-connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterBranch {
    /// `2t > 3s`: the edge-count bound applies.
    Dense,
    /// `2t = 3s`: the graph is cubic and the vertex-count bound applies.
    Trivalent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSideVerdict {
    pub s: usize,
    pub t: usize,
    pub bound: usize,
    pub diameter: Diameter,
    pub branch: DiameterBranch,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveVerdict {
    /// The dual graph is not 3-edge-connected, so the curve cannot be canonically embedded.
    NotCanonicallyEmbeddable,
    Hirsch,
    NotHirsch,
}

impl std::fmt::Display for CurveVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CurveVerdict::NotCanonicallyEmbeddable => "not canonically embeddable",
            CurveVerdict::Hirsch => "Hirsch",
            CurveVerdict::NotHirsch => "NotHirsch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub s: usize,
    pub t: usize,
    pub triple_point_free: bool,
    pub genus: i64,
    pub height: i64,
    /// Meeting pairs, numbered from 1.
    pub dual_graph_edges: Vec<(usize, usize)>,
    pub diameter: Diameter,
    pub edge_connectivity: usize,
    pub three_edge_connected: bool,
    pub trivalent: bool,
    /// Checked only for trivalent graphs that are 3-edge-connected.
    pub three_connected: Option<bool>,
    pub verdict: CurveVerdict,
}

impl LineArrangement {
    pub fn new(ambient_dim: usize, lines: Vec<ProjectiveLine>) -> Result<Self> {
        if ambient_dim < 2 {
            return Err(Error::InvalidParameter(format!("ambient dimension must be at least 2, got {ambient_dim}")));
        }
        if let Some(l) = lines.iter().find(|l| l.ambient_dim() != ambient_dim) {
            return Err(Error::InvalidParameter(format!(
                "a line lives in dimension {}, expected {ambient_dim}",
                l.ambient_dim()
            )));
        }
        let mut meets = Vec::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                match intersects(&lines[i], &lines[j]) {
                    Err(Error::IdenticalLines(..)) => return Err(Error::IdenticalLines(i + 1, j + 1)),
                    Err(e) => return Err(e),
                    Ok(Some(p)) => meets.push(((i, j), p)),
                    Ok(None) => {}
                }
            }
        }
        Ok(Self { ambient_dim, lines, meets })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: LinesFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let lines = file
            .lines
            .into_iter()
            .map(|entry| {
                let [p, q] = entry.points;
                let unwrap = |v: Vec<JsonRational>| v.into_iter().map(|x| x.0).collect();
                ProjectiveLine::new(unwrap(p), unwrap(q))
            })
            .collect::<Result<_>>()?;
        Self::new(file.ambient_dim, lines)
    }

    pub fn to_json(&self) -> String {
        let wrap = |v: &[BigRational]| v.iter().cloned().map(JsonRational).collect();
        let file = LinesFile {
            ambient_dim: self.ambient_dim,
            lines: self.lines.iter().map(|l| LineEntry { points: [wrap(&l.p), wrap(&l.q)] }).collect(),
        };
        serde_json::to_string(&file).expect("arrangements serialize")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn lines(&self) -> &[ProjectiveLine] {
        &self.lines
    }

    /// Meeting pairs `(i, j)` with their intersection points.
    pub fn intersections(&self) -> &[((usize, usize), ProjectivePoint)] {
        &self.meets
    }

    /// The first point lying on three or more lines, if any.
    pub fn triple_point(&self) -> Option<TriplePoint> {
        let mut through: HashMap<&ProjectivePoint, Vec<usize>> = HashMap::new();
        for ((i, j), p) in &self.meets {
            let lines = through.entry(p).or_default();
            for k in [*i, *j] {
                if !lines.contains(&k) {
                    lines.push(k);
                }
            }
        }
        let mut triples: Vec<TriplePoint> = through
            .into_iter()
            .filter(|(_, l)| l.len() >= 3)
            .map(|(p, mut lines)| {
                lines.sort_unstable();
                TriplePoint { point: p.clone(), lines }
            })
            .collect();
        triples.sort_by(|a, b| a.lines.cmp(&b.lines));
        triples.into_iter().next()
    }

    pub fn no_triple_points(&self) -> bool {
        self.triple_point().is_none()
    }

    /// Number of distinct intersection points.
    pub fn intersection_point_count(&self) -> usize {
        let mut points: Vec<&ProjectivePoint> = self.meets.iter().map(|(_, p)| p).collect();
        points.sort();
        points.dedup();
        points.len()
    }

    /// Lines `1..=s`, adjacent when they meet.
    pub fn dual_graph(&self) -> Result<Graph> {
        let mut g = Graph::with_vertices(1..=self.lines.len())?;
        for ((i, j), _) in &self.meets {
            g.add_index_edge(*i, *j)?;
        }
        Ok(g)
    }

    /// `t - s + 1`; requires that no three lines meet in a point.
    pub fn genus(&self) -> Result<i64> {
        if let Some(tp) = self.triple_point() {
            return Err(Error::Hypothesis(format!("lines {:?} meet at {}", one_based(&tp.lines), tp.point)));
        }
        Ok(self.meets.len() as i64 - self.lines.len() as i64 + 1)
    }

    /// Compares the dual-graph diameter with the height `g - 2` the ideal
    /// would have under a canonical embedding. Dual graphs that are not
    /// 3-edge-connected rule the embedding out.
    pub fn canonical_hirsch_verdict(&self) -> Result<CurveReport> {
        let g = self.genus()?;
        let s = self.lines.len();
        if s < 4 {
            return Err(Error::Hypothesis(format!("at least 4 lines are needed, got {s}")));
        }
        let graph = self.dual_graph()?;
        let t = graph.size();
        let lambda = graph.edge_connectivity()?.connectivity;
        let three_edge_connected = lambda >= 3;
        let trivalent = 2 * t == 3 * s;
        let diameter = graph.diameter()?;
        let height = g - 2;
        let three_connected = (three_edge_connected && trivalent).then(|| graph.is_k_connected(3));
        if three_connected == Some(false) {
            return Err(Error::Invariant("a cubic 3-edge-connected graph must be 3-connected".into()));
        }
        let verdict = if !three_edge_connected {
            CurveVerdict::NotCanonicallyEmbeddable
        } else if diameter.finite().is_some_and(|d| d as i64 <= height) {
            CurveVerdict::Hirsch
        } else {
            CurveVerdict::NotHirsch
        };
        Ok(CurveReport {
            s,
            t,
            triple_point_free: true,
            genus: g,
            height,
            dual_graph_edges: graph.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect(),
            diameter,
            edge_connectivity: lambda,
            three_edge_connected,
            trivalent,
            three_connected,
            verdict,
        })
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

/// For a 3-edge-connected graph with `s >= 4` vertices and `t` edges, checks
/// `diam <= t - s - 1` and names the counting branch that proves it.
pub fn verify_curve_diameter_bound(graph: &Graph) -> Result<GraphSideVerdict> {
    let s = graph.order();
    if s < 4 {
        return Err(Error::Hypothesis(format!("at least 4 vertices are needed, got {s}")));
    }
    if !graph.is_k_edge_connected(3) {
        return Err(Error::Hypothesis("the graph is not 3-edge-connected".into()));
    }
    let t = graph.size();
    let bound = t - s - 1;
    let diameter = graph.diameter()?;
    let branch = if 2 * t > 3 * s { DiameterBranch::Dense } else { DiameterBranch::Trivalent };
    let passed = diameter.finite().is_some_and(|d| d <= bound);
    Ok(GraphSideVerdict { s, t, bound, diameter, branch, passed })
}

/// Four lines in the plane, no three concurrent: `x = 0`, `y = 0`, `z = 0`
/// and `x + y + z = 0`.
pub fn general_plane_quadrilateral() -> LineArrangement {
    let lines = [
        ([0, 1, 0], [0, 0, 1]),
        ([1, 0, 0], [0, 0, 1]),
        ([1, 0, 0], [0, 1, 0]),
        ([1, -1, 0], [0, 1, -1]),
    ];
    LineArrangement::new(
        2,
        lines.iter().map(|(p, q)| ProjectiveLine::from_integers(p, q).expect("distinct points")).collect(),
    )
    .expect("valid arrangement")
}

/// The lines `x + i y + i^2 z = 0` for `i = 0..m`; no three are concurrent.
pub fn general_plane_lines(m: usize) -> Result<LineArrangement> {
    let lines = (0..m as i64)
        .map(|i| ProjectiveLine::from_integers(&[-i, 1, 0], &[-i * i, 0, 1]))
        .collect::<Result<_>>()?;
    LineArrangement::new(2, lines)
}

/// Three lines from each ruling of the quadric `xw = yz` in 3-space. Every
/// line meets the three lines of the other ruling: the dual graph is `K_{3,3}`.
pub fn quadric_grid() -> LineArrangement {
    let params = [(1, 0), (0, 1), (1, 1)];
    let mut lines = Vec::new();
    for &(a, b) in &params {
        lines.push(ProjectiveLine::from_integers(&[a, 0, b, 0], &[0, a, 0, b]).expect("distinct points"));
    }
    for &(c, d) in &params {
        lines.push(ProjectiveLine::from_integers(&[c, d, 0, 0], &[0, 0, c, d]).expect("distinct points"));
    }
    LineArrangement::new(3, lines).expect("valid arrangement")
}

/// The chain of lines `span(e_i, e_{i+1})`, `i = 0..m`, in `m`-space: each
/// line meets only its neighbors.
pub fn line_chain(m: usize) -> Result<LineArrangement> {
    if m < 2 {
        return Err(Error::InvalidParameter("a chain needs at least 2 lines".into()));
    }
    let unit = |k: usize| (0..=m).map(|j| i64::from(j == k)).collect::<Vec<i64>>();
    let lines = (0..m)
        .map(|i| ProjectiveLine::from_integers(&unit(i), &unit(i + 1)))
        .collect::<Result<_>>()?;
    LineArrangement::new(m, lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, hypercube, line_arrangement_obstruction};

    fn point(v: &[i64]) -> ProjectivePoint {
        ProjectivePoint(v.iter().map(|&x| x.into()).collect())
    }

    #[test]
    fn pairwise_intersections() {
        let x0 = ProjectiveLine::from_integers(&[0, 1, 0], &[0, 0, 1]).unwrap();
        let y0 = ProjectiveLine::from_integers(&[1, 0, 0], &[0, 0, 1]).unwrap();
        let sum = ProjectiveLine::from_integers(&[1, -1, 0], &[0, 1, -1]).unwrap();
        assert_eq!(intersects(&x0, &y0).unwrap(), Some(point(&[0, 0, 1])));
        assert_eq!(intersects(&x0, &sum).unwrap(), Some(point(&[0, 1, -1])));
        let a = ProjectiveLine::from_integers(&[1, 0, 0, 0], &[0, 1, 0, 0]).unwrap();
        let b = ProjectiveLine::from_integers(&[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap();
        assert_eq!(intersects(&a, &b).unwrap(), None);
        let a2 = ProjectiveLine::from_integers(&[1, 1, 0, 0], &[1, -1, 0, 0]).unwrap();
        assert!(matches!(intersects(&a, &a2), Err(Error::IdenticalLines(..))));
    }

    #[test]
    fn canonical_form() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let p = canonical_point(&[q(0, 1), q(-1, 2), q(3, 4)]).unwrap();
        assert_eq!(p, point(&[0, 2, -3]));
        assert!(canonical_point(&[q(0, 1), q(0, 1)]).is_none());
    }

    #[test]
    fn triple_points() {
        let quad = general_plane_quadrilateral();
        assert!(quad.no_triple_points());
        assert_eq!(quad.intersection_point_count(), 6);
        let concurrent = LineArrangement::new(
            2,
            vec![
                ProjectiveLine::from_integers(&[0, 1, 0], &[0, 0, 1]).unwrap(),
                ProjectiveLine::from_integers(&[1, 0, 0], &[0, 0, 1]).unwrap(),
                ProjectiveLine::from_integers(&[1, -1, 0], &[0, 0, 1]).unwrap(),
            ],
        )
        .unwrap();
        let tp = concurrent.triple_point().unwrap();
        assert_eq!(tp.point, point(&[0, 0, 1]));
        assert!(matches!(concurrent.genus(), Err(Error::Hypothesis(_))));
        assert!(general_plane_lines(2).unwrap().no_triple_points());
    }

    #[test]
    fn genus_examples() {
        let quad = general_plane_quadrilateral();
        assert!(quad.dual_graph().unwrap().is_complete());
        assert_eq!(quad.genus().unwrap(), 3);
        assert_eq!(general_plane_lines(2).unwrap().genus().unwrap(), 0);
        let grid = quadric_grid();
        assert_eq!((grid.dual_graph().unwrap().size(), grid.genus().unwrap()), (9, 4));
        assert!(general_plane_lines(7).unwrap().no_triple_points());
    }

    #[test]
    fn curve_verdicts() {
        let quad = general_plane_quadrilateral().canonical_hirsch_verdict().unwrap();
        assert_eq!((quad.genus, quad.height, quad.diameter), (3, 1, Diameter::Finite(1)));
        assert_eq!(quad.edge_connectivity, 3);
        assert_eq!(quad.verdict, CurveVerdict::Hirsch);
        let grid = quadric_grid().canonical_hirsch_verdict().unwrap();
        assert_eq!((grid.genus, grid.height, grid.diameter), (4, 2, Diameter::Finite(2)));
        assert!(grid.trivalent && grid.three_connected == Some(true));
        assert_eq!(grid.verdict, CurveVerdict::Hirsch);
        let chain = line_chain(4).unwrap().canonical_hirsch_verdict().unwrap();
        assert_eq!(chain.edge_connectivity, 1);
        assert_eq!(chain.verdict, CurveVerdict::NotCanonicallyEmbeddable);
    }

    #[test]
    fn graph_side() {
        let k4 = verify_curve_diameter_bound(&complete(4).unwrap()).unwrap();
        assert_eq!((k4.bound, k4.branch, k4.passed), (1, DiameterBranch::Trivalent, true));
        let q3 = verify_curve_diameter_bound(&hypercube(3).unwrap()).unwrap();
        assert_eq!((q3.bound, q3.branch, q3.passed), (3, DiameterBranch::Trivalent, true));
        let p = verify_curve_diameter_bound(&line_arrangement_obstruction()).unwrap();
        assert_eq!((p.bound, p.diameter, p.branch), (6, Diameter::Finite(2), DiameterBranch::Dense));
        assert!(verify_curve_diameter_bound(&hypercube(2).unwrap()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"ambient_dim":2,"lines":[{"points":[[0,1,0],[0,0,1]]},{"points":[["1/2",0,0],[0,0,1]]}]}"#;
        let a = LineArrangement::from_json(text).unwrap();
        assert_eq!(a.to_json(), text);
        assert!(LineArrangement::from_json(r#"{"ambient_dim":1,"lines":[]}"#).is_err());
    }
}
