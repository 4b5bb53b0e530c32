//! Arrangements of rational linear subspaces, given by the linear forms that
//! cut out each component.
//!
//! The height of a component is the rank of its forms. For an unmixed
//! arrangement of height `c`, two components are adjacent in the dual graph
//! when their forms together have rank `c + 1`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{self, ConnectivityReport, Diameter, Graph, HirschVerdict};
use crate::linalg::{FieldSpec, RationalMatrix};
use crate::rational::JsonRational;

/// Draws tried by [`SubspaceArrangement::generic_hyperplane_section`].
pub const SECTION_ATTEMPTS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceArrangement {
    variables: usize,
    components: Vec<RationalMatrix>,
    heights: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementFile {
    variables: usize,
    components: Vec<Vec<Vec<JsonRational>>>,
}

fn rank(m: &RationalMatrix) -> usize {
    m.rank(FieldSpec::Rationals).expect("rank over the rationals cannot fail")
}

/// Outcome of checking that the dual graph is `r`-connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityCheck {
    pub r: usize,
    pub passed: bool,
    pub vertex_connectivity: usize,
    /// A separating set of components when the check fails on connectivity.
    pub cut: Option<Vec<usize>>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetBound {
    /// Components numbered from 1.
    pub subset: Vec<usize>,
    pub regularity_bound: usize,
}

/// Summary of an arrangement. Graph data is present only when the
/// arrangement is unmixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementReport {
    pub variables: usize,
    pub heights: Vec<usize>,
    pub unmixed: bool,
    pub common_height: Option<usize>,
    pub multiplicity: usize,
    /// Adjacent components, numbered from 1.
    pub dual_graph_edges: Option<Vec<(usize, usize)>>,
    pub connectivity: Option<ConnectivityReport>,
    pub diameter: Option<Diameter>,
    pub hirsch: Option<HirschVerdict>,
    pub regularity_bounds: Vec<SubsetBound>,
}

impl SubspaceArrangement {
    /// Validates that every form has `variables` entries, every component has
    /// a nonzero form and no two components span the same row space.
    pub fn new(variables: usize, components: Vec<Vec<Vec<BigRational>>>) -> Result<Self> {
        if variables == 0 {
            return Err(Error::InvalidParameter("an arrangement needs at least one variable".into()));
        }
        if components.is_empty() {
            return Err(Error::InvalidParameter("an arrangement needs at least one component".into()));
        }
        let components: Vec<RationalMatrix> = components
            .into_iter()
            .map(|forms| RationalMatrix::from_rows(forms, variables))
            .collect::<Result<_>>()?;
        let heights: Vec<usize> = components.iter().map(rank).collect();
        if let Some(i) = heights.iter().position(|&h| h == 0) {
            return Err(Error::InvalidParameter(format!("component {} has no nonzero form", i + 1)));
        }
        let arrangement = Self { variables, components, heights };
        for i in 0..arrangement.components.len() {
            for j in i + 1..arrangement.components.len() {
                if arrangement.same_component(i, j) {
                    return Err(Error::InvalidParameter(format!(
                        "components {} and {} span the same subspace",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(arrangement)
    }

    pub fn from_integer_components(variables: usize, components: &[Vec<Vec<i64>>]) -> Result<Self> {
        Self::new(
            variables,
            components
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|f| f.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ArrangementFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::new(
            file.variables,
            file.components
                .into_iter()
                .map(|c| c.into_iter().map(|f| f.into_iter().map(|q| q.0).collect()).collect())
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        let file = ArrangementFile {
            variables: self.variables,
            components: self
                .components
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| m.row(r).iter().cloned().map(JsonRational).collect())
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("arrangements serialize")
    }

    /// The coordinate arrangement of a pure complex: one component per facet,
    /// cut out by the variables of the vertices outside the facet.
    pub fn from_complex(complex: &SimplicialComplex) -> Result<Self> {
        if complex.is_void() {
            return Err(Error::VoidComplex);
        }
        if !complex.is_pure() {
            return Err(Error::NotPure);
        }
        let n = complex.vertex_count();
        if complex.facets().iter().any(|f| f.len() == n) {
            return Err(Error::Hypothesis("a simplex has the zero ideal, with no linear forms".into()));
        }
        let components = complex
            .facets()
            .iter()
            .map(|f| {
                (0..n)
                    .filter(|&v| !f.contains(v))
                    .map(|v| {
                        (0..n)
                            .map(|j| if j == v { BigRational::one() } else { BigRational::zero() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let arrangement = Self::new(n, components)?;
        if arrangement.dual_graph()?.edges() != graph::dual_graph(complex)?.edges() {
            return Err(Error::Invariant("coordinate arrangement and complex disagree on the dual graph".into()));
        }
        Ok(arrangement)
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_height(&self, i: usize) -> Result<usize> {
        self.heights
            .get(i)
            .copied()
            .ok_or(Error::IndexOutOfRange { index: i, len: self.components.len() })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn is_unmixed(&self) -> bool {
        self.heights.iter().all(|&h| h == self.heights[0])
    }

    pub fn common_height(&self) -> Result<usize> {
        if self.is_unmixed() {
            Ok(self.heights[0])
        } else {
            Err(Error::NotUnmixed)
        }
    }

    /// Number of components, which is the multiplicity of the coordinate ring.
    pub fn multiplicity(&self) -> usize {
        self.components.len()
    }

    fn joint_rank(&self, i: usize, j: usize) -> usize {
        rank(&self.components[i].stack(&self.components[j]).expect("equal widths"))
    }

    fn same_component(&self, i: usize, j: usize) -> bool {
        self.heights[i] == self.heights[j] && self.joint_rank(i, j) == self.heights[i]
    }

    /// Components `1..=s` are adjacent when their sum has height `c + 1`.
    pub fn dual_graph(&self) -> Result<Graph> {
        let c = self.common_height()?;
        let mut g = Graph::with_vertices(1..=self.len())?;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.joint_rank(i, j) == c + 1 {
                    g.add_index_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn hirsch_verdict(&self) -> Result<HirschVerdict> {
        let diameter = self.dual_graph()?.diameter()?;
        Ok(graph::hirsch_verdict(diameter, self.common_height()?))
    }

    /// Restricts to a general hyperplane by substituting
    /// `x_n = a_1 x_1 + ... + a_{n-1} x_{n-1}` with seeded random integers
    /// `a_i ∈ [1, 2^16]`. A draw is accepted when it keeps every height, keeps
    /// the components distinct and reproduces the dual graph edge for edge;
    /// otherwise the seed is incremented, up to [`SECTION_ATTEMPTS`] times.
    pub fn generic_hyperplane_section(&self, seed: u64) -> Result<Self> {
        let n = self.variables;
        let c = self.common_height()?;
        if let Some(i) = self.heights.iter().position(|&h| h >= n) {
            return Err(Error::Hypothesis(format!("component {} has height {} = n, nothing to cut", i + 1, self.heights[i])));
        }
        if n - c < 3 {
            return Err(Error::Hypothesis(format!(
                "the dual graph is only preserved when dim S/I >= 3, here dim S/I = {}",
                n - c
            )));
        }
        let target = self.dual_graph()?.edges();
        let mut reason = String::new();
        for attempt in 0..SECTION_ATTEMPTS {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
            let a: Vec<BigRational> = (0..n - 1)
                .map(|_| BigRational::from_integer(rng.gen_range(1i64..=1 << 16).into()))
                .collect();
            let components: Vec<Vec<Vec<BigRational>>> = self
                .components
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| {
                            let row = m.row(r);
                            (0..n - 1).map(|i| &row[i] + &row[n - 1] * &a[i]).collect()
                        })
                        .collect()
                })
                .collect();
            let section = match Self::new(n - 1, components) {
                Ok(s) => s,
                Err(e) => {
                    reason = e.to_string();
                    continue;
                }
            };
            if section.heights != self.heights {
                reason = "a component height dropped".into();
                continue;
            }
            if section.dual_graph()?.edges() != target {
                reason = "the dual graph changed".into();
                continue;
            }
            return Ok(section);
        }
        Err(Error::RetryExhausted { attempts: SECTION_ATTEMPTS, reason })
    }

    /// `|B| - 1`, an upper bound on the regularity of the coordinate ring of
    /// the sub-arrangement indexed by `subset`.
    pub fn derksen_sidman_bound(&self, subset: &[usize]) -> Result<usize> {
        if subset.is_empty() {
            return Err(Error::InvalidParameter("the subset of components is empty".into()));
        }
        let mut seen = vec![false; self.len()];
        for &i in subset {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange { index: i, len: self.len() });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParameter(format!("component {} repeated", i + 1)));
            }
        }
        Ok(subset.len() - 1)
    }

    /// Whether the dual graph is `r`-connected. The regularity `r` is taken
    /// on trust; the arrangement is assumed Gorenstein by the caller.
    pub fn verify_regularity_connectivity(&self, r: usize) -> Result<ConnectivityCheck> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        let g = self.dual_graph()?;
        let note = "regularity and Gorensteinness supplied by the caller".to_string();
        if g.order() < r + 1 {
            let connectivity = if g.order() < 2 { 0 } else { g.vertex_connectivity()?.connectivity };
            return Ok(ConnectivityCheck {
                r,
                passed: false,
                vertex_connectivity: connectivity,
                cut: None,
                note: format!("{note}; only {} components, fewer than r + 1", g.order()),
            });
        }
        let cut = g.vertex_connectivity()?;
        let passed = cut.connectivity >= r;
        Ok(ConnectivityCheck {
            r,
            passed,
            vertex_connectivity: cut.connectivity,
            cut: if passed { None } else { cut.cut },
            note,
        })
    }

    /// Full report; `subsets` select the sub-arrangements whose regularity
    /// bound is listed (the whole arrangement when empty).
    pub fn report(&self, subsets: &[Vec<usize>]) -> Result<ArrangementReport> {
        let whole: Vec<usize> = (0..self.len()).collect();
        let chosen: Vec<&Vec<usize>> = if subsets.is_empty() { vec![&whole] } else { subsets.iter().collect() };
        let regularity_bounds = chosen
            .into_iter()
            .map(|b| Ok(SubsetBound { subset: b.iter().map(|i| i + 1).collect(), regularity_bound: self.derksen_sidman_bound(b)? }))
            .collect::<Result<_>>()?;
        let mut report = ArrangementReport {
            variables: self.variables,
            heights: self.heights.clone(),
            unmixed: self.is_unmixed(),
            common_height: self.common_height().ok(),
            multiplicity: self.multiplicity(),
            dual_graph_edges: None,
            connectivity: None,
            diameter: None,
            hirsch: None,
            regularity_bounds,
        };
        if let Some(c) = report.common_height {
            let g = self.dual_graph()?;
            let diameter = g.diameter()?;
            report.dual_graph_edges = Some(g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect());
            report.connectivity = if g.order() >= 2 { Some(g.connectivity_report()?) } else { None };
            report.diameter = Some(diameter);
            report.hirsch = Some(graph::hirsch_verdict(diameter, c));
        }
        Ok(report)
    }
}

/// Four planes in 4-space, `(x1,x2), (x2,x3), (x3,x4), (x4,x1+x3)`, whose
/// dual graph is a path of length 3 while the height is 2.
pub fn non_hirsch_path_arrangement() -> SubspaceArrangement {
    SubspaceArrangement::from_integer_components(
        4,
        &[
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
            vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
            vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
            vec![vec![0, 0, 0, 1], vec![1, 0, 1, 0]],
        ],
    )
    .expect("valid arrangement")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{crosspolytope_boundary, simplex_boundary, triangle_with_tail};
    use crate::graph::hypercube;

    #[test]
    fn heights_and_unmixedness() {
        let a = non_hirsch_path_arrangement();
        assert_eq!(a.component_height(0).unwrap(), 2);
        assert_eq!(a.component_height(3).unwrap(), 2);
        assert!(a.component_height(4).is_err());
        let mixed = SubspaceArrangement::from_integer_components(2, &[vec![vec![1, 0]], vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert!(!mixed.is_unmixed());
        assert_eq!(mixed.dual_graph().unwrap_err(), Error::NotUnmixed);
    }

    #[test]
    fn path_arrangement() {
        let a = non_hirsch_path_arrangement();
        let g = a.dual_graph().unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.diameter().unwrap(), Diameter::Finite(3));
        assert_eq!(a.hirsch_verdict().unwrap(), HirschVerdict::NotHirsch);
        assert_eq!(a.derksen_sidman_bound(&[0, 1, 2, 3]).unwrap(), 3);
        assert!(matches!(a.generic_hyperplane_section(0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn disjoint_planes() {
        let a = SubspaceArrangement::from_integer_components(
            4,
            &[vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]], vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]]],
        )
        .unwrap();
        assert_eq!(a.dual_graph().unwrap().size(), 0);
        assert_eq!(a.hirsch_verdict().unwrap(), HirschVerdict::Disconnected);
    }

    #[test]
    fn duplicate_components_rejected() {
        let dup = SubspaceArrangement::from_integer_components(
            3,
            &[vec![vec![1, 0, 0], vec![0, 1, 0]], vec![vec![1, 1, 0], vec![1, -1, 0]]],
        );
        assert!(matches!(dup, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn coordinate_arrangements() {
        let tri = SimplicialComplex::from_facets([[1, 2], [1, 3], [2, 3]]).unwrap();
        let a = SubspaceArrangement::from_complex(&tri).unwrap();
        assert_eq!(a.len(), 3);
        assert!(a.dual_graph().unwrap().is_complete());
        let c2 = SubspaceArrangement::from_complex(&crosspolytope_boundary(2).unwrap()).unwrap();
        assert_eq!(c2.heights(), &[2, 2, 2, 2]);
        let tail = SubspaceArrangement::from_complex(&triangle_with_tail()).unwrap();
        assert_eq!(tail.heights(), &[3; 5]);
        assert_eq!(tail.dual_graph().unwrap().min_degree(), Some(1));
    }

    #[test]
    fn hyperplane_section_of_octahedron() {
        let a = SubspaceArrangement::from_complex(&crosspolytope_boundary(3).unwrap()).unwrap();
        let s = a.generic_hyperplane_section(7).unwrap();
        assert_eq!((s.variables(), s.len()), (5, 8));
        assert_eq!(s.heights(), a.heights());
        assert!(s.dual_graph().unwrap().is_isomorphic(&hypercube(3).unwrap()));
        assert_eq!(s, a.generic_hyperplane_section(7).unwrap());
    }

    #[test]
    fn regularity_connectivity() {
        let a = SubspaceArrangement::from_complex(&crosspolytope_boundary(3).unwrap()).unwrap();
        assert!(a.verify_regularity_connectivity(3).unwrap().passed);
        let fail = a.verify_regularity_connectivity(4).unwrap();
        assert!(!fail.passed);
        let s = SubspaceArrangement::from_complex(&simplex_boundary(3).unwrap()).unwrap();
        assert!(s.verify_regularity_connectivity(3).unwrap().passed);
        let tail = SubspaceArrangement::from_complex(&triangle_with_tail()).unwrap();
        let check = tail.verify_regularity_connectivity(2).unwrap();
        assert!(!check.passed);
        assert_eq!(check.cut.unwrap().len(), 1);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"variables":3,"components":[[[1,"1/2",0]],[[0,0,"-3/7"]]]}"#;
        let a = SubspaceArrangement::from_json(text).unwrap();
        assert_eq!(a.to_json(), text);
        assert!(SubspaceArrangement::from_json(r#"{"variables":3,"components":[[[1,"2/4",0]]]}"#).is_err());
        assert!(SubspaceArrangement::from_json(r#"{"variables":2,"components":[[[1,0,0]]]}"#).is_err());
    }

    #[test]
    fn subset_bounds() {
        let a = non_hirsch_path_arrangement();
        assert_eq!(a.derksen_sidman_bound(&[0]).unwrap(), 0);
        assert_eq!(a.derksen_sidman_bound(&[0, 1, 2]).unwrap(), 2);
        assert!(a.derksen_sidman_bound(&[]).is_err());
        assert!(a.derksen_sidman_bound(&[0, 0]).is_err());
    }
}
