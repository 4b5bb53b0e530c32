//! Simplicial complexes stored by their facets.
//!
//! A complex keeps an ordered list of opaque vertex labels and addresses
//! vertices by dense indices into that list. Facets are [`VertexSet`]s over
//! those indices. Two degenerate complexes are kept apart: the *void* complex
//! has no faces at all, while the *empty* complex `{∅}` has exactly the empty
//! face (it is the link of a facet). The checked constructors reject both.
//!
//! The join `Δ1 * Δ2` is the combinatorial model of the polar dual of a
//! product of simple polytopes: the polar of `P × Q` is the free sum of the
//! polars, whose boundary is the join of the two boundaries. Its dual graph is
//! the Cartesian product of the dual graphs, so dual-graph diameters and ideal
//! heights both add.

mod families;
mod io;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub use families::{
    clique_complex, crosspolytope_boundary, generate, simplex, simplex_boundary,
    triangle_with_tail, COMPLEX_FAMILIES,
};

/// Face counts `f_{-1}, f_0, ..., f_d`; `entries[0]` counts the empty face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<u64>);

/// Coefficients `h_0, ..., h_{d+1}` of the h-polynomial of the Stanley–Reisner ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    /// `h(1)`.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Degree of the h-polynomial (index of the last nonzero entry).
    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|&h| h != 0).unwrap_or(0)
    }
}

#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    facets: Vec<VertexSet>,
}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() || label.starts_with('#') || label.chars().any(char::is_whitespace) {
        return Err(Error::BadLabel(label.to_string()));
    }
    Ok(())
}

/// Keeps the inclusion-maximal sets, dropping duplicates, in first-appearance order.
pub(crate) fn maximal_sets(sets: Vec<VertexSet>) -> Vec<VertexSet> {
    let keep: Vec<bool> = (0..sets.len())
        .map(|i| {
            !sets.iter().enumerate().any(|(j, other)| {
                j != i
                    && sets[i].is_subset(other)
                    && (other.len() > sets[i].len() || j < i)
            })
        })
        .collect();
    sets.into_iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect()
}

/// All faces of the complex generated by `facets`, grouped by cardinality and
/// sorted lexicographically inside each group. `result[k]` holds the faces with
/// `k` vertices (dimension `k - 1`). Empty when `facets` is empty.
pub(crate) fn faces_by_size(facets: &[VertexSet]) -> Vec<Vec<VertexSet>> {
    let Some(top) = facets.iter().map(VertexSet::len).max() else {
        return Vec::new();
    };
    let mut levels: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    if let Some(words) = facets.iter().map(VertexSet::single_word).collect::<Option<Vec<u64>>>() {
        // Narrow vertex sets: deduplicate raw words by sorting.
        let mut all: Vec<u64> = Vec::new();
        for full in words {
            let mut mask = full;
            loop {
                all.push(mask);
                if mask == 0 {
                    break;
                }
                mask = (mask - 1) & full;
            }
        }
        all.sort_unstable();
        all.dedup();
        for w in all {
            levels[w.count_ones() as usize].push(VertexSet::from_word(w));
        }
    } else {
        let mut seen: Vec<FxHashSet<VertexSet>> = vec![FxHashSet::default(); top + 1];
        for facet in facets {
            for face in facet.subsets() {
                seen[face.len()].insert(face);
            }
        }
        levels = seen.into_iter().map(|set| set.into_iter().collect()).collect();
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    levels
}

fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

impl SimplicialComplex {
    /// Builds the complex whose facets are the inclusion-maximal members of
    /// `facets`. Vertices are indexed in label order, numerically when every
    /// label is an integer.
    pub fn from_facets<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: ToString,
    {
        Self::from_facets_inner(facets, false)
    }

    /// Like [`from_facets`](Self::from_facets) but an empty list yields the void complex.
    pub fn from_facets_allow_void<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: ToString,
    {
        Self::from_facets_inner(facets, true)
    }

    fn from_facets_inner<I, F, S>(facets: I, allow_void: bool) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: ToString,
    {
        let mut raw = Vec::new();
        for (i, facet) in facets.into_iter().enumerate() {
            let tokens: Vec<String> = facet.into_iter().map(|t| t.to_string()).collect();
            for t in &tokens {
                validate_label(t)?;
            }
            if tokens.is_empty() {
                return Err(Error::EmptyFacet(i));
            }
            raw.push(tokens);
        }
        let mut labels: Vec<String> = raw.iter().flatten().cloned().collect::<HashSet<_>>().into_iter().collect();
        if labels.iter().all(|l| l.parse::<i64>().is_ok()) {
            labels.sort_by_key(|l| l.parse::<i64>().unwrap_or(0));
        } else {
            labels.sort();
        }
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let sets: Vec<VertexSet> = raw
            .iter()
            .map(|tokens| {
                let mut set = VertexSet::new();
                for t in tokens {
                    set.insert(index[t.as_str()]);
                }
                set
            })
            .collect();
        if sets.is_empty() {
            return if allow_void { Ok(Self::void()) } else { Err(Error::VoidComplex) };
        }
        Ok(Self::assemble(labels, sets))
    }

    /// Builds a complex over an explicit label order. Labels not used by any
    /// facet are dropped.
    pub fn from_indexed_facets(labels: Vec<String>, facets: Vec<VertexSet>) -> Result<Self> {
        let mut seen = HashSet::new();
        for label in &labels {
            validate_label(label)?;
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        if facets.is_empty() {
            return Err(Error::VoidComplex);
        }
        for (i, f) in facets.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFacet(i));
            }
            if let Some(bad) = f.iter().find(|&v| v >= labels.len()) {
                return Err(Error::IndexOutOfRange { index: bad, len: labels.len() });
            }
        }
        Ok(Self::assemble(labels, facets))
    }

    /// The void complex: no faces, not even the empty one.
    pub fn void() -> Self {
        Self { labels: Vec::new(), index: HashMap::new(), facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_complex() -> Self {
        Self { labels: Vec::new(), index: HashMap::new(), facets: vec![VertexSet::new()] }
    }

    /// Takes maximal sets and compacts the vertex set to the vertices in use,
    /// keeping the relative label order.
    fn assemble(labels: Vec<String>, sets: Vec<VertexSet>) -> Self {
        let facets = maximal_sets(sets);
        let order = facets.iter().fold(VertexSet::new(), |acc, f| acc.union(f)).to_vec();
        let mut remap = vec![usize::MAX; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let new_labels: Vec<String> = order.iter().map(|&old| labels[old].clone()).collect();
        let facets = facets
            .iter()
            .map(|f| f.iter().map(|v| remap[v]).collect())
            .collect();
        let index = new_labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Self { labels: new_labels, index, facets }
    }

    /// A complex on the same label space from a list of index facets.
    pub(crate) fn restrict_to(&self, facets: Vec<VertexSet>) -> Self {
        if facets.is_empty() {
            return Self::void();
        }
        Self::assemble(self.labels.clone(), facets)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, vertex: usize) -> &str {
        &self.labels[vertex]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Labels of a vertex set, in index order.
    pub fn set_labels(&self, set: &VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.labels[v].as_str()).collect()
    }

    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()).ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string())))
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Largest face dimension; `-1` for `{∅}` and for the void complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    fn require_pure(&self) -> Result<()> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(())
    }

    pub fn is_face(&self, set: &VertexSet) -> bool {
        self.facets.iter().any(|f| set.is_subset(f))
    }

    /// All faces grouped by vertex count; `result[k]` holds the `(k-1)`-faces.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        faces_by_size(&self.facets)
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_size().iter().map(|v| v.len() as u64).collect())
    }

    /// The h-vector of a pure complex.
    pub fn h_vector(&self) -> Result<HVector> {
        self.require_pure()?;
        let f = self.f_vector().0;
        let top = f.len() as i64 - 1; // d + 1
        let h = (0..=top)
            .map(|k| {
                let value: i128 = (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(top - i, k - i) * f[i as usize] as i128
                    })
                    .sum();
                value as i64
            })
            .collect();
        Ok(HVector(h))
    }

    /// `h(1)`, which for a Stanley–Reisner ring counts the minimal primes.
    pub fn multiplicity(&self) -> Result<u64> {
        let h = self.h_vector()?;
        let e = h.sum();
        if e != self.facets.len() as i64 {
            return Err(Error::Invariant(format!(
                "h(1) = {e} but the complex has {} facets",
                self.facets.len()
            )));
        }
        Ok(e as u64)
    }

    /// Inclusion-minimal non-faces: the supports of the minimal monomial
    /// generators of the Stanley–Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let faces: HashSet<VertexSet> = self.faces_by_size().into_iter().flatten().collect();
        let mut found = BTreeSet::new();
        for face in &faces {
            for v in 0..self.vertex_count() {
                if face.contains(v) {
                    continue;
                }
                let mut candidate = face.clone();
                candidate.insert(v);
                if faces.contains(&candidate) {
                    continue;
                }
                let minimal = candidate.iter().all(|w| {
                    let mut smaller = candidate.clone();
                    smaller.remove(w);
                    faces.contains(&smaller)
                });
                if minimal {
                    found.insert((candidate.len(), candidate));
                }
            }
        }
        found.into_iter().map(|(_, s)| s).collect()
    }

    /// Flag: every minimal non-face has at most two vertices.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|n| n.len() <= 2)
    }

    /// Height `n - d - 1` of every minimal prime of the Stanley–Reisner ideal.
    pub fn height_of_ideal(&self) -> Result<usize> {
        self.require_pure()?;
        Ok(self.vertex_count() - self.facets[0].len())
    }

    fn check_face(&self, face: &VertexSet) -> Result<()> {
        if self.is_face(face) {
            Ok(())
        } else {
            Err(Error::NotAFace(self.describe(face)))
        }
    }

    pub(crate) fn describe(&self, set: &VertexSet) -> String {
        let names: Vec<String> = set
            .iter()
            .map(|v| self.labels.get(v).cloned().unwrap_or_else(|| format!("#{v}")))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    /// `lk(F) = { G \ F : F ⊆ G ∈ Δ }`. The link of a facet is `{∅}`.
    pub fn link(&self, face: &VertexSet) -> Result<Self> {
        self.check_face(face)?;
        Ok(self.restrict_to(
            self.facets
                .iter()
                .filter(|g| face.is_subset(g))
                .map(|g| g.difference(face))
                .collect(),
        ))
    }

    /// The subcomplex generated by the facets containing `face`.
    pub fn star(&self, face: &VertexSet) -> Result<Self> {
        self.check_face(face)?;
        Ok(self.restrict_to(self.facets.iter().filter(|g| face.is_subset(g)).cloned().collect()))
    }

    /// The restriction `Δ|_W = { F ∈ Δ : F ⊆ W }`.
    pub fn induced_subcomplex(&self, subset: &VertexSet) -> Self {
        self.restrict_to(self.facets.iter().map(|f| f.intersection(subset)).collect())
    }

    /// Vertices lying in every facet (cone points).
    pub fn cone_points(&self) -> VertexSet {
        let mut it = self.facets.iter();
        match it.next() {
            None => VertexSet::new(),
            Some(first) => it.fold(first.clone(), |acc, f| acc.intersection(f)),
        }
    }

    /// Restriction to the vertices that are not cone points.
    pub fn core(&self) -> Self {
        let keep = VertexSet::full(self.vertex_count()).difference(&self.cone_points());
        self.induced_subcomplex(&keep)
    }

    /// The join. Labels of `other` are suffixed with `_2` (or `_3`, ...) when
    /// the two label sets overlap.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.is_void() || other.is_void() {
            return Err(Error::VoidComplex);
        }
        let mine: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
        let mut renamed: Vec<String> = other.labels.clone();
        let mut k = 2;
        while renamed.iter().any(|l| mine.contains(l.as_str())) {
            renamed = other.labels.iter().map(|l| format!("{l}_{k}")).collect();
            k += 1;
        }
        let shift = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.extend(renamed);
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut u = f.clone();
                for v in g.iter() {
                    u.insert(v + shift);
                }
                facets.push(u);
            }
        }
        Ok(Self::assemble(labels, facets))
    }

    /// Facets as sorted label sets; the basis of equality.
    pub fn canonical_facets(&self) -> BTreeSet<BTreeSet<&str>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|v| self.labels[v].as_str()).collect())
            .collect()
    }
}

/// Two complexes are equal when they have the same labeled vertices and facets.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        let a: BTreeSet<&str> = self.labels.iter().map(String::as_str).collect();
        let b: BTreeSet<&str> = other.labels.iter().map(String::as_str).collect();
        a == b && self.canonical_facets() == other.canonical_facets()
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|s| self.describe(s)).collect();
        write!(f, "SimplicialComplex[{}]", facets.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn label_facets(c: &SimplicialComplex) -> Vec<Vec<String>> {
        c.facets()
            .iter()
            .map(|f| c.set_labels(f).into_iter().map(String::from).collect())
            .collect()
    }

    #[test]
    fn dedupe_and_maximality() {
        let c = cx(&[&[1, 2], &[2, 3], &[1, 2]]);
        assert_eq!(label_facets(&c), vec![vec!["1", "2"], vec!["2", "3"]]);
        let c = cx(&[&[1, 2, 3], &[1, 2]]);
        assert_eq!(label_facets(&c), vec![vec!["1", "2", "3"]]);
    }

    #[test]
    fn four_cycle_is_crosspolytope() {
        let c = cx(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(c, crosspolytope_boundary(2).unwrap());
    }

    #[test]
    fn vertices_follow_label_order() {
        let c = cx(&[&[10, 3, 1], &[2, 3]]);
        assert_eq!(c.labels(), &["1", "2", "3", "10"]);
        let named = SimplicialComplex::from_facets([["b", "a"], ["c", "10"]]).unwrap();
        assert_eq!(named.labels(), &["10", "a", "b", "c"]);
    }

    #[test]
    fn rejects_void_and_empty_facets() {
        let none: Vec<Vec<u32>> = vec![];
        assert_eq!(SimplicialComplex::from_facets(none.clone()).unwrap_err(), Error::VoidComplex);
        assert!(SimplicialComplex::from_facets_allow_void(none).unwrap().is_void());
        let err = SimplicialComplex::from_facets(vec![vec![1u32], vec![]]).unwrap_err();
        assert_eq!(err, Error::EmptyFacet(1));
        assert!(matches!(
            SimplicialComplex::from_facets(vec![vec!["a b"]]),
            Err(Error::BadLabel(_))
        ));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(simplex_boundary(2).unwrap().f_vector().0, vec![1, 3, 3]);
        assert_eq!(crosspolytope_boundary(3).unwrap().f_vector().0, vec![1, 6, 12, 8]);
        assert_eq!(cx(&[&[1]]).f_vector().0, vec![1, 1]);
    }

    #[test]
    fn h_vectors() {
        assert_eq!(crosspolytope_boundary(3).unwrap().h_vector().unwrap().0, vec![1, 3, 3, 1]);
        assert_eq!(simplex_boundary(2).unwrap().h_vector().unwrap().0, vec![1, 1, 1]);
        assert_eq!(cx(&[&[1, 2, 3]]).h_vector().unwrap().0, vec![1, 0, 0, 0]);
        assert_eq!(cx(&[&[1, 2, 3], &[3, 4]]).h_vector().unwrap_err(), Error::NotPure);
    }

    #[test]
    fn multiplicities() {
        for r in 1..=5 {
            assert_eq!(crosspolytope_boundary(r).unwrap().multiplicity().unwrap(), 1 << r);
        }
        assert_eq!(simplex_boundary(2).unwrap().multiplicity().unwrap(), 3);
        assert_eq!(triangle_with_tail().multiplicity().unwrap(), 5);
    }

    #[test]
    fn minimal_nonfaces_examples() {
        let c = crosspolytope_boundary(2).unwrap();
        let nf: Vec<Vec<&str>> = c.minimal_nonfaces().iter().map(|s| c.set_labels(s)).collect();
        assert_eq!(nf, vec![vec!["1", "2"], vec!["3", "4"]]);

        let t = simplex_boundary(2).unwrap();
        let nf: Vec<Vec<&str>> = t.minimal_nonfaces().iter().map(|s| t.set_labels(s)).collect();
        assert_eq!(nf, vec![vec!["1", "2", "3"]]);
    }

    #[test]
    fn flag_height_dimension() {
        let c = crosspolytope_boundary(2).unwrap();
        assert!(c.is_flag());
        assert_eq!(c.height_of_ideal().unwrap(), 2);
        let t = simplex_boundary(2).unwrap();
        assert!(!t.is_flag());
        assert_eq!(t.height_of_ideal().unwrap(), 1);
        let r = triangle_with_tail();
        assert!(r.is_pure());
        assert_eq!(r.dimension(), 1);
        assert_eq!(r.vertex_count(), 5);
        assert_eq!(r.height_of_ideal().unwrap(), 3);
        assert_eq!(cx(&[&[1, 2], &[3]]).height_of_ideal().unwrap_err(), Error::NotPure);
    }

    #[test]
    fn link_of_facet_is_empty_complex() {
        let c = simplex_boundary(2).unwrap();
        let f = c.facets()[0].clone();
        assert!(c.link(&f).unwrap().is_empty_complex());
        let bad = c.face_from_labels(&["1", "2", "3"]).unwrap();
        assert!(matches!(c.link(&bad), Err(Error::NotAFace(_))));
    }

    #[test]
    fn star_contains_vertex_everywhere() {
        let c = triangle_with_tail();
        for v in 0..c.vertex_count() {
            let star = c.star(&VertexSet::singleton(v)).unwrap();
            let label = c.label(v);
            let idx = star.index_of(label).unwrap();
            assert!(star.facets().iter().all(|f| f.contains(idx)));
        }
    }

    #[test]
    fn join_relabels_overlaps() {
        let a = cx(&[&[1], &[2]]);
        let j = a.join(&a).unwrap();
        assert_eq!(j.labels(), &["1", "2", "1_2", "2_2"]);
        assert_eq!(j.facet_count(), 4);
        assert!(a.join(&SimplicialComplex::void()).is_err());
        assert_eq!(a.join(&SimplicialComplex::empty_complex()).unwrap(), a);
    }
}
