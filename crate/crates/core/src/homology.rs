//! Reduced simplicial homology over a field, and the homological predicates
//! built on it.
//!
//! Cohen–Macaulayness is decided by Reisner's criterion (link homology
//! vanishes below the top dimension), Gorensteinness by asking whether the
//! core is a homology sphere, and Castelnuovo–Mumford regularity by Hochster's
//! formula `reg = max { i : H̃_{i-1}(Δ|_W) ≠ 0 }` over all vertex subsets `W`.
//! Every answer depends on the coefficient field; torsion is invisible.

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::complex::{faces_by_size, maximal_sets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, RationalMatrix, SparseIntMatrix};
use crate::vertex_set::VertexSet;

/// Default cap on the vertex count for the regularity sweep.
pub const DEFAULT_HOCHSTER_CAP: usize = 20;

/// Reduced Betti numbers `b̃_{-1}, b̃_0, ..., b̃_d` of a complex over a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    pub complex: SimplicialComplex,
    pub field: FieldSpec,
    pub reduced_betti: Vec<usize>,
}

impl BettiProfile {
    /// `b̃_dim`; zero outside the stored range.
    pub fn betti(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.reduced_betti.get(i).copied())
            .unwrap_or(0)
    }

    /// `Σ (-1)^i b̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.reduced_betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Castelnuovo–Mumford regularity with a Hochster witness: the induced
/// subcomplex on `witness` has nonzero `b̃_{value-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityCertificate {
    pub value: usize,
    pub witness: VertexSet,
}

impl RegularityCertificate {
    /// Recomputes the witnessing Betti number.
    pub fn verify(&self, complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
        let restricted = complex.induced_subcomplex(&self.witness);
        let betti = reduced_betti_numbers(&restricted, field)?;
        Ok(betti.betti(self.value as isize - 1) > 0)
    }
}

/// Faces of a facet list and lazily computed boundary ranks.
struct ChainComplex {
    faces: Vec<Vec<VertexSet>>,
    index: Vec<FxHashMap<VertexSet, usize>>,
    ranks: Vec<Option<usize>>,
    /// Per size, the faces known to have boundaries dependent on those of
    /// later faces of the same size.
    cleared: Vec<Vec<bool>>,
    field: FieldSpec,
}

impl ChainComplex {
    fn new(facets: &[VertexSet], field: FieldSpec) -> Self {
        let faces = faces_by_size(facets);
        let index = faces
            .iter()
            .map(|level| level.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();
        let ranks = vec![None; faces.len() + 1];
        let cleared = faces.iter().map(|level| vec![false; level.len()]).collect();
        Self { faces, index, ranks, cleared, field }
    }

    /// Number of face sizes, i.e. `dim + 2`.
    fn levels(&self) -> usize {
        self.faces.len()
    }

    /// Rows are the faces with `size` vertices, columns those with one vertex
    /// fewer: the transpose of the boundary map. Rows flagged in `skip` are
    /// left out.
    fn boundary_rows(&self, size: usize, skip: &[bool]) -> SparseIntMatrix {
        let lower = &self.index[size - 1];
        let mut m = SparseIntMatrix::new(self.faces[size - 1].len());
        for (i, face) in self.faces[size].iter().enumerate() {
            if skip.get(i).copied().unwrap_or(false) {
                continue;
            }
            let entries = face
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let mut facet = face.clone();
                    facet.remove(v);
                    (lower[&facet], if pos % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            m.push_row(entries);
        }
        m
    }

    /// Rank of the boundary map out of the faces with `size` vertices.
    ///
    /// Ranks are computed from the top down. A pivot column `σ` of the echelon
    /// form one level up is the leading face of a cycle whose other faces come
    /// later, so `∂σ` lies in the span of later boundaries and its row can be
    /// dropped without changing the rank.
    fn rank(&mut self, size: usize) -> Result<usize> {
        if size == 0 || size >= self.levels() {
            return Ok(0);
        }
        if let Some(r) = self.ranks[size] {
            return Ok(r);
        }
        self.rank(size + 1)?;
        let (r, pivots) = self.boundary_rows(size, &self.cleared[size]).rank_with_pivots(self.field)?;
        for p in pivots.unwrap_or_default() {
            self.cleared[size - 1][p] = true;
        }
        self.ranks[size] = Some(r);
        Ok(r)
    }

    /// `b̃_{size-1}`.
    fn betti(&mut self, size: usize) -> Result<usize> {
        if size >= self.levels() {
            return Ok(0);
        }
        Ok(self.faces[size].len() - self.rank(size)? - self.rank(size + 1)?)
    }

    fn all_betti(&mut self) -> Result<Vec<usize>> {
        (0..self.levels()).map(|k| self.betti(k)).collect()
    }
}

fn betti_of_facets(facets: &[VertexSet], field: FieldSpec) -> Result<Vec<usize>> {
    ChainComplex::new(facets, field).all_betti()
}

/// The augmented boundary map `∂_i : C_i → C_{i-1}` for `-1 <= i <= dim`.
/// Faces are ordered lexicographically inside each dimension and the sign of
/// a codimension-one face is `(-1)^j` for the omitted vertex in position `j`.
pub fn boundary_matrix(complex: &SimplicialComplex, i: isize) -> Result<RationalMatrix> {
    let dim = complex.dimension();
    if complex.is_void() || i < -1 || i > dim {
        return Err(Error::DimensionOutOfRange { index: i, min: -1, max: dim });
    }
    let chain = ChainComplex::new(complex.facets(), FieldSpec::Rationals);
    let size = (i + 1) as usize;
    if size == 0 {
        return Ok(RationalMatrix::zeros(0, 1));
    }
    Ok(chain.boundary_rows(size, &[]).to_rational().transpose())
}

pub fn reduced_betti_numbers(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiProfile> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(BettiProfile {
        complex: complex.clone(),
        field,
        reduced_betti: betti_of_facets(complex.facets(), field)?,
    })
}

fn link_facets(facets: &[VertexSet], face: &VertexSet) -> Vec<VertexSet> {
    facets.iter().filter(|g| face.is_subset(g)).map(|g| g.difference(face)).collect()
}

fn all_faces(facets: &[VertexSet]) -> impl Iterator<Item = VertexSet> {
    faces_by_size(facets).into_iter().flatten()
}

/// Facets relabeled onto `0..m` in vertex order and sorted, so that links
/// differing only by such a relabeling share a key.
fn normalized(facets: Vec<VertexSet>) -> Vec<VertexSet> {
    let support = facets.iter().fold(VertexSet::new(), |acc, g| acc.union(g)).to_vec();
    let mut key: Vec<VertexSet> = facets
        .iter()
        .map(|g| {
            let mut relabeled = VertexSet::new();
            for v in g.iter() {
                relabeled.insert(support.binary_search(&v).expect("vertex of the support"));
            }
            relabeled
        })
        .collect();
    key.sort();
    key
}

/// Whether every link of a pure complex, itself included, passes `test` on its
/// reduced Betti numbers. Uses `lk(F) = lk_{lk(v)}(F - v)` for `v` in `F`: the
/// complex passes, then every vertex link passes recursively. Verdicts are
/// memoized on normalized facet lists, so symmetric complexes are cheap.
fn all_links(facets: &[VertexSet], field: FieldSpec, test: fn(&[usize]) -> bool) -> Result<bool> {
    fn visit(
        key: Vec<VertexSet>,
        field: FieldSpec,
        test: fn(&[usize]) -> bool,
        seen: &mut FxHashMap<Vec<VertexSet>, bool>,
    ) -> Result<bool> {
        if let Some(&verdict) = seen.get(&key) {
            return Ok(verdict);
        }
        let mut verdict = test(&betti_of_facets(&key, field)?);
        let vertices = key.iter().fold(VertexSet::new(), |acc, g| acc.union(g));
        for v in vertices.iter() {
            if !verdict {
                break;
            }
            let link = normalized(link_facets(&key, &VertexSet::singleton(v)));
            verdict = visit(link, field, test, seen)?;
        }
        seen.insert(key, verdict);
        Ok(verdict)
    }
    visit(normalized(facets.to_vec()), field, test, &mut FxHashMap::default())
}

/// Reisner's criterion: every link (the link of `∅` is the complex itself)
/// has vanishing reduced homology below its top dimension.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    // Reisner's condition forces purity.
    if !complex.is_pure() {
        return Ok(false);
    }
    all_links(complex.facets(), field, |betti| betti[..betti.len() - 1].iter().all(|&b| b == 0))
}

/// Every link, the complex included, has the reduced homology of a sphere of
/// its own dimension over `field`. Non-pure complexes are never spheres.
pub fn is_homology_sphere(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Ok(false);
    }
    all_links(complex.facets(), field, |betti| {
        let (top, lower) = betti.split_last().expect("a link has at least the empty face");
        *top == 1 && lower.iter().all(|&b| b == 0)
    })
}

/// Gorenstein over `field` iff the core is a homology sphere. A simplex has
/// empty core and a polynomial ring as Stanley–Reisner ring, hence `true`.
pub fn is_gorenstein(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let core = complex.core();
    if core.is_empty_complex() {
        return Ok(true);
    }
    is_homology_sphere(&core, field)
}

/// Strong connectivity of a list of equal-size facets.
pub(crate) fn strongly_connected(facets: &[&VertexSet]) -> bool {
    let Some(first) = facets.first() else {
        return true;
    };
    let d = first.len();
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..facets.len() {
            if !seen[j] && facets[i].intersection_len(facets[j]) + 1 == d {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Normal: strongly connected, and so is the star of every nonempty face.
pub fn is_normal(complex: &SimplicialComplex) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = complex.facets();
    if !strongly_connected(&facets.iter().collect::<Vec<_>>()) {
        return Ok(false);
    }
    for face in all_faces(facets).filter(|f| !f.is_empty()) {
        let star: Vec<&VertexSet> = facets.iter().filter(|g| face.is_subset(g)).collect();
        if !strongly_connected(&star) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regularity of the Stanley–Reisner ring via Hochster's formula.
///
/// The sweep visits the full vertex set first and then every subset in
/// Gray-code order, updating facet/subset intersection sizes incrementally.
/// A subset is skipped when its restriction is too low-dimensional to beat the
/// current maximum. When the regularity disagrees with the degree of the
/// h-polynomial the complex is checked to be non-Cohen–Macaulay, since for
/// Cohen–Macaulay rings the two coincide.
pub fn regularity(
    complex: &SimplicialComplex,
    field: FieldSpec,
    max_vertices: usize,
) -> Result<RegularityCertificate> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = complex.vertex_count();
    if n > max_vertices || n >= 63 {
        return Err(Error::HochsterCap { vertices: n, cap: max_vertices.min(62) });
    }
    let facets = complex.facets();
    let mut best = 0;
    let mut witness = VertexSet::new();

    let probe = |subset: &VertexSet, top_size: usize, best: &mut usize, witness: &mut VertexSet| -> Result<()> {
        if top_size <= *best {
            return Ok(());
        }
        let restricted = maximal_sets(facets.iter().map(|f| f.intersection(subset)).collect());
        let mut chain = ChainComplex::new(&restricted, field);
        // b̃_{k-1} for k = top_size down to best + 1
        for k in (*best + 1..=top_size).rev() {
            if chain.betti(k)? > 0 {
                *best = k;
                *witness = subset.clone();
                break;
            }
        }
        Ok(())
    };

    let full = VertexSet::full(n);
    let top = facets.iter().map(VertexSet::len).max().unwrap_or(0);
    probe(&full, top, &mut best, &mut witness)?;

    let mut subset = VertexSet::new();
    let mut counts = vec![0usize; facets.len()];
    let containing: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..facets.len()).filter(|&f| facets[f].contains(v)).collect())
        .collect();
    for step in 1u64..(1u64 << n) {
        let v = step.trailing_zeros() as usize;
        let adding = subset.insert(v);
        if !adding {
            subset.remove(v);
        }
        for &f in &containing[v] {
            if adding {
                counts[f] += 1;
            } else {
                counts[f] -= 1;
            }
        }
        let top = counts.iter().copied().max().unwrap_or(0);
        probe(&subset, top, &mut best, &mut witness)?;
    }

    if complex.is_pure() {
        let degree = complex.h_vector()?.degree();
        if degree != best && is_cohen_macaulay(complex, field)? {
            return Err(Error::Invariant(format!(
                "Cohen-Macaulay complex with regularity {best} but h-polynomial of degree {degree}"
            )));
        }
    }
    Ok(RegularityCertificate { value: best, witness })
}
