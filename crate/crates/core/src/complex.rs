//! Simplicial complexes on a vertex set `{1, ..., n}`, stored as antichains of
//! bitmask facets.
//!
//! Vertices are 0-based internally; every input and every rendered label is
//! 1-based. A complex is valid when its facets are pairwise incomparable and
//! every vertex lies in some facet, so in particular every singleton is a
//! face. The complex whose only face is the empty set is representable as a
//! distinguished value ([`SimplicialComplex::empty`]); it shows up as the link
//! of a facet and in degree-complex computations, never as the output of
//! [`SimplicialComplex::from_facets`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Hard cap on the vertex count: faces are single machine words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet list is empty")]
    EmptyInput,
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),
    #[error("vertex {vertex} out of range 1..={n_vertices}")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
}

/// A face: a subset of the vertex set, stored as a bitmask.
///
/// Bit `i` set means the 0-based vertex `i` is a member. The empty face is
/// allowed and has dimension -1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        Face(1 << v)
    }

    /// Builds a face from 0-based vertex indices.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut mask = 0u64;
        for v in vertices {
            debug_assert!(v < MAX_VERTICES);
            mask |= 1 << v;
        }
        Face(mask)
    }

    /// The full face `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    /// `#F - 1`; the empty face has dimension -1.
    pub fn dim(self) -> i32 {
        self.cardinality() as i32 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> Face {
        Face(self.0 | 1 << v)
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Face {
        Face(Face::full(n).0 & !self.0)
    }

    /// Iterates the 0-based member vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let v = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(v)
            }
        })
    }

    /// 1-based labels, for reports.
    pub fn labels(self) -> Vec<usize> {
        self.vertices().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face{self}")
    }
}

impl fmt::Display for Face {
    /// Renders with 1-based labels, e.g. `{1,3}`; the empty face is `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

/// A simplicial complex, determined by its vertex count and its facets.
///
/// The face set is the downward closure of the facets. Invariants: facets
/// form an antichain under inclusion, and (except for the distinguished
/// empty complex) every vertex lies in some facet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<Face>,
}

/// A complex re-indexed onto its own vertex set, remembering where each
/// vertex came from: `labels[v]` is the 0-based ambient vertex behind the
/// 0-based local vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComplex {
    pub complex: SimplicialComplex,
    pub labels: Vec<usize>,
}

impl LabeledComplex {
    /// Maps a face of the re-indexed complex back to ambient labels.
    pub fn to_ambient(&self, local: Face) -> Face {
        Face::from_vertices(local.vertices().map(|v| self.labels[v]))
    }
}

impl SimplicialComplex {
    /// The complex `{∅}`: no vertices, one empty face.
    pub fn empty() -> Self {
        SimplicialComplex {
            n_vertices: 0,
            facets: vec![Face::EMPTY],
        }
    }

    pub fn is_empty_complex(&self) -> bool {
        self.n_vertices == 0
    }

    /// Builds a complex from 1-based facet lists. The facets kept are the
    /// inclusion-maximal members of the input.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(n));
        }
        if facets.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut mask = 0u64;
            for &v in facet {
                if v == 0 || v > n {
                    return Err(ComplexError::VertexOutOfRange {
                        vertex: v,
                        n_vertices: n,
                    });
                }
                mask |= 1 << (v - 1);
            }
            masks.push(Face::from_mask(mask));
        }
        Self::from_facet_masks(n, masks)
    }

    /// Builds a complex from 0-based facet masks, keeping maximal ones.
    pub fn from_facet_masks(n: usize, facets: Vec<Face>) -> Result<Self, ComplexError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(n));
        }
        if facets.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let facets = maximal_faces(facets);
        let covered = facets.iter().fold(0u64, |acc, f| acc | f.mask());
        if let Some(v) = Face::full(n)
            .difference(Face::from_mask(covered))
            .vertices()
            .next()
        {
            return Err(ComplexError::UncoveredVertex(v + 1));
        }
        Ok(SimplicialComplex {
            n_vertices: n,
            facets,
        })
    }

    /// Direct construction from a facet antichain covering the vertex set;
    /// callers guarantee the invariants, the facets are only re-sorted.
    pub(crate) fn from_antichain_unchecked(n: usize, mut facets: Vec<Face>) -> SimplicialComplex {
        facets.sort_unstable();
        debug_assert!(!facets.is_empty() && (1..=MAX_VERTICES).contains(&n));
        debug_assert!(facets
            .iter()
            .all(|f| facets.iter().all(|g| f == g || !f.is_subset_of(*g))));
        debug_assert_eq!(
            facets.iter().fold(0u64, |acc, f| acc | f.mask()),
            Face::full(n).mask()
        );
        SimplicialComplex {
            n_vertices: n,
            facets,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Facets in increasing mask order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n_vertices)
    }

    /// Max facet dimension; -1 for the empty complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// Krull dimension of the face ring, `dim Δ + 1`.
    pub fn krull_dim(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        let mut cards = self.facets.iter().map(|f| f.cardinality());
        match cards.next() {
            None => true,
            Some(first) => cards.all(|c| c == first),
        }
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces, including the empty face, in increasing mask order.
    pub fn faces(&self) -> Vec<Face> {
        self.faces_containing(Face::EMPTY)
    }

    /// All faces containing `base`, in increasing mask order.
    pub fn faces_containing(&self, base: Face) -> Vec<Face> {
        let mut seen = std::collections::BTreeSet::new();
        for facet in &self.facets {
            if !base.is_subset_of(*facet) {
                continue;
            }
            let free = facet.difference(base).mask();
            // enumerate all submasks of `free`
            let mut sub = free;
            loop {
                seen.insert(Face::from_mask(sub | base.mask()));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        seen.into_iter().collect()
    }

    /// The link of a face, re-indexed onto the vertices that appear in it.
    ///
    /// The link of a facet is the empty complex `{∅}` (with no labels).
    pub fn link(&self, face: Face) -> Result<LabeledComplex, ComplexError> {
        if !self.is_face(face) {
            return Err(ComplexError::NotAFace(face));
        }
        let residues: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .map(|f| f.difference(face))
            .collect();
        Ok(relabel_onto_support(maximal_faces(residues)))
    }

    /// The restriction `Δ_W`, re-indexed onto the 1-bits of `w`.
    pub fn restriction(&self, w: Face) -> LabeledComplex {
        let residues: Vec<Face> = self.facets.iter().map(|f| f.intersection(w)).collect();
        relabel_onto_support(maximal_faces(residues))
    }

    /// Splits into connected components (facets sharing a vertex,
    /// transitively), each re-indexed onto its own vertices. Components are
    /// ordered by their smallest ambient vertex.
    pub fn connected_components(&self) -> Vec<LabeledComplex> {
        if self.is_empty_complex() {
            return Vec::new();
        }
        let mut comp_of = vec![usize::MAX; self.facets.len()];
        let mut comp_masks: Vec<u64> = Vec::new();
        for (i, facet) in self.facets.iter().enumerate() {
            let mut mask = facet.mask();
            let mut merged: Vec<usize> = Vec::new();
            for (c, m) in comp_masks.iter().enumerate() {
                if m & mask != 0 {
                    mask |= m;
                    merged.push(c);
                }
            }
            match merged.first() {
                None => {
                    comp_masks.push(mask);
                    comp_of[i] = comp_masks.len() - 1;
                }
                Some(&target) => {
                    comp_masks[target] = mask;
                    for &c in &merged[1..] {
                        comp_masks[c] = 0;
                        for slot in comp_of.iter_mut() {
                            if *slot == c {
                                *slot = target;
                            }
                        }
                    }
                    comp_of[i] = target;
                }
            }
        }
        let mut nonempty: Vec<usize> = (0..comp_masks.len())
            .filter(|&c| comp_masks[c] != 0)
            .collect();
        nonempty.sort_by_key(|&c| comp_masks[c].trailing_zeros());
        nonempty
            .into_iter()
            .map(|c| {
                let members: Vec<Face> = self
                    .facets
                    .iter()
                    .zip(&comp_of)
                    .filter(|(_, &k)| k == c)
                    .map(|(f, _)| *f)
                    .collect();
                relabel_onto_support(members)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// All inclusion-minimal subsets of the vertex set that are not faces,
    /// in increasing mask order. Each has cardinality at least 2.
    ///
    /// A subset is a non-face exactly when it meets the complement of every
    /// facet, so the minimal non-faces are the minimal transversals of the
    /// facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let full = self.vertex_set();
        let edges: Vec<Face> = self
            .facets
            .iter()
            .map(|f| f.complement(full.cardinality()))
            .collect();
        minimal_transversals(&edges)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={};", self.n_vertices)?;
        for facet in &self.facets {
            write!(f, " {facet}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.labels())
    }
}

/// Keeps the inclusion-maximal members, deduplicated, in increasing mask order.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    let kept: Vec<Face> = faces
        .iter()
        .filter(|f| !faces.iter().any(|g| *f != g && f.is_subset_of(*g)))
        .copied()
        .collect();
    kept
}

/// Keeps the inclusion-minimal members, deduplicated, in increasing mask order.
pub(crate) fn minimal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| *f != g && g.is_subset_of(**f)))
        .copied()
        .collect()
}

/// Minimal transversals (hitting sets) of the given family, by sequential
/// intersection with one edge at a time. An empty edge admits no transversal.
pub(crate) fn minimal_transversals(edges: &[Face]) -> Vec<Face> {
    let mut trans = vec![Face::EMPTY];
    for &edge in edges {
        if edge.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(trans.len());
        for &t in &trans {
            if !t.intersection(edge).is_empty() {
                next.push(t);
            } else {
                for v in edge.vertices() {
                    next.push(t.insert(v));
                }
            }
        }
        trans = minimal_faces(next);
    }
    trans
}

/// Re-indexes a facet antichain onto the union of its vertices.
fn relabel_onto_support(facets: Vec<Face>) -> LabeledComplex {
    let support = facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
    if support.is_empty() {
        return LabeledComplex {
            complex: SimplicialComplex::empty(),
            labels: Vec::new(),
        };
    }
    let labels: Vec<usize> = support.vertices().collect();
    let mut position = [0usize; MAX_VERTICES];
    for (new, &old) in labels.iter().enumerate() {
        position[old] = new;
    }
    let mut relabeled: Vec<Face> = facets
        .iter()
        .map(|f| Face::from_vertices(f.vertices().map(|v| position[v])))
        .collect();
    relabeled.sort_unstable();
    LabeledComplex {
        complex: SimplicialComplex {
            n_vertices: labels.len(),
            facets: relabeled,
        },
        labels,
    }
}

/// The boundary cycle on `n` vertices: facets `{i, i+1}` and `{n, 1}`.
pub fn gon(n: usize) -> SimplicialComplex {
    assert!(n >= 3);
    let mut facets: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
    facets.push(vec![n, 1]);
    SimplicialComplex::from_facets(n, &facets).unwrap()
}

/// The path on `n` vertices: facets `{i, i+1}`.
pub fn pointed_path(n: usize) -> SimplicialComplex {
    assert!(n >= 2);
    let facets: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
    SimplicialComplex::from_facets(n, &facets).unwrap()
}

/// The full simplex on `n` vertices.
pub fn simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, &[(1..=n).collect()]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn faces_of(c: &SimplicialComplex) -> Vec<Face> {
        c.faces()
    }

    #[test]
    fn from_facets_four_pointed_path() {
        let path =
            SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        assert_eq!(path.dim(), 1);
        assert_eq!(path.facets().len(), 3);
        assert_eq!(path, pointed_path(4));
    }

    #[test]
    fn from_facets_single_point() {
        let point = SimplicialComplex::from_facets(1, &[vec![1]]).unwrap();
        assert_eq!(point.dim(), 0);
        assert_eq!(point.facets(), &[Face::singleton(0)]);
    }

    #[test]
    fn from_facets_drops_dominated() {
        let c = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(c.facets(), &[Face::from_vertices([0, 1, 2])]);
    }

    #[test]
    fn from_facets_errors() {
        assert_eq!(
            SimplicialComplex::from_facets(2, &[]),
            Err(ComplexError::EmptyInput)
        );
        assert_eq!(
            SimplicialComplex::from_facets(3, &[vec![1, 2]]),
            Err(ComplexError::UncoveredVertex(3))
        );
        assert_eq!(
            SimplicialComplex::from_facets(2, &[vec![1, 5]]),
            Err(ComplexError::VertexOutOfRange {
                vertex: 5,
                n_vertices: 2
            })
        );
    }

    #[test]
    fn dims() {
        assert_eq!(gon(5).dim(), 1);
        assert_eq!(simplex(4).dim(), 3);
        let mixed = SimplicialComplex::from_facets(4, &[vec![1, 2, 3], vec![4]]).unwrap();
        assert_eq!(mixed.dim(), 2);
    }

    #[test]
    fn purity() {
        assert!(gon(6).is_pure());
        assert!(!SimplicialComplex::from_facets(3, &[vec![1, 2], vec![3]])
            .unwrap()
            .is_pure());
        // disjoint union of two 2-simplices
        let two = SimplicialComplex::from_facets(6, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(two.is_pure());
    }

    #[test]
    fn link_of_vertex_in_pentagon() {
        let link = gon(5).link(Face::singleton(0)).unwrap();
        // two isolated points, originally vertices 2 and 5
        assert_eq!(link.complex.dim(), 0);
        assert_eq!(link.complex.facets().len(), 2);
        assert_eq!(link.labels, vec![1, 4]);
    }

    #[test]
    fn link_of_empty_face_is_identity() {
        let c = gon(5);
        let link = c.link(Face::EMPTY).unwrap();
        assert_eq!(link.complex, c);
        assert_eq!(link.labels, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn link_of_facet_is_empty_complex() {
        let c = simplex(3);
        let link = c.link(Face::from_vertices([0, 1, 2])).unwrap();
        assert!(link.complex.is_empty_complex());
        let edge_link = c.link(Face::from_vertices([0, 1])).unwrap();
        assert_eq!(edge_link.complex.facets().len(), 1);
        assert_eq!(edge_link.labels, vec![2]);
    }

    #[test]
    fn link_rejects_nonface() {
        assert!(matches!(
            gon(5).link(Face::from_vertices([0, 2])),
            Err(ComplexError::NotAFace(_))
        ));
    }

    #[test]
    fn restriction_of_pentagon() {
        let r = gon(5).restriction(Face::from_vertices([0, 1, 2]));
        assert_eq!(r.complex, pointed_path(3));
        assert_eq!(r.labels, vec![0, 1, 2]);
        let full = gon(5).restriction(Face::full(5));
        assert_eq!(full.complex, gon(5));
        let empty = gon(5).restriction(Face::EMPTY);
        assert!(empty.complex.is_empty_complex());
    }

    #[test]
    fn connected_components_counts() {
        let two = SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(two.connected_components().len(), 2);
        assert_eq!(gon(5).connected_components().len(), 1);
        let points =
            SimplicialComplex::from_facets(4, &[vec![1], vec![2], vec![3], vec![4]]).unwrap();
        assert_eq!(points.connected_components().len(), 4);
        assert!(!points.is_connected());
    }

    #[test]
    fn component_labels_are_ambient() {
        let c = SimplicialComplex::from_facets(5, &[vec![2, 4], vec![1, 3, 5]]).unwrap();
        let comps = c.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].labels, vec![0, 2, 4]);
        assert_eq!(comps[1].labels, vec![1, 3]);
    }

    #[test]
    fn minimal_nonfaces_of_path_and_gon() {
        let path = pointed_path(4);
        assert_eq!(
            path.minimal_nonfaces(),
            vec![
                Face::from_vertices([0, 2]),
                Face::from_vertices([0, 3]),
                Face::from_vertices([1, 3]),
            ]
        );
        assert_eq!(gon(5).minimal_nonfaces().len(), 5);
        assert!(simplex(4).minimal_nonfaces().is_empty());
    }

    #[test]
    fn faces_enumeration() {
        // 5-gon: 1 empty + 5 vertices + 5 edges
        assert_eq!(faces_of(&gon(5)).len(), 11);
        assert_eq!(faces_of(&simplex(3)).len(), 8);
    }

    #[test]
    fn empty_complex_value() {
        let e = SimplicialComplex::empty();
        assert!(e.is_empty_complex());
        assert_eq!(e.dim(), -1);
        assert_eq!(e.faces(), vec![Face::EMPTY]);
        assert!(e.minimal_nonfaces().is_empty());
    }

    #[test]
    fn face_display_is_one_based() {
        assert_eq!(Face::from_vertices([0, 2]).to_string(), "{1,3}");
        assert_eq!(Face::EMPTY.to_string(), "{}");
    }
}
