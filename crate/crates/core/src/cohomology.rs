//! Graded local cohomology of powers of Stanley-Reisner ideals via degree
//! complexes.
//!
//! For a multidegree `a` the degree complex collects the faces `L \ G_a`
//! over faces `L` of the ambient complex that contain the negative support
//! `G_a` and admit, for every generator `m` of the power, a witness variable
//! `i` outside `L` with `exponent_i(m) > a_i`. Reduced homology of these
//! complexes, summed over canonical degrees, yields the graded pieces of the
//! local cohomology modules of `S/I^l`, hence depth and Cohen-Macaulayness.
//!
//! Homology ranks are computed exactly: fraction-free integer elimination in
//! characteristic zero, modular elimination over a prime field. The field is
//! always an explicit input since homology can depend on the characteristic.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::Serializer;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};
use crate::ideal::{stanley_reisner_ideal, MonomialIdeal};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Coefficient field for homology: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Parses `q` for the rationals or `p:<prime>` for a prime field.
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("p:")
            .ok_or_else(|| format!("bad field `{s}`: expected `q` or `p:<prime>`"))?
            .parse::<u64>()
            .map_err(|_| format!("bad prime in `{s}`"))?;
        if p >= 1 << 31 {
            return Err(format!("prime {p} too large (must be below 2^31)"));
        }
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(FieldSpec::PrimeField(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "p:{p}"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A multigraded degree `a` in Z^n, with its negative support `G_a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        DegreeVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `G_a`: the variables with negative coordinate.
    pub fn negative_support(&self) -> Face {
        Face::from_vertices(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &c)| c < 0)
                .map(|(i, _)| i),
        )
    }

    /// Canonical representative: every negative coordinate becomes -1.
    pub fn canonical(&self) -> DegreeVector {
        DegreeVector(self.0.iter().map(|&c| c.max(-1)).collect())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for DegreeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.0)
    }
}

/// A degree complex: an abstract complex on the vertices outside `G_a`,
/// kept in ambient (original) labels. The void complex (no faces at all)
/// and the empty complex `{∅}` are distinct values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComplex {
    ambient: Face,
    faces: BTreeSet<Face>,
}

impl DegreeComplex {
    pub fn ambient(&self) -> Face {
        self.ambient
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// `{∅}`: the empty face and nothing else.
    pub fn is_empty_complex(&self) -> bool {
        self.faces.len() == 1 && self.faces.contains(&Face::EMPTY)
    }

    /// Inclusion-maximal faces, in ambient labels.
    pub fn spanning_facets(&self) -> Vec<Face> {
        crate::complex::maximal_faces(self.faces.iter().copied().collect())
    }

    /// Union of all faces.
    pub fn vertex_support(&self) -> Face {
        self.faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// Number of connected components of the vertex support under
    /// face-sharing; 0 for the void and empty complexes.
    pub fn component_count(&self) -> usize {
        let mut masks: Vec<u64> = Vec::new();
        for face in &self.faces {
            if face.is_empty() {
                continue;
            }
            let mut mask = face.mask();
            masks.retain(|m| {
                if m & mask != 0 {
                    mask |= m;
                    false
                } else {
                    true
                }
            });
            masks.push(mask);
        }
        masks.len()
    }

    pub fn is_disconnected(&self) -> bool {
        self.component_count() >= 2
    }

    pub fn reduced_homology_dims(&self, field: &FieldSpec) -> HomologyDims {
        reduced_homology_dims(&self.faces, field)
    }
}

/// The degree complex of `a` relative to a complex and a generating set of
/// an ideal power. Returns the void complex when `G_a` is not a face or
/// when no face survives the witness condition.
pub fn degree_complex(
    complex: &SimplicialComplex,
    gens: &MonomialIdeal,
    a: &DegreeVector,
) -> Result<DegreeComplex, CohomologyError> {
    let n = complex.n_vertices();
    if a.len() != n {
        return Err(CohomologyError::DimensionMismatch {
            expected: n,
            found: a.len(),
        });
    }
    if gens.n_vars() != n {
        return Err(CohomologyError::DimensionMismatch {
            expected: n,
            found: gens.n_vars(),
        });
    }
    let support = a.negative_support();
    let ambient = support.complement(n);
    if !complex.is_face(support) {
        return Ok(DegreeComplex {
            ambient,
            faces: BTreeSet::new(),
        });
    }
    let candidates = complex.faces_containing(support);
    Ok(degree_complex_inner(gens, a, support, ambient, &candidates))
}

/// Core of the witness condition, with the candidate faces (the faces of
/// the ambient complex containing `G_a`) supplied by the caller.
fn degree_complex_inner(
    gens: &MonomialIdeal,
    a: &DegreeVector,
    support: Face,
    ambient: Face,
    candidates: &[Face],
) -> DegreeComplex {
    // For generator m, the witness set {i : exponent_i(m) > a_i}; a face L
    // qualifies iff no witness set is contained in L.
    let mut witness_masks = Vec::with_capacity(gens.num_gens());
    for m in gens.gens() {
        let w = Face::from_vertices(
            a.coords()
                .iter()
                .enumerate()
                .filter(|(i, &ai)| (m.exponent(*i) as i64) > ai)
                .map(|(i, _)| i),
        );
        if w.is_empty() {
            // no face can ever satisfy the condition for this generator
            return DegreeComplex {
                ambient,
                faces: BTreeSet::new(),
            };
        }
        witness_masks.push(w);
    }
    let faces: BTreeSet<Face> = candidates
        .iter()
        .filter(|l| witness_masks.iter().all(|w| !w.is_subset_of(**l)))
        .map(|l| l.difference(support))
        .collect();
    DegreeComplex { ambient, faces }
}

/// Reduced homology dimensions indexed from -1 up; `dims.dim(k)` is the
/// dimension of the k-th reduced homology over the chosen field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<usize>,
}

impl HomologyDims {
    pub fn dim(&self, k: i32) -> usize {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// Indices with nonzero homology, ascending.
    pub fn nonzero(&self) -> Vec<(i32, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| (i as i32 - 1, d))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Reduced homology of a downward-closed face set (with the empty face
/// counted in degree -1). The void complex has zero homology everywhere;
/// `{∅}` has one dimension in degree -1.
pub fn reduced_homology_dims(faces: &BTreeSet<Face>, field: &FieldSpec) -> HomologyDims {
    if faces.is_empty() {
        return HomologyDims { dims: Vec::new() };
    }
    let max_card = faces.iter().map(|f| f.cardinality()).max().unwrap();
    let mut levels: Vec<Vec<Face>> = vec![Vec::new(); max_card + 1];
    for &f in faces {
        levels[f.cardinality()].push(f);
    }
    // boundary ranks: boundary_rank[s] is the rank of the map from chains
    // of card s+1 to chains of card s, for s in 0..max_card
    let mut boundary_ranks = vec![0usize; max_card + 1];
    for s in 0..max_card {
        let rows = &levels[s];
        let cols = &levels[s + 1];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let row_index = |f: Face| rows.binary_search(&f).expect("face set is downward closed");
        let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, &sigma) in cols.iter().enumerate() {
            for (pos, v) in sigma.vertices().enumerate() {
                let tau = sigma.difference(Face::singleton(v));
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                matrix[row_index(tau)][j] = sign;
            }
        }
        boundary_ranks[s] = match field {
            FieldSpec::Rationals => rank_fraction_free(matrix),
            FieldSpec::PrimeField(p) => rank_mod_p(matrix, *p),
        };
    }
    let dims = (0..=max_card)
        .map(|s| {
            let incoming = if s < max_card { boundary_ranks[s] } else { 0 };
            let outgoing = if s > 0 { boundary_ranks[s - 1] } else { 0 };
            levels[s].len() - incoming - outgoing
        })
        .collect();
    HomologyDims { dims }
}

/// Reduced homology of a whole complex (all faces, including the empty one).
pub fn complex_homology_dims(complex: &SimplicialComplex, field: &FieldSpec) -> HomologyDims {
    let faces: BTreeSet<Face> = complex.faces().into_iter().collect();
    reduced_homology_dims(&faces, field)
}

/// Matrix rank over the rationals by fraction-free (Bareiss) elimination on
/// exact integers.
fn rank_fraction_free(matrix: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<BigInt>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        let pivot = pivot_row[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = std::mem::replace(&mut row[col], BigInt::zero());
            for j in col + 1..cols {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Matrix rank over GF(p) by modular Gaussian elimination.
fn rank_mod_p(matrix: Vec<Vec<i64>>, p: u64) -> usize {
    let pi = p as i64;
    let mut m: Vec<Vec<u64>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(|c| (c.rem_euclid(pi)) as u64).collect())
        .collect();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| m[r][col] % p != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_pow(m[rank][col], p - 2, p);
        let pivot_row: Vec<u64> = m[rank].iter().map(|&x| x % p).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col] % p;
            if factor == 0 {
                continue;
            }
            let scale = factor * inv % p;
            for j in col..cols {
                row[j] = (row[j] + (p - scale * pivot_row[j] % p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// One nonzero graded piece in a local cohomology module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    /// Canonical degree: -1 on the negative support, 0..l-1 elsewhere.
    pub degree: DegreeVector,
    /// Reduced homology index contributing here.
    pub homology_index: i32,
    /// Homology dimension over the chosen field.
    pub dim: usize,
}

/// The graded pieces found for one cohomological index `i < d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyModule {
    #[serde(rename = "i")]
    pub index: usize,
    /// Finite length: no contribution with nonempty negative support. Each
    /// canonical degree with negative coordinates stands for infinitely
    /// many actual degrees.
    pub finite: bool,
    /// Total dimension when the module has finite length.
    pub total_dim: Option<u64>,
    pub contributions: Vec<Contribution>,
}

impl CohomologyModule {
    pub fn is_zero(&self) -> bool {
        self.contributions.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub n_vertices: usize,
    /// Krull dimension d of the quotient.
    pub dim: usize,
    pub power: u32,
    pub field: FieldSpec,
    /// Modules for i = 0, ..., d-1. The top module H^d is never computed.
    pub modules: Vec<CohomologyModule>,
    /// Least i with nonzero cohomology, or d when all lower pieces vanish.
    pub depth: usize,
    pub is_cm: bool,
}

impl CohomologyReport {
    /// Finite-length data for i = 1..d-1, as `Some(dim)` or `None` when the
    /// module has infinite length; input shape for the multiplicity bound.
    pub fn middle_cohomology_dims(&self) -> Vec<Option<u64>> {
        self.modules
            .iter()
            .skip(1)
            .map(|m| if m.finite { m.total_dim } else { None })
            .collect()
    }
}

/// Computes the graded local cohomology of `S/I^power` for the
/// Stanley-Reisner ideal of the complex, over the given field, for all
/// cohomological indices below the Krull dimension.
///
/// Degrees are enumerated canonically per face F: coordinates -1 on F and
/// in `0..power` off F. A nonzero piece with F nonempty makes that module
/// infinite; when every contribution has F empty the total dimension is the
/// sum over the finitely many nonnegative degrees.
pub fn cohomology(complex: &SimplicialComplex, power: u32, field: &FieldSpec) -> CohomologyReport {
    assert!(power >= 1);
    let n = complex.n_vertices();
    let d = complex.krull_dim();
    let ideal = stanley_reisner_ideal(complex).power(power);
    let ell = power as i64;

    let mut modules: Vec<CohomologyModule> = (0..d)
        .map(|index| CohomologyModule {
            index,
            finite: true,
            total_dim: Some(0),
            contributions: Vec::new(),
        })
        .collect();

    for face in complex.faces() {
        let candidates = complex.faces_containing(face);
        let off: Vec<usize> = face.complement(n).vertices().collect();
        let ambient = face.complement(n);
        let mut counter = vec![0i64; off.len()];
        loop {
            let mut coords = vec![-1i64; n];
            for (pos, &v) in off.iter().enumerate() {
                coords[v] = counter[pos];
            }
            let a = DegreeVector::new(coords);
            let dc = degree_complex_inner(&ideal, &a, face, ambient, &candidates);
            if !dc.is_void() {
                let h = dc.reduced_homology_dims(field);
                for (k, hdim) in h.nonzero() {
                    let i = k + face.cardinality() as i32 + 1;
                    if i >= 0 && (i as usize) < d {
                        modules[i as usize].contributions.push(Contribution {
                            degree: a.clone(),
                            homology_index: k,
                            dim: hdim,
                        });
                    }
                }
            }
            // increment the mixed-radix counter over the off-face coordinates
            let mut pos = off.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                counter[pos] += 1;
                if counter[pos] < ell {
                    break;
                }
                counter[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if off.is_empty() || pos == usize::MAX {
                break;
            }
        }
    }

    for module in &mut modules {
        module.contributions.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then(a.homology_index.cmp(&b.homology_index))
        });
        module.finite = module
            .contributions
            .iter()
            .all(|c| c.degree.negative_support().is_empty());
        module.total_dim = if module.finite {
            Some(module.contributions.iter().map(|c| c.dim as u64).sum())
        } else {
            None
        };
    }

    let depth = modules.iter().position(|m| !m.is_zero()).unwrap_or(d);
    CohomologyReport {
        n_vertices: n,
        dim: d,
        power,
        field: *field,
        modules,
        depth,
        is_cm: depth == d,
    }
}

/// Depth of `S/I^power`: the least index with nonzero local cohomology,
/// equal to the Krull dimension when all lower pieces vanish.
pub fn depth(complex: &SimplicialComplex, power: u32, field: &FieldSpec) -> usize {
    cohomology(complex, power, field).depth
}

/// The degree sets feeding the H^1 piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1DegreeSets {
    /// Nonnegative degrees (all coordinates in `0..power`) whose degree
    /// complex is disconnected.
    pub disconnected: Vec<DegreeVector>,
    /// Per vertex i, canonical degrees with `a_i = -1` and the others in
    /// `0..power` whose degree complex is `{∅}`. Any nonempty entry makes
    /// H^1 infinite.
    pub empty_complex_classes: Vec<Vec<DegreeVector>>,
}

/// Enumerates the degree sets relevant to H^1: disconnected degree
/// complexes at nonnegative degrees, and `{∅}` degree complexes at the
/// canonical per-vertex negative classes. Both tests are combinatorial and
/// independent of the field.
pub fn a_sets_for_h1(complex: &SimplicialComplex, power: u32) -> H1DegreeSets {
    assert!(power >= 1);
    let n = complex.n_vertices();
    let ideal = stanley_reisner_ideal(complex).power(power);
    let ell = power as i64;

    let mut disconnected = Vec::new();
    for_each_box_degree(n, ell, &mut |coords| {
        let a = DegreeVector::new(coords.to_vec());
        let dc = degree_complex(complex, &ideal, &a).expect("matching dimensions");
        if dc.is_disconnected() {
            disconnected.push(a);
        }
    });

    let empty_complex_classes = (0..n)
        .map(|v| {
            let mut hits = Vec::new();
            for_each_box_degree(n - 1, ell, &mut |rest| {
                let mut coords = Vec::with_capacity(n);
                coords.extend_from_slice(&rest[..v]);
                coords.push(-1);
                coords.extend_from_slice(&rest[v..]);
                let a = DegreeVector::new(coords);
                let dc = degree_complex(complex, &ideal, &a).expect("matching dimensions");
                if dc.is_empty_complex() {
                    hits.push(a);
                }
            });
            hits
        })
        .collect();

    H1DegreeSets {
        disconnected,
        empty_complex_classes,
    }
}

/// Calls `f` on every vector in `{0, ..., bound-1}^len`, in lexicographic
/// order.
fn for_each_box_degree(len: usize, bound: i64, f: &mut impl FnMut(&[i64])) {
    let mut coords = vec![0i64; len];
    loop {
        f(&coords);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            coords[pos] += 1;
            if coords[pos] < bound {
                break;
            }
            coords[pos] = 0;
            if pos == 0 {
                return;
            }
        }
    }
}
