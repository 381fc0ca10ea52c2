//! Decision procedures on simplicial complexes: complete intersection,
//! locally complete intersection, gon/path recognition for one-dimensional
//! complexes, Serre's condition S2, and the full per-component structure
//! classification with Cohen-Macaulay and Buchsbaum verdicts.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::ideal::stanley_reisner_ideal;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("expected a complex of dimension {expected}, got {found}")]
    WrongDimension { expected: i32, found: i32 },
    #[error("the complex is not connected")]
    NotConnected,
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
}

/// Label of one connected component in the structure classification.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    /// Complete intersection component of dimension >= 2.
    CiDimGe2,
    /// Boundary cycle on m vertices, m >= 3.
    MGon(usize),
    /// Path on m vertices, m >= 2.
    PointedPath(usize),
    /// Isolated vertex.
    Point,
    /// Not locally complete intersection.
    NotLci,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabel {
    pub kind: ComponentKind,
    /// 1-based vertex labels of the component, ascending.
    pub vertices: Vec<usize>,
}

/// Three-valued verdict: the criterion behind it only applies to locally
/// complete intersection complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    UnknownByThisCriterion,
}

impl Verdict {
    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub components: Vec<ComponentLabel>,
    #[serde(rename = "connected")]
    pub is_connected: bool,
    #[serde(rename = "pure")]
    pub is_pure: bool,
    pub dim: i32,
    #[serde(rename = "ci")]
    pub is_ci: bool,
    #[serde(rename = "lci")]
    pub is_lci: bool,
    /// 1-based vertex whose link fails to be a complete intersection, when
    /// the complex is not locally complete intersection.
    #[serde(rename = "witness_vertex", skip_serializing_if = "Option::is_none")]
    pub lci_witness: Option<usize>,
    #[serde(rename = "gci")]
    pub is_gci: bool,
    #[serde(rename = "s2")]
    pub is_s2: bool,
    pub cm: Verdict,
    pub buchsbaum: Verdict,
}

/// Whether the Stanley-Reisner ideal is a complete intersection.
pub fn is_ci_complex(complex: &SimplicialComplex) -> bool {
    stanley_reisner_ideal(complex)
        .is_complete_intersection()
        .expect("Stanley-Reisner ideals are squarefree")
}

/// First vertex (0-based) whose link ideal fails to be a complete
/// intersection, or `None` when the complex is locally complete
/// intersection.
pub fn locally_ci_witness(complex: &SimplicialComplex) -> Option<usize> {
    (0..complex.n_vertices()).find(|&v| {
        let link = complex
            .link(crate::complex::Face::singleton(v))
            .expect("vertices are faces");
        !is_ci_complex_or_empty(&link.complex)
    })
}

pub fn is_locally_ci(complex: &SimplicialComplex) -> bool {
    locally_ci_witness(complex).is_none()
}

fn is_ci_complex_or_empty(complex: &SimplicialComplex) -> bool {
    // the link of a facet is {∅}, whose ideal is the zero ideal
    complex.is_empty_complex() || is_ci_complex(complex)
}

/// Recognizes a connected one-dimensional complex as a gon, a pointed path,
/// or neither, by facet degrees: a gon has every vertex in exactly two
/// edges, a path has exactly two endpoint vertices in one edge each.
pub fn recognize_gon_or_path(complex: &SimplicialComplex) -> Result<ComponentKind, ClassifyError> {
    if complex.dim() != 1 {
        return Err(ClassifyError::WrongDimension {
            expected: 1,
            found: complex.dim(),
        });
    }
    if !complex.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    let n = complex.n_vertices();
    let mut degree = vec![0usize; n];
    for facet in complex.facets() {
        for v in facet.vertices() {
            degree[v] += 1;
        }
    }
    let ones = degree.iter().filter(|&&d| d == 1).count();
    let twos = degree.iter().filter(|&&d| d == 2).count();
    if twos == n {
        // connected and 2-regular: a single cycle
        Ok(ComponentKind::MGon(n))
    } else if ones == 2 && ones + twos == n {
        Ok(ComponentKind::PointedPath(n))
    } else {
        Ok(ComponentKind::NotLci)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dim1Class {
    Gon,
    Path,
    NotLci,
}

/// Three-way classification of a connected one-dimensional complex.
pub fn dim1_connected_lci_classification(
    complex: &SimplicialComplex,
) -> Result<Dim1Class, ClassifyError> {
    Ok(match recognize_gon_or_path(complex)? {
        ComponentKind::MGon(_) => Dim1Class::Gon,
        ComponentKind::PointedPath(_) => Dim1Class::Path,
        _ => Dim1Class::NotLci,
    })
}

/// Locally Gorenstein test in the one-dimensional connected case: every
/// vertex link consists of at most two points.
pub fn is_locally_gorenstein_dim1(complex: &SimplicialComplex) -> Result<bool, ClassifyError> {
    if complex.dim() != 1 {
        return Err(ClassifyError::WrongDimension {
            expected: 1,
            found: complex.dim(),
        });
    }
    if !complex.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    Ok((0..complex.n_vertices()).all(|v| {
        let link = complex
            .link(crate::complex::Face::singleton(v))
            .expect("vertices are faces");
        link.complex.dim() <= 0 && link.complex.facets().len() <= 2
    }))
}

/// Serre's condition S2, combinatorially: the complex is pure and the link
/// of every face of link-dimension at least 1 is connected.
pub fn is_s2(complex: &SimplicialComplex) -> bool {
    if !complex.is_pure() {
        return false;
    }
    complex.faces().into_iter().all(|face| {
        let link = complex.link(face).expect("enumerated faces");
        link.complex.dim() < 1 || link.complex.is_connected()
    })
}

/// The codimension-2 link condition: every face whose link has dimension
/// exactly 1 has a complete intersection link. Requires `dim >= 2` and S2.
pub fn cor18_condition(complex: &SimplicialComplex) -> Result<bool, ClassifyError> {
    if complex.dim() < 2 {
        return Err(ClassifyError::PreconditionFailed(
            "dimension must be at least 2",
        ));
    }
    if !is_s2(complex) {
        return Err(ClassifyError::PreconditionFailed("complex must satisfy S2"));
    }
    Ok(complex.faces().into_iter().all(|face| {
        let link = complex.link(face).expect("enumerated faces");
        link.complex.dim() != 1 || is_ci_complex(&link.complex)
    }))
}

/// Classifies each connected component as a complete intersection of
/// dimension >= 2, a gon, a pointed path, a point, or not locally complete
/// intersection, and derives the global flags. The Cohen-Macaulay and
/// Buchsbaum verdicts apply only to locally complete intersection
/// complexes: Cohen-Macaulay iff the complex has dimension 0 or is
/// connected, Buchsbaum iff it has dimension 0 or is pure.
pub fn classify(complex: &SimplicialComplex) -> ClassificationReport {
    let components: Vec<ComponentLabel> = complex
        .connected_components()
        .into_iter()
        .map(|comp| {
            let c = &comp.complex;
            let kind = match c.dim() {
                0 => ComponentKind::Point,
                1 => recognize_gon_or_path(c).expect("component is connected of dim 1"),
                _ => {
                    if is_ci_complex(c) {
                        ComponentKind::CiDimGe2
                    } else {
                        ComponentKind::NotLci
                    }
                }
            };
            ComponentLabel {
                kind,
                vertices: comp.labels.iter().map(|v| v + 1).collect(),
            }
        })
        .collect();

    let is_lci = components.iter().all(|c| c.kind != ComponentKind::NotLci);
    let lci_witness = locally_ci_witness(complex).map(|v| v + 1);
    debug_assert_eq!(is_lci, lci_witness.is_none());

    let is_connected = components.len() <= 1;
    let is_pure = complex.is_pure();
    let dim = complex.dim();
    let (cm, buchsbaum) = if is_lci {
        (
            Verdict::from_bool(dim == 0 || is_connected),
            Verdict::from_bool(dim == 0 || is_pure),
        )
    } else {
        (
            Verdict::UnknownByThisCriterion,
            Verdict::UnknownByThisCriterion,
        )
    };

    ClassificationReport {
        components,
        is_connected,
        is_pure,
        dim,
        is_ci: is_ci_complex(complex),
        is_lci,
        lci_witness,
        is_gci: is_lci && is_pure,
        is_s2: is_s2(complex),
        cm,
        buchsbaum,
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Yes => serializer.serialize_bool(true),
            Verdict::No => serializer.serialize_bool(false),
            Verdict::UnknownByThisCriterion => {
                serializer.serialize_str("unknown_by_this_criterion")
            }
        }
    }
}

impl Serialize for ComponentLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        let kind = match self.kind {
            ComponentKind::CiDimGe2 => "ci_dim_ge_2",
            ComponentKind::MGon(_) => "gon",
            ComponentKind::PointedPath(_) => "pointed_path",
            ComponentKind::Point => "point",
            ComponentKind::NotLci => "not_lci",
        };
        map.serialize_entry("kind", kind)?;
        match self.kind {
            ComponentKind::MGon(m) | ComponentKind::PointedPath(m) => {
                map.serialize_entry("m", &m)?;
            }
            _ => {}
        }
        map.serialize_entry("vertices", &self.vertices)?;
        map.end()
    }
}
