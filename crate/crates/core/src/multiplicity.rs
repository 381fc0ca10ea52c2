//! Multiplicity and codimension bookkeeping for Stanley-Reisner quotients,
//! the exact multiplicity of ideal powers, the lower bound on multiplicities
//! of Buchsbaum algebras, and the derived screening of powers.
//!
//! Every bound is computed with big-integer binomials and exact rationals;
//! verdicts never touch floating point.

use num_bigint::{BigInt, BigUint};

use crate::Natural;
use num_integer::binomial;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::classify::{is_ci_complex, is_locally_ci};
use crate::complex::SimplicialComplex;
use crate::ideal::stanley_reisner_ideal;
use crate::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultiplicityError {
    #[error("the Stanley-Reisner ideal is not a complete intersection")]
    NotCompleteIntersection,
    #[error("codimension {0} is below 2, the screening bound does not apply")]
    CodimensionTooSmall(usize),
    #[error("cohomology in index {0} has infinite length, the bound does not apply")]
    InfiniteCohomology(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
}

/// The numeric invariants of a Stanley-Reisner quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealNumerics {
    pub n_vars: usize,
    /// Krull dimension d = dim Δ + 1.
    pub krull_dim: usize,
    /// Codimension c = n - d.
    pub codim: usize,
    /// Least generator degree; `None` for the zero ideal (full simplex).
    pub indeg: Option<u64>,
    /// Multiplicity e: the number of facets of maximal dimension.
    pub multiplicity: u64,
}

/// Computes n, d, c, indeg, and the multiplicity of a complex. Only facets
/// of maximal dimension count toward the multiplicity, also for non-pure
/// complexes.
pub fn numerics(complex: &SimplicialComplex) -> IdealNumerics {
    let n_vars = complex.n_vertices();
    let krull_dim = complex.krull_dim();
    let top = complex.dim();
    let multiplicity = complex.facets().iter().filter(|f| f.dim() == top).count() as u64;
    IdealNumerics {
        n_vars,
        krull_dim,
        codim: n_vars - krull_dim,
        indeg: stanley_reisner_ideal(complex).indeg().ok(),
        multiplicity,
    }
}

/// The multiplicity of the l-th power of the ideal:
/// `e * binom(c + l - 1, c)`, exactly.
pub fn power_multiplicity(e: u64, c: usize, power: u32) -> Natural {
    assert!(e >= 1 && power >= 1);
    let l = power as u64;
    BigUint::from(e) * binomial(BigUint::from(c as u64 + l - 1), BigUint::from(c as u64))
}

/// Lower bound on the multiplicity of a Buchsbaum quotient with codimension
/// `c >= 2`, initial degree `q >= 2`, and Krull dimension `d >= 1`:
/// `binom(c+q-2, c) + sum_{i=1}^{d-1} binom(d-1, i-1) * dim H^i`.
///
/// `cohomology_dims[i-1]` is the total dimension of the i-th local
/// cohomology module, or `None` when that module has infinite length, in
/// which case the quotient is not Buchsbaum and the bound does not apply.
pub fn gy_lower_bound(
    c: usize,
    q: u64,
    d: usize,
    cohomology_dims: &[Option<u64>],
) -> Result<Natural, MultiplicityError> {
    assert!(
        c >= 2 && q >= 2 && d >= 1,
        "bound requires c >= 2, q >= 2, d >= 1"
    );
    assert_eq!(cohomology_dims.len(), d - 1, "need dims for i = 1..d-1");
    let mut total = binomial(BigUint::from(c as u64 + q - 2), BigUint::from(c as u64));
    for (idx, entry) in cohomology_dims.iter().enumerate() {
        let i = idx + 1;
        let dim = entry.ok_or(MultiplicityError::InfiniteCohomology(i))?;
        total +=
            binomial(BigUint::from(d as u64 - 1), BigUint::from(i as u64 - 1)) * BigUint::from(dim);
    }
    Ok(total)
}

/// The exact rational lower bound on the multiplicity of the quotient that
/// Buchsbaumness of the l-th power forces:
/// `binom(c + q*l - 2, c) / binom(c + l - 1, c)`.
pub fn buchsbaum_power_bound(c: usize, q: u64, power: u32) -> Rational {
    assert!(c >= 2 && q >= 2 && power >= 1);
    let l = power as u64;
    let numer = binomial(BigUint::from(c as u64 + q * l - 2), BigUint::from(c as u64));
    let denom = binomial(BigUint::from(c as u64 + l - 1), BigUint::from(c as u64));
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScreenVerdict {
    /// The multiplicity is strictly below the bound, so the power cannot be
    /// Buchsbaum.
    RuledOut,
    /// The bound is necessary, never sufficient: nothing follows.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenRow {
    pub power: u32,
    pub bound: Rational,
    pub verdict: ScreenVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreeningReport {
    pub numerics: IdealNumerics,
    pub rows: Vec<ScreenRow>,
}

/// Screens the powers `1..=max_power`: a power is ruled out as Buchsbaum
/// when the multiplicity falls strictly below the exact rational bound;
/// ties are inconclusive. Requires codimension at least 2.
pub fn screen_buchsbaum_powers(
    complex: &SimplicialComplex,
    max_power: u32,
) -> Result<ScreeningReport, MultiplicityError> {
    assert!(max_power >= 1);
    let nums = numerics(complex);
    if nums.codim < 2 {
        return Err(MultiplicityError::CodimensionTooSmall(nums.codim));
    }
    let q = nums
        .indeg
        .expect("positive codimension implies a nonzero ideal");
    let e = Rational::from(BigInt::from(nums.multiplicity));
    let rows = (1..=max_power)
        .map(|power| {
            let bound = buchsbaum_power_bound(nums.codim, q, power);
            let verdict = if e < bound {
                ScreenVerdict::RuledOut
            } else {
                ScreenVerdict::Inconclusive
            };
            ScreenRow {
                power,
                bound,
                verdict,
            }
        })
        .collect();
    Ok(ScreeningReport {
        numerics: nums,
        rows,
    })
}

/// Multiplicity data of a complete intersection complex: the block degrees
/// h_i of the generators, their product (which is the multiplicity), and
/// the bound `2^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiMultiplicityCheck {
    pub multiplicity: u64,
    pub block_degrees: Vec<u64>,
    pub product: u64,
    pub bound: Natural,
    /// Whether `e <= 2^d` holds.
    pub holds: bool,
}

/// Verifies the multiplicity bound `e <= 2^d` on a complete intersection
/// complex and exposes the exact block-degree product.
pub fn ci_multiplicity_check(
    complex: &SimplicialComplex,
) -> Result<CiMultiplicityCheck, MultiplicityError> {
    let blocks = stanley_reisner_ideal(complex)
        .complete_intersection_blocks()
        .expect("Stanley-Reisner ideals are squarefree")
        .ok_or(MultiplicityError::NotCompleteIntersection)?;
    let nums = numerics(complex);
    let block_degrees: Vec<u64> = blocks.iter().map(|b| b.cardinality() as u64).collect();
    let product = block_degrees.iter().product();
    let bound = BigUint::from(1u32) << nums.krull_dim;
    Ok(CiMultiplicityCheck {
        multiplicity: nums.multiplicity,
        block_degrees,
        product,
        holds: BigUint::from(nums.multiplicity) <= bound,
        bound,
    })
}

/// The strict bound `e < 2^c` for pure locally complete intersection
/// complexes that are not complete intersections.
pub fn lci_strict_bound_holds(complex: &SimplicialComplex) -> Result<bool, MultiplicityError> {
    if !complex.is_pure() {
        return Err(MultiplicityError::PreconditionFailed(
            "complex must be pure",
        ));
    }
    if !is_locally_ci(complex) {
        return Err(MultiplicityError::PreconditionFailed(
            "complex must be locally complete intersection",
        ));
    }
    if is_ci_complex(complex) {
        return Err(MultiplicityError::PreconditionFailed(
            "complex must not be a complete intersection",
        ));
    }
    let nums = numerics(complex);
    Ok(BigUint::from(nums.multiplicity) < BigUint::from(1u32) << nums.codim)
}

impl Serialize for ScreenRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("power", &self.power)?;
        map.serialize_entry("bound", &self.bound.to_string())?;
        map.serialize_entry(
            "verdict",
            match self.verdict {
                ScreenVerdict::RuledOut => "ruled_out",
                ScreenVerdict::Inconclusive => "inconclusive",
            },
        )?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{gon, pointed_path, simplex, SimplicialComplex};
    use crate::ideal::{complex_from_ideal, Monomial, MonomialIdeal};

    #[test]
    fn numerics_of_pentagon_and_path() {
        let g = numerics(&gon(5));
        assert_eq!(
            g,
            IdealNumerics {
                n_vars: 5,
                krull_dim: 2,
                codim: 3,
                indeg: Some(2),
                multiplicity: 5,
            }
        );
        let p = numerics(&pointed_path(4));
        assert_eq!(p.krull_dim, 2);
        assert_eq!(p.codim, 2);
        assert_eq!(p.indeg, Some(2));
        assert_eq!(p.multiplicity, 3);
        let s = numerics(&simplex(4));
        assert_eq!(s.codim, 0);
        assert_eq!(s.multiplicity, 1);
        assert_eq!(s.indeg, None);
    }

    #[test]
    fn numerics_counts_only_top_facets() {
        let mixed = SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(numerics(&mixed).multiplicity, 1);
    }

    #[test]
    fn power_multiplicity_values() {
        assert_eq!(power_multiplicity(5, 3, 2), BigUint::from(20u32));
        assert_eq!(power_multiplicity(7, 4, 1), BigUint::from(7u32));
        assert_eq!(power_multiplicity(3, 2, 3), BigUint::from(18u32));
    }

    #[test]
    fn gy_bound_values() {
        // Cohen-Macaulay case: only the binomial term
        assert_eq!(
            gy_lower_bound(3, 2, 2, &[Some(0)]).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(gy_lower_bound(3, 2, 1, &[]).unwrap(), BigUint::from(1u32));
        assert_eq!(
            gy_lower_bound(3, 2, 2, &[None]).unwrap_err(),
            MultiplicityError::InfiniteCohomology(1)
        );
        assert_eq!(
            gy_lower_bound(2, 2, 2, &[Some(1)]).unwrap(),
            BigUint::from(2u32)
        );
        // path square: c=2, q=4, d=2, one finite dimension 1
        assert_eq!(
            gy_lower_bound(2, 4, 2, &[Some(1)]).unwrap(),
            BigUint::from(7u32)
        );
        assert!(matches!(
            gy_lower_bound(2, 2, 3, &[Some(0), None]),
            Err(MultiplicityError::InfiniteCohomology(2))
        ));
    }

    #[test]
    fn buchsbaum_bound_values() {
        let f6 = buchsbaum_power_bound(3, 2, 6);
        assert_eq!(f6, Rational::new(BigInt::from(143), BigInt::from(28)));
        assert!(f6 > Rational::from(BigInt::from(5)));
        // l = 1 reduces to the leading binomial
        assert_eq!(
            buchsbaum_power_bound(4, 3, 1),
            Rational::from(BigInt::from(binomial(5u64, 4u64)))
        );
    }

    #[test]
    fn buchsbaum_bound_tends_to_q_to_the_c() {
        // f(100) for c=3, q=2 lies within 5% of 2^3
        let f = buchsbaum_power_bound(3, 2, 100);
        let target = Rational::from(BigInt::from(8));
        let ratio = &f / &target;
        assert!(ratio > Rational::new(BigInt::from(95), BigInt::from(100)));
        assert!(ratio < Rational::from(BigInt::from(1)));
    }

    #[test]
    fn screening_the_pentagon() {
        let report = screen_buchsbaum_powers(&gon(5), 10).unwrap();
        assert_eq!(report.numerics.multiplicity, 5);
        for row in &report.rows {
            let expected = if row.power >= 6 {
                ScreenVerdict::RuledOut
            } else {
                ScreenVerdict::Inconclusive
            };
            assert_eq!(row.verdict, expected, "power {}", row.power);
        }
    }

    #[test]
    fn screening_requires_codimension_two() {
        assert!(matches!(
            screen_buchsbaum_powers(&simplex(3), 5),
            Err(MultiplicityError::CodimensionTooSmall(0))
        ));
        // single edge on two vertices: codim 0
        let edge = SimplicialComplex::from_facets(2, &[vec![1, 2]]).unwrap();
        assert!(screen_buchsbaum_powers(&edge, 3).is_err());
    }

    #[test]
    fn screening_ci_is_inconclusive() {
        // blocks of sizes (2,2,2): the octahedron-like complete intersection
        let gens = vec![
            Monomial::new(vec![1, 1, 0, 0, 0, 0]),
            Monomial::new(vec![0, 0, 1, 1, 0, 0]),
            Monomial::new(vec![0, 0, 0, 0, 1, 1]),
        ];
        let ci = complex_from_ideal(&MonomialIdeal::new(6, gens)).unwrap();
        let report = screen_buchsbaum_powers(&ci, 30).unwrap();
        assert!(report
            .rows
            .iter()
            .all(|r| r.verdict == ScreenVerdict::Inconclusive));
    }

    #[test]
    fn ci_multiplicity_check_on_two_blocks() {
        let gens = vec![
            Monomial::new(vec![1, 1, 0, 0, 0]),
            Monomial::new(vec![0, 0, 1, 1, 1]),
        ];
        let ci = complex_from_ideal(&MonomialIdeal::new(5, gens)).unwrap();
        let check = ci_multiplicity_check(&ci).unwrap();
        assert_eq!(check.block_degrees, vec![2, 3]);
        assert_eq!(check.product, 6);
        assert_eq!(check.multiplicity, 6);
        assert_eq!(check.bound, BigUint::from(8u32)); // d = 3
        assert!(check.holds);

        assert!(matches!(
            ci_multiplicity_check(&gon(5)),
            Err(MultiplicityError::NotCompleteIntersection)
        ));
    }

    #[test]
    fn ci_multiplicity_check_trivial_cases() {
        let check = ci_multiplicity_check(&simplex(4)).unwrap();
        assert_eq!(check.multiplicity, 1);
        assert!(check.block_degrees.is_empty());
        assert_eq!(check.product, 1);
        assert!(check.holds);

        let single =
            complex_from_ideal(&MonomialIdeal::new(3, vec![Monomial::new(vec![1, 1, 0])])).unwrap();
        let check = ci_multiplicity_check(&single).unwrap();
        assert_eq!(check.multiplicity, 2);
        assert!(check.holds);
    }

    #[test]
    fn strict_bound_for_lci_non_ci() {
        assert!(lci_strict_bound_holds(&gon(5)).unwrap()); // 5 < 8
        assert!(lci_strict_bound_holds(&pointed_path(4)).unwrap()); // 3 < 4
        let two_triangles =
            SimplicialComplex::from_facets(6, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(lci_strict_bound_holds(&two_triangles).unwrap()); // 2 < 8

        assert!(matches!(
            lci_strict_bound_holds(&gon(4)),
            Err(MultiplicityError::PreconditionFailed(_))
        ));
    }
}
