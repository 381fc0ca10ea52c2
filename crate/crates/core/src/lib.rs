//! Computational tools for Stanley-Reisner ideals of simplicial complexes:
//! complete-intersection and locally-complete-intersection detection, the
//! structure classification of locally complete intersection complexes,
//! multiplicities of ideal powers with Buchsbaum screening bounds, and graded
//! local cohomology of powers via degree complexes.
//!
//! All arithmetic that feeds a verdict is exact: big-integer binomials,
//! exact rationals for screening bounds, and fraction-free or modular
//! elimination for homology ranks. Faces are machine-word bitmasks, so the
//! vertex count is capped at 64.

pub mod classify;
pub mod cohomology;
pub mod complex;
pub mod enumerate;
pub mod ideal;
pub mod multiplicity;

pub use complex::{Face, LabeledComplex, SimplicialComplex};
pub use ideal::{complex_from_ideal, stanley_reisner_ideal, Monomial, MonomialIdeal};

/// Exact rational scalar used for screening bounds.
pub type Rational = num_rational::BigRational;
/// Exact integer scalar used for multiplicities and binomials.
pub type Integer = num_bigint::BigInt;
/// Exact nonnegative integer scalar.
pub type Natural = num_bigint::BigUint;
