//! Monomials as exponent vectors and monomial ideals as minimal generating
//! sets, with the Stanley-Reisner correspondence, powers, membership, and
//! complete-intersection detection.

use std::fmt;

use thiserror::Error;

use crate::complex::{maximal_faces, minimal_transversals, ComplexError, Face, SimplicialComplex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("generator {0} is not squarefree")]
    NotSquarefree(Monomial),
    #[error("generator {0} has degree 1")]
    DegreeOneGenerator(Monomial),
    #[error("the zero ideal has no generators")]
    ZeroIdeal,
    #[error("expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A monomial `x1^e1 * ... * xn^en`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// Squarefree monomial with the given support.
    pub fn squarefree(n_vars: usize, support: Face) -> Self {
        let mut exps = vec![0; n_vars];
        for v in support.vertices() {
            exps[v] = 1;
        }
        Monomial { exps }
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial {
            exps: vec![0; n_vars],
        }
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The set of variables with positive exponent.
    pub fn support(&self) -> Face {
        Face::from_vertices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, var: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[var] += 1;
        Monomial { exps }
    }

    /// Parses `x<k>` factors joined by `*`, each with an optional `^e`,
    /// e.g. `x1^2*x3`. Variables are 1-based; repeated variables accumulate.
    pub fn parse(s: &str, n_vars: usize) -> Result<Self, String> {
        let mut exps = vec![0u32; n_vars];
        for token in s.split('*') {
            let token = token.trim();
            let rest = token
                .strip_prefix('x')
                .or_else(|| token.strip_prefix('X'))
                .ok_or_else(|| format!("bad factor `{token}`: expected x<k> or x<k>^<e>"))?;
            let (var_str, exp_str) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let var: usize = var_str
                .parse()
                .map_err(|_| format!("bad variable index in `{token}`"))?;
            let exp: u32 = exp_str
                .parse()
                .map_err(|_| format!("bad exponent in `{token}`"))?;
            if var == 0 || var > n_vars {
                return Err(format!("variable x{var} out of range 1..={n_vars}"));
            }
            exps[var - 1] += exp;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial ideal given by its minimal monomial generators, kept sorted
/// lexicographically on exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from any monomial generating set; divisible and
    /// duplicate generators are dropped, so `gens()` is the minimal
    /// generating set. Constant generators are rejected by debug assertion.
    pub fn new(n_vars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.n_vars() == n_vars && !g.is_one()));
        MonomialIdeal {
            n_vars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(n_vars: usize) -> Self {
        MonomialIdeal {
            n_vars,
            gens: Vec::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Minimal generators, sorted lexicographically on exponent vectors.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Least generator degree.
    pub fn indeg(&self) -> Result<u64, IdealError> {
        self.gens
            .iter()
            .map(|g| g.degree())
            .min()
            .ok_or(IdealError::ZeroIdeal)
    }

    pub fn max_gen_degree(&self) -> Option<u64> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.n_vars(), self.n_vars);
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether `m` lies in `I : (x1, ..., xn)`, i.e. every `xi * m` is in
    /// the ideal. Combined with `!contains(m)` this exhibits a socle witness
    /// for depth 0.
    pub fn in_colon_by_max_ideal(&self, m: &Monomial) -> bool {
        (0..self.n_vars).all(|v| self.contains(&m.mul_var(v)))
    }

    /// Minimal generators of the `power`-th power, by iterated products with
    /// divisibility pruning after every step.
    pub fn power(&self, power: u32) -> MonomialIdeal {
        assert!(power >= 1);
        let mut gens = self.gens.clone();
        for _ in 1..power {
            let mut products = Vec::with_capacity(gens.len() * self.gens.len());
            for g in &gens {
                for h in &self.gens {
                    products.push(g.mul(h));
                }
            }
            gens = minimalize(products);
        }
        MonomialIdeal {
            n_vars: self.n_vars,
            gens,
        }
    }

    /// Detects whether a squarefree ideal is a complete intersection: the
    /// generator supports are pairwise disjoint. On success returns the
    /// variable blocks, sorted; the zero ideal is a complete intersection
    /// with no blocks.
    pub fn complete_intersection_blocks(&self) -> Result<Option<Vec<Face>>, IdealError> {
        if let Some(bad) = self.gens.iter().find(|g| !g.is_squarefree()) {
            return Err(IdealError::NotSquarefree(bad.clone()));
        }
        let mut seen = Face::EMPTY;
        let mut blocks = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let support = g.support();
            if !seen.intersection(support).is_empty() {
                return Ok(None);
            }
            seen = seen.union(support);
            blocks.push(support);
        }
        blocks.sort_unstable();
        Ok(Some(blocks))
    }

    pub fn is_complete_intersection(&self) -> Result<bool, IdealError> {
        Ok(self.complete_intersection_blocks()?.is_some())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Divisibility-minimal elements of a monomial set: the minimal generators
/// of the ideal the set generates, in descending lexicographic order on
/// exponent vectors (so x1*x3 comes before x2*x4).
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| b.cmp(a));
    gens.dedup();
    let kept: Vec<Monomial> = gens
        .iter()
        .filter(|m| !gens.iter().any(|g| *m != g && g.divides(m)))
        .cloned()
        .collect();
    kept
}

/// The Stanley-Reisner ideal of a complex: one squarefree generator per
/// minimal non-face. All generators have degree at least 2.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n_vertices();
    let gens = complex
        .minimal_nonfaces()
        .into_iter()
        .map(|f| Monomial::squarefree(n, f))
        .collect();
    MonomialIdeal::new(n, gens)
}

/// Inverse of [`stanley_reisner_ideal`]: the complex whose faces are the
/// subsets supporting no generator. Requires squarefree generators of
/// degree at least 2.
pub fn complex_from_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex, IdealError> {
    for g in ideal.gens() {
        if !g.is_squarefree() {
            return Err(IdealError::NotSquarefree(g.clone()));
        }
        if g.degree() < 2 {
            return Err(IdealError::DegreeOneGenerator(g.clone()));
        }
    }
    let n = ideal.n_vars();
    let supports: Vec<Face> = ideal.gens().iter().map(|g| g.support()).collect();
    // F is a face iff it misses some vertex of every generator support, i.e.
    // its complement is a transversal of the supports; so facets are the
    // complements of the minimal transversals.
    let facets: Vec<Face> = minimal_transversals(&supports)
        .into_iter()
        .map(|t| t.complement(n))
        .collect();
    Ok(SimplicialComplex::from_facet_masks(
        n,
        maximal_faces(facets),
    )?)
}
