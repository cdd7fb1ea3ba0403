//! Invariants of a quasi-homogeneous isolated hypersurface singularity, read
//! off the graded Jacobi ring `J = R / (∂f/∂x_1, …, ∂f/∂x_n)`.
//!
//! Everything here is a bucket count over the Hilbert function of `J`
//! together with the weights `m_i` and the degree `d = |f|`:
//!
//! * the length of `D f^λ / D f^{λ+1}` is `dim J_k` with `k = −dλ − Σ m_i`
//!   for `λ ≠ −1`, and `1 + g` at `λ = −1`;
//! * the reduced genus `g` is the number of monomials of degree `d − Σ m_i`;
//! * `h = dim H^{n−2}(X°, C)` is the eigenvalue-1 part of the Milnor
//!   cohomology, the sum of `dim J_k` over `k ≡ −Σ m_i (mod d)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::grading::{Grading, GradingError};
use crate::groebner::{
    buchberger, standard_monomials, GroebnerBasis, GroebnerError, GroebnerOptions, MonomialOrder,
    StandardMonomialBasis, StandardMonomials,
};
use crate::poly::{fmt_rational, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("smooth at origin: the gradient of f does not vanish at 0")]
    Smooth,
    #[error("non-isolated singularity: Jacobian ideal not zero-dimensional")]
    NonIsolated,
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("grading has {grading} variables but f has {poly}")]
    NvarsMismatch { grading: usize, poly: usize },
    #[error("at least 3 variables are required, got {0}")]
    TooFewVariables(usize),
    #[error("internal inconsistency: h = {h} is smaller than the genus g = {g}")]
    Inconsistent { h: u64, g: u64 },
}

/// Standard-monomial basis of the Jacobi ring with its Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuotientBasis {
    basis: StandardMonomialBasis,
    groebner: GroebnerBasis,
    hilbert: BTreeMap<u64, u64>,
    mu: u64,
}

impl GradedQuotientBasis {
    pub fn basis(&self) -> &StandardMonomialBasis {
        &self.basis
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.groebner
    }

    /// Weighted degree `k` to `dim J_k`, nonzero entries only.
    pub fn hilbert(&self) -> &BTreeMap<u64, u64> {
        &self.hilbert
    }

    /// `dim J_k`, zero outside the support.
    pub fn dim(&self, k: u64) -> u64 {
        self.hilbert.get(&k).copied().unwrap_or(0)
    }

    /// Milnor number `μ = dim J`.
    pub fn mu(&self) -> u64 {
        self.mu
    }

    /// Largest degree with `dim J_k > 0`.
    pub fn top_degree(&self) -> u64 {
        self.hilbert.keys().next_back().copied().unwrap_or(0)
    }
}

/// Jacobian ideal generators `∂f/∂x_i`.
pub fn jacobian(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars())
        .map(|i| f.partial_derivative(i).expect("index in range"))
        .collect()
}

/// Computes the graded Jacobi ring of `f` under `grading`.
pub fn jacobi_ring(
    f: &Polynomial,
    grading: &Grading,
    options: &GroebnerOptions,
) -> Result<GradedQuotientBasis, InvariantError> {
    if grading.nvars() != f.nvars() {
        return Err(InvariantError::NvarsMismatch {
            grading: grading.nvars(),
            poly: f.nvars(),
        });
    }
    // Homogeneity with positive weights rules out a constant term, so the
    // origin lies on X; a linear term means a nonzero gradient there.
    if f.monomials().any(|m| m.total_degree() <= 1) {
        return Err(InvariantError::Smooth);
    }
    let order = MonomialOrder::weighted(grading);
    let gb = buchberger(&jacobian(f), &order, options)?;
    let basis = match standard_monomials(&gb) {
        StandardMonomials::Finite(b) => b,
        StandardMonomials::Infinite => return Err(InvariantError::NonIsolated),
    };
    let mut hilbert = BTreeMap::new();
    for &k in basis.degrees() {
        *hilbert.entry(k).or_insert(0) += 1;
    }
    let mu = basis.len() as u64;
    Ok(GradedQuotientBasis {
        basis,
        groebner: gb,
        hilbert,
        mu,
    })
}

/// Number of monomials in `weights.len()` variables of weighted degree `target`.
pub fn count_monomials_of_degree(weights: &[u64], target: u64) -> u64 {
    let t = target as usize;
    let mut ways = vec![0u64; t + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for s in w..=t {
            ways[s] += ways[s - w];
        }
    }
    ways[t]
}

/// Milnor number from the weights alone: `Π (d − m_i) / m_i`.
///
/// Returns `None` when the product is not a positive integer, which cannot
/// happen for an isolated singularity.
pub fn milnor_number_from_weights(grading: &Grading) -> Option<u64> {
    let d = BigInt::from(grading.degree());
    let mut prod = BigRational::one();
    for &m in grading.weights() {
        let m = BigInt::from(m);
        prod *= BigRational::new(&d - &m, m);
    }
    if prod.is_integer() && prod.is_positive() {
        prod.to_integer().to_u64()
    } else {
        None
    }
}

/// Reduced genus `g`: the dimension of the degree `d − Σ m_i` piece of `R`,
/// zero when that degree is negative.
pub fn reduced_genus(grading: &Grading) -> u64 {
    match grading.degree().checked_sub(grading.weight_sum()) {
        Some(t) => count_monomials_of_degree(grading.weights(), t),
        None => 0,
    }
}

/// The same piece read from the Jacobi ring, `dim J_{d − Σ m_i}`.
pub fn genus_from_jacobi(jb: &GradedQuotientBasis, grading: &Grading) -> u64 {
    match grading.degree().checked_sub(grading.weight_sum()) {
        Some(t) => jb.dim(t),
        None => 0,
    }
}

/// `h = dim H^{n−2}(X°, C) = Σ { dim J_k : k ≡ −Σ m_i (mod d) }`.
pub fn link_cohomology_dim(jb: &GradedQuotientBasis, grading: &Grading) -> u64 {
    let d = grading.degree();
    let shift = grading.weight_sum() % d;
    jb.hilbert()
        .iter()
        .filter(|(&k, _)| (k % d + shift).is_multiple_of(d))
        .map(|(_, &dim)| dim)
        .sum()
}

/// The degree `k = −dλ − Σ m_i` that `λ` probes, when a nonnegative integer.
pub fn jacobi_degree_for(lambda: &BigRational, grading: &Grading) -> Option<u64> {
    let d = BigRational::from_integer(BigInt::from(grading.degree()));
    let s = BigRational::from_integer(BigInt::from(grading.weight_sum()));
    let k = -(lambda * d) - s;
    if k.is_integer() && !k.is_negative() {
        k.to_integer().to_u64()
    } else {
        None
    }
}

/// `α = (k + Σ m_i) / d`, so that the root probed by degree `k` is `−α`.
pub fn spectral_number(k: u64, grading: &Grading) -> BigRational {
    BigRational::new(
        BigInt::from(k) + BigInt::from(grading.weight_sum()),
        BigInt::from(grading.degree()),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BRoot {
    pub root: BigRational,
    pub multiplicity: u32,
}

/// Roots of the Bernstein–Sato polynomial, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFunction {
    roots: Vec<BRoot>,
}

impl BFunction {
    pub fn roots(&self) -> &[BRoot] {
        &self.roots
    }

    pub fn degree(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn multiplicity(&self, lambda: &BigRational) -> u32 {
        self.roots
            .iter()
            .find(|r| &r.root == lambda)
            .map_or(0, |r| r.multiplicity)
    }

    /// Integral roots.
    pub fn integral_roots(&self) -> impl Iterator<Item = &BigRational> {
        self.roots.iter().map(|r| &r.root).filter(|r| r.is_integer())
    }
}

impl fmt::Display for BFunction {
    /// `(s+1)^2 (s+4/3) (s+5/3) (s+2)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let c = -r.root.clone();
            if c.is_negative() {
                write!(f, "(s-{})", fmt_rational(&-c))?;
            } else {
                write!(f, "(s+{})", fmt_rational(&c))?;
            }
            if r.multiplicity > 1 {
                write!(f, "^{}", r.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// b-function roots: `−1` together with `−(k + Σ m_i)/d` for every degree
/// `k` with `dim J_k > 0`. The root `−1` is double exactly when `g > 0`.
pub fn b_function(jb: &GradedQuotientBasis, grading: &Grading, genus: u64) -> BFunction {
    let minus_one = -BigRational::one();
    let mut roots: Vec<BigRational> = jb.hilbert().keys().map(|&k| -spectral_number(k, grading)).collect();
    roots.push(minus_one.clone());
    roots.sort();
    roots.dedup();
    roots.reverse();
    let roots = roots
        .into_iter()
        .map(|root| {
            let multiplicity = if root == minus_one && genus > 0 { 2 } else { 1 };
            BRoot { root, multiplicity }
        })
        .collect();
    BFunction { roots }
}

/// Length of `D f^λ / D f^{λ+1}`.
pub fn length_quotient(lambda: &BigRational, jb: &GradedQuotientBasis, grading: &Grading, genus: u64) -> u64 {
    if *lambda == -BigRational::one() {
        return 1 + genus;
    }
    jacobi_degree_for(lambda, grading).map_or(0, |k| jb.dim(k))
}

/// Lengths of the modules attached to `f` and of the kernels between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthSummary {
    /// Length of `D[s]f^s / D[s]f^{s+1}`.
    pub len_ds: u64,
    /// Length of the Hamiltonian-invariants module `M(f)`.
    pub len_mf: u64,
    /// Length of the local cohomology `H^1_f(R)`.
    pub len_h1f: u64,
    /// `ker p ≅ δ^h`.
    pub ker_p: u64,
    /// `ker q_{−1} ≅ δ^{h−g}`.
    pub ker_q_minus_one: u64,
    /// `ker π ≅ δ^g`.
    pub ker_pi: u64,
    /// Whether `H^1_f(R)` is generated by `1/f`, i.e. `h = g`.
    pub generated_by_inverse: bool,
}

pub fn length_summary(mu: u64, genus: u64, h: u64) -> Result<LengthSummary, InvariantError> {
    if h < genus {
        return Err(InvariantError::Inconsistent { h, g: genus });
    }
    Ok(LengthSummary {
        len_ds: 1 + mu + h,
        len_mf: 1 + mu + h,
        len_h1f: 1 + h,
        ker_p: h,
        ker_q_minus_one: h - genus,
        ker_pi: genus,
        generated_by_inverse: h == genus,
    })
}

/// `D[s]f^s / D[s]f^{s+1} ≅ δ^{μ−g} ⊕ N`, where `N` is filtered with layers
/// `δ^h`, `IC(X)`, `δ^g` from bottom to top.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    pub delta_summand: u64,
    pub bottom_delta: u64,
    pub top_delta: u64,
}

impl StructureReport {
    pub fn total_length(&self) -> u64 {
        self.delta_summand + self.bottom_delta + 1 + self.top_delta
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "δ^{} ⊕ N, N layers bottom to top: δ^{} | IC(X) | δ^{}",
            self.delta_summand, self.bottom_delta, self.top_delta
        )
    }
}

pub fn structure_report(mu: u64, genus: u64, h: u64) -> StructureReport {
    StructureReport {
        delta_summand: mu - genus,
        bottom_delta: h,
        top_delta: genus,
    }
}

/// One row of the spectrum table: `λ = −j − β` with `β ∈ [0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub beta: BigRational,
    pub j: i64,
    pub dim: u64,
}

impl SpectrumEntry {
    /// Monodromy eigenvalue `exp(−2πiβ)` recorded by its rotation number `β`.
    pub fn eigenvalue_rotation(&self) -> &BigRational {
        &self.beta
    }

    pub fn lambda(&self) -> BigRational {
        -(BigRational::from_integer(BigInt::from(self.j)) + &self.beta)
    }
}

/// Hodge-graded Milnor cohomology dimensions per monodromy eigenvalue,
/// sorted by increasing spectral number `j + β`.
pub fn steenbrink_table(jb: &GradedQuotientBasis, grading: &Grading) -> Vec<SpectrumEntry> {
    let mut merged: BTreeMap<BigRational, u64> = BTreeMap::new();
    for (&k, &dim) in jb.hilbert() {
        *merged.entry(spectral_number(k, grading)).or_insert(0) += dim;
    }
    merged
        .into_iter()
        .map(|(alpha, dim)| {
            let (j, rem) = alpha.numer().div_mod_floor(alpha.denom());
            SpectrumEntry {
                beta: BigRational::new(rem, alpha.denom().clone()),
                j: j.to_i64().expect("spectral number fits in i64"),
                dim,
            }
        })
        .collect()
}

/// Every b-root has a nonzero quotient `D f^λ / D f^{λ+1}`.
pub fn check_nonvanishing(bf: &BFunction, jb: &GradedQuotientBasis, grading: &Grading, genus: u64) -> bool {
    bf.roots()
        .iter()
        .all(|r| length_quotient(&r.root, jb, grading, genus) > 0)
}

/// All invariants of `f` computed together.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub polynomial: Polynomial,
    pub grading: Grading,
    pub jacobi: GradedQuotientBasis,
    pub genus: u64,
    pub h: u64,
    pub bfunction: BFunction,
    pub lengths: LengthSummary,
    pub structure: StructureReport,
    pub spectrum: Vec<SpectrumEntry>,
}

impl Analysis {
    pub fn new(f: &Polynomial, grading: Grading, options: &GroebnerOptions) -> Result<Analysis, InvariantError> {
        if f.nvars() < 3 {
            return Err(InvariantError::TooFewVariables(f.nvars()));
        }
        let jacobi = jacobi_ring(f, &grading, options)?;
        let genus = reduced_genus(&grading);
        let h = link_cohomology_dim(&jacobi, &grading);
        let mu = jacobi.mu();
        let lengths = length_summary(mu, genus, h)?;
        Ok(Analysis {
            polynomial: f.clone(),
            bfunction: b_function(&jacobi, &grading, genus),
            structure: structure_report(mu, genus, h),
            spectrum: steenbrink_table(&jacobi, &grading),
            grading,
            jacobi,
            genus,
            h,
            lengths,
        })
    }

    pub fn mu(&self) -> u64 {
        self.jacobi.mu()
    }

    pub fn length_quotient(&self, lambda: &BigRational) -> u64 {
        length_quotient(lambda, &self.jacobi, &self.grading, self.genus)
    }

    /// `(λ, length)` for every b-root.
    pub fn root_lengths(&self) -> Vec<(BigRational, u64)> {
        self.bfunction
            .roots()
            .iter()
            .map(|r| (r.root.clone(), self.length_quotient(&r.root)))
            .collect()
    }

    pub fn check_nonvanishing(&self) -> bool {
        check_nonvanishing(&self.bfunction, &self.jacobi, &self.grading, self.genus)
    }
}
