//! Positive weight gradings and detection of quasi-homogeneity.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("zero or constant polynomial has no weighted degree")]
    ZeroOrConstant,
    #[error("not quasi-homogeneous: no positive weights give every monomial the same weighted degree")]
    NotQuasiHomogeneous,
    #[error("length mismatch: monomial has {monomial} variables, grading has {grading}")]
    LengthMismatch { monomial: usize, grading: usize },
    #[error("weights must be positive integers")]
    NonPositiveWeight,
    #[error("polynomial is not homogeneous for weights {0:?}")]
    NotHomogeneousFor(Vec<u64>),
}

/// Weights `m_i >= 1` on the variables together with the weighted degree of `f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: Vec<u64>,
    degree: u64,
}

impl Grading {
    /// Builds a grading from given weights, checking that `f` is homogeneous.
    ///
    /// Weights sharing a common factor are divided through by it.
    pub fn for_polynomial(f: &Polynomial, weights: &[u64]) -> Result<Grading, GradingError> {
        if weights.len() != f.nvars() {
            return Err(GradingError::LengthMismatch {
                monomial: f.nvars(),
                grading: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(GradingError::NonPositiveWeight);
        }
        if f.is_constant() {
            return Err(GradingError::ZeroOrConstant);
        }
        let g = weights.iter().fold(0u64, |a, &b| a.gcd(&b));
        let weights: Vec<u64> = weights.iter().map(|w| w / g).collect();
        let mut degrees = f.monomials().map(|m| dot(m.exponents(), &weights));
        let d = degrees.next().expect("nonconstant polynomial has terms");
        if degrees.any(|e| e != d) {
            return Err(GradingError::NotHomogeneousFor(weights));
        }
        Ok(Grading { weights, degree: d })
    }

    /// Standard grading with every weight 1; the degree is left at `degree`.
    pub fn standard(nvars: usize, degree: u64) -> Grading {
        Grading {
            weights: vec![1; nvars],
            degree,
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// The weighted degree `d = |f|`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// `Σ m_i`.
    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Top degree of the Jacobi ring, `σ = Σ (d − 2 m_i)`, when nonnegative.
    pub fn socle_degree(&self) -> Option<u64> {
        let s: i128 = self.weights.iter().map(|&m| self.degree as i128 - 2 * m as i128).sum();
        u64::try_from(s).ok()
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Result<u64, GradingError> {
        weighted_degree(m, self)
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "weights ({}), degree {}", w.join(","), self.degree)
    }
}

fn dot(e: &[u32], w: &[u64]) -> u64 {
    e.iter().zip(w).map(|(&a, &b)| a as u64 * b).sum()
}

/// `Σ_i e_i · m_i`.
pub fn weighted_degree(m: &Monomial, g: &Grading) -> Result<u64, GradingError> {
    if m.nvars() != g.nvars() {
        return Err(GradingError::LengthMismatch {
            monomial: m.nvars(),
            grading: g.nvars(),
        });
    }
    Ok(dot(m.exponents(), &g.weights))
}

/// Finds positive integer weights making `f` homogeneous.
///
/// Among all positive integral weight vectors the one with the smallest
/// degree `d` is returned; ties are broken by the lexicographically smallest
/// weight vector. Variables not occurring in `f` receive weight 1.
pub fn find_weights(f: &Polynomial) -> Result<Grading, GradingError> {
    if f.is_constant() {
        return Err(GradingError::ZeroOrConstant);
    }
    let n = f.nvars();
    let present: Vec<usize> = (0..n)
        .filter(|&i| f.monomials().any(|m| m.exponents()[i] > 0))
        .collect();
    let exps: Vec<Vec<i64>> = f
        .monomials()
        .map(|m| present.iter().map(|&i| m.exponents()[i] as i64).collect())
        .collect();

    let k = present.len();
    let first = &exps[0];
    let rows: Vec<Vec<BigRational>> = exps[1..]
        .iter()
        .map(|e| e.iter().zip(first).map(|(a, b)| rat(a - b)).collect())
        .collect();
    let kernel = nullspace(rows, k);
    if kernel.is_empty() {
        return Err(GradingError::NotQuasiHomogeneous);
    }

    let reduced = if kernel.len() == 1 {
        primitive_positive(&kernel[0]).ok_or(GradingError::NotQuasiHomogeneous)?
    } else {
        if !positive_point_exists(&kernel) {
            return Err(GradingError::NotQuasiHomogeneous);
        }
        minimal_degree_weights(&kernel, first)
    };

    let mut weights = vec![1u64; n];
    for (slot, &i) in present.iter().enumerate() {
        weights[i] = reduced[slot];
    }
    let degree = dot(f.monomials().next().expect("nonconstant").exponents(), &weights);
    Ok(Grading { weights, degree })
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Kernel basis of the matrix `rows` (each of length `ncols`), one vector per
/// free column, with that free coordinate equal to 1 and other free
/// coordinates 0.
fn nullspace(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); ncols];
            v[fc] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][fc].clone();
            }
            v
        })
        .collect()
}

/// The primitive integer vector on the ray of `v` (or of `-v`), if that ray is
/// strictly positive.
fn primitive_positive(v: &[BigRational]) -> Option<Vec<u64>> {
    let sign = if v.iter().all(|x| x.is_positive()) {
        BigInt::one()
    } else if v.iter().all(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        return None;
    };
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer() * &sign).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| (x / &g).to_u64()).collect()
}

/// Decides by Fourier–Motzkin elimination whether some combination
/// `Σ t_j · kernel[j]` is strictly positive in every coordinate.
fn positive_point_exists(kernel: &[Vec<BigRational>]) -> bool {
    let nparams = kernel.len();
    let ncoords = kernel[0].len();
    // Constraints `a · t >= 1`; the cone is homogeneous so >= 1 is equivalent to > 0.
    let mut cons: Vec<(Vec<BigRational>, BigRational)> = (0..ncoords)
        .map(|i| ((0..nparams).map(|j| kernel[j][i].clone()).collect(), BigRational::one()))
        .collect();
    for var in 0..nparams {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cons {
            if c.0[var].is_positive() {
                pos.push(c);
            } else if c.0[var].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                // Scale so the eliminated coefficients cancel.
                let sp = -na[var].clone();
                let sn = pa[var].clone();
                let a: Vec<BigRational> = pa.iter().zip(na).map(|(x, y)| x * &sp + y * &sn).collect();
                let b = pb * &sp + nb * &sn;
                rest.push((a, b));
            }
        }
        cons = rest;
    }
    cons.iter().all(|(_, b)| !b.is_positive())
}

/// Enumerates positive integral points of the kernel by increasing degree.
///
/// Parametrization: kernel vectors are indexed by free coordinates, so a
/// point is fixed by the values of those coordinates. Every variable occurs
/// in `f`, hence each weight is at most the degree.
fn minimal_degree_weights(kernel: &[Vec<BigRational>], first: &[i64]) -> Vec<u64> {
    let nparams = kernel.len();
    let ncoords = kernel[0].len();
    let mut d: u64 = 1;
    loop {
        let mut best: Option<Vec<u64>> = None;
        let mut t = vec![1u64; nparams];
        'outer: loop {
            if let Some(w) = point(kernel, &t, ncoords) {
                let deg: u64 = w.iter().zip(first).map(|(a, &b)| a * b as u64).sum();
                if deg == d && best.as_ref().is_none_or(|b| w < *b) {
                    best = Some(w);
                }
            }
            let mut j = 0;
            loop {
                if j == nparams {
                    break 'outer;
                }
                if t[j] < d {
                    t[j] += 1;
                    break;
                }
                t[j] = 1;
                j += 1;
            }
        }
        if let Some(w) = best {
            return w;
        }
        d += 1;
    }
}

fn point(kernel: &[Vec<BigRational>], t: &[u64], ncoords: usize) -> Option<Vec<u64>> {
    (0..ncoords)
        .map(|i| {
            let v: BigRational = kernel
                .iter()
                .zip(t)
                .map(|(k, &tj)| &k[i] * BigRational::from_integer(BigInt::from(tj)))
                .sum();
            if v.is_integer() && v.is_positive() {
                v.to_integer().to_u64()
            } else {
                None
            }
        })
        .collect()
}
