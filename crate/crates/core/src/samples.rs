//! Named example singularities and seeded random quasi-homogeneous inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::grading::{Grading, GradingError};
use crate::groebner::GroebnerOptions;
use crate::hamiltonian::monomials_up_to;
use crate::invariants::jacobi_ring;
use crate::poly::{default_names, parse_polynomial, Monomial, Polynomial};

/// `(name, polynomial text)` over variables `x, y, z`.
pub const CORPUS: &[(&str, &str)] = &[
    ("quadric", "x^2+y^2+z^2"),
    ("fermat cubic", "x^3+y^3+z^3"),
    ("fermat quartic", "x^4+y^4+z^4"),
    ("E8", "x^2+y^3+z^5"),
];

pub fn corpus() -> Vec<(&'static str, Polynomial)> {
    CORPUS
        .iter()
        .map(|(name, text)| (*name, parse_polynomial(text, &default_names(3)).expect("corpus parses")))
        .collect()
}

/// `x_1^d + … + x_n^d`.
pub fn fermat(nvars: usize, d: u32) -> Polynomial {
    (0..nvars).fold(Polynomial::zero(nvars), |acc, i| {
        &acc + &Polynomial::var(nvars, i).pow(d)
    })
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A Brieskorn–Pham polynomial `Σ c_i x_i^{a_i}` with exponents in
/// `2..=max_exponent`, deformed by up to `extra_terms` random monomials of the
/// same weighted degree. Retries until the singularity is isolated.
pub fn random_quasi_homogeneous<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_exponent: u32,
    extra_terms: usize,
) -> (Polynomial, Grading) {
    loop {
        let exps: Vec<u64> = (0..nvars).map(|_| rng.gen_range(2..=max_exponent) as u64).collect();
        let d = exps.iter().fold(1u64, |a, &b| a.lcm(&b));
        let weights: Vec<u64> = exps.iter().map(|a| d / a).collect();
        let mut f = Polynomial::zero(nvars);
        for (i, &a) in exps.iter().enumerate() {
            let c = int(rng.gen_range(1..=3));
            f = &f + &Polynomial::var(nvars, i).pow(a as u32).scale(&c);
        }
        let mut candidates: Vec<Monomial> = monomials_up_to(&weights, d)
            .into_iter()
            .filter(|m| degree(m, &weights) == d && m.as_pure_power().is_none())
            .collect();
        candidates.shuffle(rng);
        for m in candidates.into_iter().take(extra_terms) {
            let mut c = rng.gen_range(-3..=2);
            if c >= 0 {
                c += 1;
            }
            f = &f + &Polynomial::term(m, int(c));
        }
        let grading = match Grading::for_polynomial(&f, &weights) {
            Ok(g) => g,
            Err(GradingError::NotHomogeneousFor(_)) => unreachable!("terms share one weighted degree"),
            Err(e) => panic!("unexpected grading failure: {e}"),
        };
        if jacobi_ring(&f, &grading, &GroebnerOptions::default()).is_ok() {
            return (f, grading);
        }
    }
}

/// A random homogeneous form of degree `d` in `nvars` variables with an
/// isolated singularity (a cone over a smooth hypersurface).
pub fn random_homogeneous<R: Rng>(rng: &mut R, nvars: usize, d: u32) -> (Polynomial, Grading) {
    let weights = vec![1u64; nvars];
    loop {
        let mut f = fermat(nvars, d);
        for m in monomials_up_to(&weights, d as u64) {
            if m.total_degree() == d as u64 && m.as_pure_power().is_none() && rng.gen_bool(0.3) {
                f = &f + &Polynomial::term(m, int(rng.gen_range(-2..=2)));
            }
        }
        let grading = Grading::for_polynomial(&f, &weights).expect("homogeneous");
        if jacobi_ring(&f, &grading, &GroebnerOptions::default()).is_ok() {
            return (f, grading);
        }
    }
}

fn degree(m: &Monomial, w: &[u64]) -> u64 {
    m.exponents().iter().zip(w).map(|(&e, &x)| e as u64 * x).sum()
}
