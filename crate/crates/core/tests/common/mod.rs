#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qhinv_core::{Monomial, Polynomial};

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Random polynomial in `nvars` variables, up to `max_terms` terms with
/// exponents below `max_exp`.
pub fn polynomial(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..max_exp, nvars), rational()), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (Monomial::new(e), c))))
}

pub fn names(n: usize) -> Vec<String> {
    qhinv_core::poly::default_names(n)
}
