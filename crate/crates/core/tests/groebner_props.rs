mod common;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qhinv_core::invariants::jacobian;
use qhinv_core::samples::{random_homogeneous, random_quasi_homogeneous};
use qhinv_core::{
    buchberger, normal_form, standard_monomials, GroebnerOptions, Monomial, MonomialOrder, Polynomial,
    StandardMonomials,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `x_i^{a_i}` plus random terms of lower total degree: zero-dimensional with
/// quotient dimension `Π a_i`.
fn random_zero_dim_ideal(rng: &mut ChaCha8Rng) -> (Vec<Polynomial>, usize) {
    let n = 3;
    let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=4)).collect();
    let gens = exps
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut p = Polynomial::var(n, i).pow(a);
            for _ in 0..3 {
                let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..a)).collect();
                let m = Monomial::new(e);
                if m.total_degree() < a as u64 {
                    p = &p + &Polynomial::term(m, int(rng.gen_range(-3..=3)));
                }
            }
            p
        })
        .collect();
    (gens, exps.iter().product::<u32>() as usize)
}

#[test]
fn quotient_dimension_is_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..12 {
        let (gens, expected) = random_zero_dim_ideal(&mut rng);
        let weights: Vec<u64> = (0..3).map(|_| rng.gen_range(1..=5)).collect();
        let mut counts = Vec::new();
        for order in [MonomialOrder::grevlex(3), MonomialOrder::from_weights(weights.clone())] {
            let gb = buchberger(&gens, &order, &GroebnerOptions::default()).unwrap();
            assert!(gb.verify_s_pairs());
            assert!(gb.is_reduced());
            let count = match standard_monomials(&gb) {
                StandardMonomials::Finite(b) => b.len(),
                StandardMonomials::Infinite => panic!("ideal should be zero-dimensional"),
            };
            counts.push(count);
        }
        assert_eq!(counts, vec![expected, expected], "weights {weights:?}");
    }
}

#[test]
fn jacobian_bases_of_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10 {
        let (f, g) = random_quasi_homogeneous(&mut rng, 3, 5, 2);
        let gens = jacobian(&f);
        let order = MonomialOrder::weighted(&g);
        let gb = buchberger(&gens, &order, &GroebnerOptions::default()).unwrap();
        // Buchberger certificate and ideal membership.
        assert!(gb.verify_s_pairs());
        assert!(gb.is_reduced());
        for p in &gens {
            assert!(normal_form(p, &gb).is_zero());
        }
        // Graded consistency: each basis element is weighted-homogeneous.
        for q in gb.generators() {
            let degs: HashSet<u64> = q.monomials().map(|m| order.degree(m)).collect();
            assert_eq!(degs.len(), 1, "{q}");
        }
        // Standard monomials are closed under division.
        let basis = standard_monomials(&gb).finite().unwrap();
        let set: HashSet<&Monomial> = basis.monomials().iter().collect();
        for m in basis.monomials() {
            for i in 0..3 {
                if m.exponents()[i] > 0 {
                    let mut e = m.exponents().to_vec();
                    e[i] -= 1;
                    assert!(set.contains(&Monomial::new(e)));
                }
            }
        }
        // Same answer regardless of generator order.
        let mut rev = gens.clone();
        rev.reverse();
        assert_eq!(buchberger(&rev, &order, &GroebnerOptions::default()).unwrap(), gb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// p - NF(p) lies in the ideal: its normal form is zero, and NF is idempotent.
    #[test]
    fn normal_form_is_a_projection(p in common::polynomial(3, 6, 6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = random_quasi_homogeneous(&mut rng, 3, 4, 1);
        let gb = buchberger(&jacobian(&f), &MonomialOrder::weighted(&g), &GroebnerOptions::default()).unwrap();
        let r = normal_form(&p, &gb);
        prop_assert!(normal_form(&(&p - &r), &gb).is_zero());
        prop_assert_eq!(normal_form(&r, &gb), r.clone());
        for m in r.monomials() {
            prop_assert!(!gb.leading_monomials().iter().any(|l| l.divides(m)));
        }
    }
}

// Bezout: an isolated homogeneous singularity of degree d in three variables
// has a Jacobi ring of dimension (d-1)^3, in any order.
#[test]
fn homogeneous_jacobians_match_bezout_in_grevlex() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for d in 3..=6u32 {
        for _ in 0..3 {
            let (f, _) = random_homogeneous(&mut rng, 3, d);
            let gb = buchberger(&jacobian(&f), &MonomialOrder::grevlex(3), &GroebnerOptions::default()).unwrap();
            assert!(gb.verify_s_pairs(), "{f}");
            let StandardMonomials::Finite(b) = standard_monomials(&gb) else {
                panic!("{f}")
            };
            assert_eq!(b.monomials().len() as u64, ((d - 1) as u64).pow(3), "{f}");
        }
    }
}
