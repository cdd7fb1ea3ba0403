use std::cmp::Ordering;

use crate::grading::Grading;
use crate::poly::Monomial;

/// Weighted-degree order with reverse-lexicographic tie-break.
///
/// With all weights 1 this is plain graded reverse-lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    weights: Vec<u64>,
}

impl MonomialOrder {
    pub fn weighted(grading: &Grading) -> Self {
        MonomialOrder {
            weights: grading.weights().to_vec(),
        }
    }

    /// Graded reverse-lex on `nvars` variables.
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            weights: vec![1; nvars],
        }
    }

    /// Panics on a zero weight: the order must be a well-order.
    pub fn from_weights(weights: Vec<u64>) -> Self {
        assert!(
            weights.iter().all(|&w| w > 0),
            "monomial order weights must be positive"
        );
        MonomialOrder { weights }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.degree(a)
            .cmp(&self.degree(b))
            .then_with(|| revlex(a.exponents(), b.exponents()))
    }

    pub(crate) fn key(&self, m: &Monomial) -> Key {
        Key {
            degree: self.degree(m),
            exps: m.exponents().to_vec(),
        }
    }
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// A monomial with its weighted degree cached, ordered by [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    pub degree: u64,
    pub exps: Vec<u32>,
}

impl Key {
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.exps.clone())
    }

    pub fn divides(&self, other: &Key) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn quotient(&self, divisor: &Key) -> Key {
        Key {
            degree: self.degree - divisor.degree,
            exps: self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Key) -> Key {
        Key {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Key, order: &MonomialOrder) -> Key {
        let m = Monomial::new(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect());
        order.key(&m)
    }

    pub fn coprime(&self, other: &Key) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| revlex(&self.exps, &other.exps))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
