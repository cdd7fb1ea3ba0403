//! Gröbner bases over the rationals.
//!
//! Buchberger's algorithm with the coprime and chain criteria. Pairs are
//! selected by smallest lcm (ties by index), so the run is deterministic.
//! Internally polynomials carry integer coefficients with content 1; the
//! returned basis is reduced and monic.

mod order;

pub use order::MonomialOrder;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial};
use order::Key;

/// Default cap on the weighted degree of S-pair lcms.
pub const DEFAULT_MAX_DEGREE: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("empty generator list")]
    NoGenerators,
    #[error("generator variable count {found} does not match order on {expected} variables")]
    NvarsMismatch { expected: usize, found: usize },
    #[error("S-pair degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: u64, cap: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Hard limit on the weighted degree of any S-pair lcm.
    pub max_degree: u64,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

/// Integer polynomial, terms sorted by decreasing [`Key`].
#[derive(Debug, Clone, PartialEq, Eq)]
struct IntPoly {
    terms: Vec<(Key, BigInt)>,
}

impl IntPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> IntPoly {
        let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = p
            .terms()
            .map(|(m, c)| (order.key(m), (c * BigRational::from_integer(lcm.clone())).to_integer()))
            .collect();
        IntPoly::from_unsorted(terms)
    }

    fn from_unsorted(mut terms: Vec<(Key, BigInt)>) -> IntPoly {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut p = IntPoly { terms };
        p.make_primitive();
        p
    }

    fn from_map(map: BTreeMap<Key, BigInt>) -> IntPoly {
        let mut p = IntPoly {
            terms: map.into_iter().rev().collect(),
        };
        p.make_primitive();
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Key {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// Divides by the content and makes the leading coefficient positive.
    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &g;
            }
        }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        let lc = BigRational::from_integer(self.lc().clone());
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(k, c)| (k.monomial(), BigRational::from_integer(c.clone()) / &lc)),
        )
    }
}

/// Fully reduces `p` modulo `basis`; the result is a nonzero scalar multiple
/// of the remainder, primitive.
fn reduce_int(p: &IntPoly, basis: &[IntPoly]) -> IntPoly {
    let mut work: BTreeMap<Key, BigInt> = p.terms.iter().cloned().collect();
    // Remainder terms with the index of the first multiplier applied after them.
    let mut rem: Vec<(Key, BigInt, usize)> = Vec::new();
    let mut multipliers: Vec<BigInt> = Vec::new();

    while let Some((key, coeff)) = work.pop_last() {
        let Some(g) = basis.iter().find(|g| g.lead().divides(&key)) else {
            rem.push((key, coeff, multipliers.len()));
            continue;
        };
        let q = key.quotient(g.lead());
        let gcd = g.lc().gcd(&coeff);
        let a = g.lc() / &gcd;
        let b = &coeff / &gcd;
        let scaled = !a.is_one();
        if scaled {
            for v in work.values_mut() {
                *v *= &a;
            }
            multipliers.push(a);
        }
        for (k, c) in g.terms.iter().skip(1) {
            let key = k.mul(&q);
            let delta = c * &b;
            match work.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        if scaled && multipliers.len().is_multiple_of(8) {
            shrink_content(&mut work, &mut rem, &mut multipliers);
        }
    }

    // suffix[i] = product of multipliers[i..]
    let mut suffix = vec![BigInt::one(); multipliers.len() + 1];
    for i in (0..multipliers.len()).rev() {
        suffix[i] = &suffix[i + 1] * &multipliers[i];
    }
    let terms = rem.into_iter().map(|(k, c, i)| (k, c * &suffix[i])).collect();
    IntPoly::from_unsorted(terms)
}

/// Folds the pending multipliers into the remainder collected so far, then
/// divides work and remainder by their common content.
fn shrink_content(work: &mut BTreeMap<Key, BigInt>, rem: &mut [(Key, BigInt, usize)], multipliers: &mut Vec<BigInt>) {
    let mut suffix = BigInt::one();
    let mut next = multipliers.len();
    for (_, c, i) in rem.iter_mut().rev() {
        while next > *i {
            next -= 1;
            suffix *= &multipliers[next];
        }
        *c *= &suffix;
        *i = 0;
    }
    multipliers.clear();

    let mut g = BigInt::zero();
    for c in work.values().chain(rem.iter().map(|(_, c, _)| c)) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for v in work.values_mut() {
        *v /= &g;
    }
    for (_, c, _) in rem.iter_mut() {
        *c /= &g;
    }
}

fn s_poly(f: &IntPoly, g: &IntPoly, order: &MonomialOrder) -> IntPoly {
    let lcm = f.lead().lcm(g.lead(), order);
    let qf = lcm.quotient(f.lead());
    let qg = lcm.quotient(g.lead());
    let gcd = f.lc().gcd(g.lc());
    let af = g.lc() / &gcd;
    let ag = f.lc() / &gcd;
    let mut map: BTreeMap<Key, BigInt> = BTreeMap::new();
    for (k, c) in f.terms.iter().skip(1) {
        *map.entry(k.mul(&qf)).or_insert_with(BigInt::zero) += c * &af;
    }
    for (k, c) in g.terms.iter().skip(1) {
        *map.entry(k.mul(&qg)).or_insert_with(BigInt::zero) -= c * &ag;
    }
    map.retain(|_, c| !c.is_zero());
    IntPoly::from_map(map)
}

/// Reduced Gröbner basis of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    /// Monic generators sorted by increasing leading monomial.
    generators: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True when every input generator was zero.
    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    /// Checks that every S-polynomial of basis pairs reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let ints: Vec<IntPoly> = self
            .generators
            .iter()
            .map(|g| IntPoly::from_poly(g, &self.order))
            .collect();
        for i in 0..ints.len() {
            for j in i + 1..ints.len() {
                let s = s_poly(&ints[i], &ints[j], &self.order);
                if !reduce_int(&s, &ints).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True if no term of any generator is divisible by another generator's
    /// leading monomial, and every generator is monic.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.generators.iter().enumerate() {
            if g.coefficient(&self.leading[i]) != BigRational::one() {
                return false;
            }
            for m in g.monomials() {
                let hit = self.leading.iter().enumerate().any(|(j, l)| j != i && l.divides(m));
                if hit {
                    return false;
                }
            }
        }
        true
    }

    /// Leading monomial of `p` under this basis' order.
    pub fn leading_monomial(&self, p: &Polynomial) -> Option<Monomial> {
        p.monomials().max_by(|a, b| self.order.cmp(a, b)).cloned()
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(
    gens: &[Polynomial],
    order: &MonomialOrder,
    options: &GroebnerOptions,
) -> Result<GroebnerBasis, GroebnerError> {
    if gens.is_empty() {
        return Err(GroebnerError::NoGenerators);
    }
    let nvars = order.nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(GroebnerError::NvarsMismatch {
            expected: nvars,
            found: g.nvars(),
        });
    }

    let mut basis: Vec<IntPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IntPoly::from_poly(g, order))
        .collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            order: order.clone(),
            nvars,
            generators: vec![],
            leading: vec![],
        });
    }
    if basis.iter().any(|g| g.lead().degree == 0) {
        return Ok(unit_basis(order, nvars));
    }

    let mut pending: BTreeMap<(Key, usize, usize), ()> = BTreeMap::new();
    for j in 0..basis.len() {
        for i in 0..j {
            let lcm = basis[i].lead().lcm(basis[j].lead(), order);
            pending.insert((lcm, i, j), ());
        }
    }
    let mut live: HashSet<(usize, usize)> = pending.keys().map(|(_, i, j)| (*i, *j)).collect();

    while let Some(((lcm, i, j), ())) = pending.pop_first() {
        live.remove(&(i, j));
        if lcm.degree > options.max_degree {
            return Err(GroebnerError::DegreeCapExceeded {
                degree: lcm.degree,
                cap: options.max_degree,
            });
        }
        if basis[i].lead().coprime(basis[j].lead()) {
            continue;
        }
        // Chain criterion. Both side pairs must have a strictly smaller lcm;
        // with equal lcms two pairs could each be discarded on account of the
        // other.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&lcm)
                && basis[i].lead().lcm(basis[k].lead(), order) != lcm
                && basis[j].lead().lcm(basis[k].lead(), order) != lcm
                && !live.contains(&(i.min(k), i.max(k)))
                && !live.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let h = reduce_int(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.lead().degree == 0 {
            return Ok(unit_basis(order, nvars));
        }
        let new = basis.len();
        for (k, g) in basis.iter().enumerate() {
            let lcm = g.lead().lcm(h.lead(), order);
            pending.insert((lcm, k, new), ());
            live.insert((k, new));
        }
        basis.push(h);
    }

    Ok(interreduce(basis, order, nvars))
}

fn unit_basis(order: &MonomialOrder, nvars: usize) -> GroebnerBasis {
    GroebnerBasis {
        order: order.clone(),
        nvars,
        generators: vec![Polynomial::one(nvars)],
        leading: vec![Monomial::one(nvars)],
    }
}

fn interreduce(basis: Vec<IntPoly>, order: &MonomialOrder, nvars: usize) -> GroebnerBasis {
    let mut minimal: Vec<IntPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<IntPoly> = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<IntPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = reduce_tail(g, &others);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| a.lead().cmp(b.lead()));
    let generators: Vec<Polynomial> = reduced.iter().map(|g| g.to_poly(nvars)).collect();
    let leading = reduced.iter().map(|g| g.lead().monomial()).collect();
    GroebnerBasis {
        order: order.clone(),
        nvars,
        generators,
        leading,
    }
}

/// Reduces every non-leading term of `g` by `others`, leaving the leading term.
fn reduce_tail(g: &IntPoly, others: &[IntPoly]) -> IntPoly {
    // No leading term of `others` divides lead(g) in a minimal basis, so a full
    // reduction keeps the leading term in place.
    let r = reduce_int(g, others);
    debug_assert_eq!(r.lead(), g.lead());
    r
}

/// Normal form of `p` modulo a reduced basis: the unique remainder with no
/// term divisible by a leading monomial.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let order = &gb.order;
    let lts: Vec<Key> = gb.leading.iter().map(|m| order.key(m)).collect();
    let gens: Vec<Vec<(Key, BigRational)>> = gb
        .generators
        .iter()
        .zip(&gb.leading)
        .map(|(g, lt)| {
            g.terms()
                .filter(|(m, _)| *m != lt)
                .map(|(m, c)| (order.key(m), c.clone()))
                .collect()
        })
        .collect();
    let mut work: BTreeMap<Key, BigRational> = p.terms().map(|(m, c)| (order.key(m), c.clone())).collect();
    let mut out = Polynomial::zero(p.nvars());
    while let Some((key, coeff)) = work.pop_last() {
        let Some(idx) = lts.iter().position(|lt| lt.divides(&key)) else {
            out.add_term(key.monomial(), coeff);
            continue;
        };
        let q = key.quotient(&lts[idx]);
        for (k, c) in &gens[idx] {
            let entry = work.entry(k.mul(&q)).or_insert_with(BigRational::zero);
            *entry -= c * &coeff;
            if entry.is_zero() {
                work.remove(&k.mul(&q));
            }
        }
    }
    out
}

/// Monomials outside the leading-term ideal, with their weighted degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomialBasis {
    monomials: Vec<Monomial>,
    degrees: Vec<u64>,
}

impl StandardMonomialBasis {
    /// Monomials in increasing monomial order.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardMonomials {
    Finite(StandardMonomialBasis),
    /// The quotient is infinite-dimensional: the ideal is not zero-dimensional.
    Infinite,
}

impl StandardMonomials {
    pub fn finite(self) -> Option<StandardMonomialBasis> {
        match self {
            StandardMonomials::Finite(b) => Some(b),
            StandardMonomials::Infinite => None,
        }
    }
}

/// Enumerates the standard monomials of a reduced basis.
///
/// Finite exactly when each variable has a pure power among the leading
/// monomials.
pub fn standard_monomials(gb: &GroebnerBasis) -> StandardMonomials {
    let n = gb.nvars;
    let mut has_power = vec![false; n];
    for m in &gb.leading {
        if m.is_one() {
            has_power.iter_mut().for_each(|h| *h = true);
        } else if let Some((i, _)) = m.as_pure_power() {
            has_power[i] = true;
        }
    }
    if gb.is_zero_ideal() || !has_power.iter().all(|&h| h) {
        return StandardMonomials::Infinite;
    }
    let is_standard = |m: &Monomial| !gb.leading.iter().any(|l| l.divides(m));
    let mut found: Vec<Monomial> = Vec::new();
    let mut seen: HashMap<Monomial, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    let one = Monomial::one(n);
    if is_standard(&one) {
        seen.insert(one.clone(), ());
        queue.push_back(one);
    }
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let next = m.mul(&Monomial::var(n, i));
            if seen.contains_key(&next) || !is_standard(&next) {
                continue;
            }
            seen.insert(next.clone(), ());
            queue.push_back(next);
        }
        found.push(m);
    }
    found.sort_by(|a, b| gb.order.cmp(a, b));
    let degrees = found.iter().map(|m| gb.order.degree(m)).collect();
    StandardMonomials::Finite(StandardMonomialBasis {
        monomials: found,
        degrees,
    })
}
