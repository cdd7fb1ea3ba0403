//! Polynomial differential forms, vector fields, and the Hamiltonian fields
//! `ξ_α = (∂_1 ∧ … ∧ ∂_n)(dα ∧ df)` attached to `(n−3)`-forms `α`.
//!
//! Sign convention: component `i` (0-based) of `ξ_α` is `(−1)^i` times the
//! coefficient of `dx_0 ∧ … ∧ \widehat{dx_i} ∧ … ∧ dx_{n−1}` in `dα ∧ df`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::grading::Grading;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("expected a form of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("Hamiltonian fields need at least 3 variables, got {0}")]
    TooFewVariables(usize),
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },
}

/// A differential `k`-form with polynomial coefficients.
///
/// Stored on strictly increasing index tuples; zero coefficients are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyForm {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Polynomial>,
}

/// Sorts `idx` in place; returns the permutation sign, or `None` on a repeat.
fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl PolyForm {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        PolyForm {
            nvars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// A 0-form.
    pub fn function(p: Polynomial) -> Self {
        let mut form = PolyForm::zero(p.nvars(), 0);
        form.add_component(vec![], p);
        form
    }

    /// `c · dx_{i_1} ∧ … ∧ dx_{i_k}` in any index order; repeated indices give 0.
    pub fn basic(c: Polynomial, indices: &[usize]) -> Self {
        let nvars = c.nvars();
        let mut idx = indices.to_vec();
        assert!(idx.iter().all(|&i| i < nvars), "form index out of range");
        let mut form = PolyForm::zero(nvars, idx.len());
        if let Some(sign) = sort_with_sign(&mut idx) {
            let c = if sign < 0 { -&c } else { c };
            form.add_component(idx, c);
        }
        form
    }

    fn add_component(&mut self, idx: Vec<usize>, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(idx).or_insert_with(|| Polynomial::zero(self.nvars));
        *slot = &*slot + &c;
        self.coeffs.retain(|_, p| !p.is_zero());
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, idx: &[usize]) -> Polynomial {
        self.coeffs
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    /// Value of a 0-form; zero polynomial otherwise.
    pub fn as_function(&self) -> Polynomial {
        if self.degree == 0 {
            self.coefficient(&[])
        } else {
            Polynomial::zero(self.nvars)
        }
    }

    pub fn add(&self, other: &PolyForm) -> PolyForm {
        assert_eq!((self.nvars, self.degree), (other.nvars, other.degree));
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_component(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> PolyForm {
        let mut out = PolyForm::zero(self.nvars, self.degree);
        for (k, v) in &self.coeffs {
            out.add_component(k.clone(), v.scale(c));
        }
        out
    }

    pub fn wedge(&self, other: &PolyForm) -> PolyForm {
        assert_eq!(self.nvars, other.nvars);
        let mut out = PolyForm::zero(self.nvars, self.degree + other.degree);
        for (a, pa) in &self.coeffs {
            for (b, pb) in &other.coeffs {
                let mut idx: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some(sign) = sort_with_sign(&mut idx) {
                    let prod = pa * pb;
                    out.add_component(idx, if sign < 0 { -&prod } else { prod });
                }
            }
        }
        out
    }

    /// Exterior derivative.
    pub fn d(&self) -> PolyForm {
        let mut out = PolyForm::zero(self.nvars, self.degree + 1);
        for (idx, p) in &self.coeffs {
            for j in 0..self.nvars {
                let dp = p.partial_derivative(j).expect("index in range");
                if dp.is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(idx.len() + 1);
                full.push(j);
                full.extend_from_slice(idx);
                if let Some(sign) = sort_with_sign(&mut full) {
                    out.add_component(full, if sign < 0 { -&dp } else { dp });
                }
            }
        }
        out
    }

    /// Interior product `ι_ξ`.
    pub fn interior(&self, xi: &PolyVectorField) -> PolyForm {
        assert_eq!(self.nvars, xi.nvars());
        if self.degree == 0 {
            return PolyForm::zero(self.nvars, 0);
        }
        let mut out = PolyForm::zero(self.nvars, self.degree - 1);
        for (idx, p) in &self.coeffs {
            for (r, &i) in idx.iter().enumerate() {
                let comp = &xi.components[i];
                if comp.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(r);
                let term = p * comp;
                out.add_component(rest, if r % 2 == 1 { -&term } else { term });
            }
        }
        out
    }

    /// Lie derivative `L_ξ = d ι_ξ + ι_ξ d`.
    pub fn lie_derivative(&self, xi: &PolyVectorField) -> PolyForm {
        let mut out = self.d().interior(xi);
        if self.degree > 0 {
            out = out.add(&self.interior(xi).d());
        }
        out
    }

    /// Weighted degree of a monomial form `x^a dx_I`: `|x^a| + Σ_{i∈I} m_i`.
    pub fn weighted_degree(&self, grading: &Grading) -> Option<u64> {
        self.coeffs
            .iter()
            .flat_map(|(idx, p)| {
                let extra: u64 = idx.iter().map(|&i| grading.weights()[i]).sum();
                p.monomials()
                    .map(move |m| grading.monomial_degree(m).expect("matching lengths") + extra)
            })
            .max()
    }

    /// Renders e.g. `x`, `y*dz`, `-dx∧dw + 2*x*y*dz∧dw`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(idx, p)| {
                if idx.is_empty() {
                    return p.to_string_with(names);
                }
                let basis: Vec<String> = idx.iter().map(|&i| format!("d{}", names[i])).collect();
                let basis = basis.join("∧");
                let c = p.to_string_with(names);
                if c == "1" {
                    basis
                } else if p.num_terms() == 1 && !c.starts_with('-') {
                    format!("{c}*{basis}")
                } else {
                    format!("({c})*{basis}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// `Σ_i c_i ∂_i` with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyVectorField {
    components: Vec<Polynomial>,
}

impl PolyVectorField {
    pub fn new(components: Vec<Polynomial>) -> Self {
        PolyVectorField { components }
    }

    pub fn zero(nvars: usize) -> Self {
        PolyVectorField {
            components: vec![Polynomial::zero(nvars); nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Derivation applied to a polynomial.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(p.nvars());
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = &out + &(c * &p.partial_derivative(i).expect("index in range"));
        }
        out
    }

    pub fn add(&self, other: &PolyVectorField) -> PolyVectorField {
        PolyVectorField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> PolyVectorField {
        PolyVectorField {
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// First-order operator descriptor: `(coefficient, variable index)` pairs,
    /// zero components omitted.
    pub fn operator_terms(&self) -> Vec<(Polynomial, usize)> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i))
            .collect()
    }

    /// `(-3*z^2)*dy + (3*y^2)*dz`, where `dv` stands for `∂/∂v`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        let terms = self.operator_terms();
        if terms.is_empty() {
            return "0".into();
        }
        terms
            .iter()
            .map(|(c, i)| format!("({})*d{}", c.to_string_with(names), names[*i]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `ξ_α = (∂_1 ∧ … ∧ ∂_n)(dα ∧ df)` for an `(n−3)`-form `α`.
pub fn xi_field(alpha: &PolyForm, f: &Polynomial) -> Result<PolyVectorField, FormError> {
    let n = f.nvars();
    if n < 3 {
        return Err(FormError::TooFewVariables(n));
    }
    if alpha.nvars() != n {
        return Err(FormError::NvarsMismatch {
            left: alpha.nvars(),
            right: n,
        });
    }
    if alpha.degree() != n - 3 {
        return Err(FormError::DegreeMismatch {
            expected: n - 3,
            found: alpha.degree(),
        });
    }
    let omega = alpha.d().wedge(&PolyForm::function(f.clone()).d());
    let components = (0..n)
        .map(|i| {
            let idx: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let c = omega.coefficient(&idx);
            if i % 2 == 1 {
                -&c
            } else {
                c
            }
        })
        .collect();
    Ok(PolyVectorField { components })
}

/// `{α, β} = L_{ξ_α} β`. For `n = 3` this is the function `ξ_α(β)`.
pub fn bracket(alpha: &PolyForm, beta: &PolyForm, f: &Polynomial) -> Result<PolyForm, FormError> {
    let n = f.nvars();
    if beta.degree() + 3 != n {
        return Err(FormError::DegreeMismatch {
            expected: n.saturating_sub(3),
            found: beta.degree(),
        });
    }
    let xi = xi_field(alpha, f)?;
    Ok(beta.lie_derivative(&xi))
}

/// Monomials in `nvars` variables of weighted degree at most `bound`, in
/// increasing (degree, grlex) order.
pub fn monomials_up_to(weights: &[u64], bound: u64) -> Vec<Monomial> {
    fn rec(weights: &[u64], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        let mut e = 0u32;
        loop {
            cur.push(e);
            rec(weights, i + 1, left - e as u64 * weights[i], cur, out);
            cur.pop();
            e += 1;
            if e as u64 * weights[i] > left {
                break;
            }
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, bound, &mut Vec::new(), &mut out);
    let deg = |m: &Monomial| -> u64 { m.exponents().iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum() };
    out.sort_by(|a, b| deg(a).cmp(&deg(b)).then_with(|| b.cmp(a)));
    out
}

/// Monomial `k`-forms `x^a dx_I` of weighted degree at most `bound`.
pub fn monomial_forms(grading: &Grading, k: usize, bound: u64) -> Vec<PolyForm> {
    let n = grading.nvars();
    let mut out = Vec::new();
    for idx in increasing_tuples(n, k) {
        let extra: u64 = idx.iter().map(|&i| grading.weights()[i]).sum();
        if extra > bound {
            continue;
        }
        for m in monomials_up_to(grading.weights(), bound - extra) {
            out.push((grading.monomial_degree(&m).expect("lengths") + extra, idx.clone(), m));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)).then_with(|| b.2.cmp(&a.2)));
    out.into_iter()
        .map(|(_, idx, m)| PolyForm::basic(Polynomial::term(m, BigRational::one()), &idx))
        .collect()
}

fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// A generator of the left ideal presenting `M(f) = D / (D f + D ξ(Ω^{n−3}))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MfGenerator {
    /// Multiplication by `f`.
    Function(Polynomial),
    /// The first-order operator `ξ_α`.
    Field { form: PolyForm, field: PolyVectorField },
}

impl MfGenerator {
    /// One line of the plain-text generator format.
    pub fn to_line(&self, names: &[String]) -> String {
        match self {
            MfGenerator::Function(f) => format!("f: {}", f.to_string_with(names)),
            MfGenerator::Field { form, field } => {
                format!("xi[{}]: {}", form.to_string_with(names), field.to_string_with(names))
            }
        }
    }
}

/// `f` together with `ξ_α` for every monomial `(n−3)`-form `α` of weighted
/// degree at most `degree_bound`; zero fields are omitted.
pub fn mf_generators(f: &Polynomial, grading: &Grading, degree_bound: u64) -> Result<Vec<MfGenerator>, FormError> {
    let n = f.nvars();
    if n < 3 {
        return Err(FormError::TooFewVariables(n));
    }
    let mut out = vec![MfGenerator::Function(f.clone())];
    for form in monomial_forms(grading, n - 3, degree_bound) {
        let field = xi_field(&form, f)?;
        if !field.is_zero() {
            out.push(MfGenerator::Field { form, field });
        }
    }
    Ok(out)
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&crate::poly::default_names(self.nvars())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::find_weights;
    use crate::poly::{default_names, parse_polynomial};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, &default_names(n)).unwrap()
    }

    fn fun(s: &str) -> PolyForm {
        PolyForm::function(p(s, 3))
    }

    #[test]
    fn xi_of_x_on_fermat_cubic() {
        let f = p("x^3+y^3+z^3", 3);
        let xi = xi_field(&fun("x"), &f).unwrap();
        assert_eq!(xi.components(), &[Polynomial::zero(3), p("-3*z^2", 3), p("3*y^2", 3)]);
        assert!(xi.apply(&f).is_zero());
        assert_eq!(xi.to_string(), "(-3*z^2)*dy + (3*y^2)*dz");
    }

    #[test]
    fn xi_of_constant_is_zero_and_linear() {
        let f = p("x^3+y^3+z^3 + x*y*z", 3);
        assert!(xi_field(&fun("1"), &f).unwrap().is_zero());
        let sum = xi_field(&fun("x+y"), &f).unwrap();
        let parts = xi_field(&fun("x"), &f).unwrap().add(&xi_field(&fun("y"), &f).unwrap());
        assert_eq!(sum, parts);
    }

    #[test]
    fn xi_degree_checks() {
        let f = p("x^2+y^2+z^2", 3);
        let one_form = PolyForm::basic(Polynomial::one(3), &[0]);
        assert_eq!(
            xi_field(&one_form, &f),
            Err(FormError::DegreeMismatch { expected: 0, found: 1 })
        );
        let g = p("x^2+y^2", 2);
        assert_eq!(
            xi_field(&PolyForm::function(Polynomial::one(2)), &g),
            Err(FormError::TooFewVariables(2))
        );
    }

    #[test]
    fn bracket_examples() {
        let f = p("x^3+y^3+z^3", 3);
        let b = bracket(&fun("x"), &fun("y"), &f).unwrap();
        assert_eq!(b.as_function(), p("-3*z^2", 3));
        assert!(bracket(&fun("x*y + z"), &fun("x*y + z"), &f).unwrap().is_zero());
        assert!(bracket(&fun("1"), &fun("x^2*z"), &f).unwrap().is_zero());
    }

    #[test]
    fn four_variable_field_is_tangent() {
        let f = p("x^2+y^2+z^2+w^2", 4);
        let alpha = PolyForm::basic(p("x", 4), &[1]);
        let xi = xi_field(&alpha, &f).unwrap();
        // dα ∧ df = dx∧dy∧(2z dz + 2w dw)
        assert_eq!(
            xi.components(),
            &[Polynomial::zero(4), Polynomial::zero(4), p("2*w", 4), p("-2*z", 4)]
        );
        assert!(xi.apply(&f).is_zero());
    }

    #[test]
    fn form_algebra() {
        let a = PolyForm::basic(p("x", 3), &[0]);
        let b = PolyForm::basic(p("y", 3), &[1]);
        assert_eq!(a.wedge(&b), b.wedge(&a).scale(&-BigRational::one()));
        assert!(a.wedge(&a).is_zero());
        // d∘d = 0
        assert!(fun("x^2*y + z^3").d().d().is_zero());
        let swapped = PolyForm::basic(Polynomial::one(3), &[2, 0]);
        assert_eq!(swapped.coefficient(&[0, 2]), p("-1", 3));
        assert!(PolyForm::basic(Polynomial::one(3), &[1, 1]).is_zero());
    }

    #[test]
    fn generators_for_small_bounds() {
        let f = p("x^2+y^2+z^2", 3);
        let g = find_weights(&f).unwrap();
        assert_eq!(
            mf_generators(&f, &g, 0).unwrap(),
            vec![MfGenerator::Function(f.clone())]
        );

        let f = p("x^3+y^3+z^3", 3);
        let g = find_weights(&f).unwrap();
        let gens = mf_generators(&f, &g, 1).unwrap();
        let names = default_names(3);
        let lines: Vec<String> = gens.iter().map(|m| m.to_line(&names)).collect();
        assert_eq!(
            lines,
            vec![
                "f: x^3 + y^3 + z^3",
                "xi[x]: (-3*z^2)*dy + (3*y^2)*dz",
                "xi[y]: (3*z^2)*dx + (-3*x^2)*dz",
                "xi[z]: (-3*y^2)*dx + (3*x^2)*dy",
            ]
        );
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_up_to(&[1, 1, 1], 2);
        assert_eq!(ms.len(), 10);
        assert!(ms[0].is_one());
        let g = Grading::standard(4, 2);
        // 1-forms x^a dx_i with |a| + 1 <= 1: the four dx_i
        assert_eq!(monomial_forms(&g, 1, 1).len(), 4);
        assert_eq!(monomial_forms(&g, 1, 2).len(), 4 + 16);
    }
}
