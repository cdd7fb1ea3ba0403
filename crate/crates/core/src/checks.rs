//! Internal identities that must hold for every valid input. A failure
//! signals a bug, not a property of the input.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::groebner::normal_form;
use crate::hamiltonian::{monomial_forms, xi_field};
use crate::invariants::{
    genus_from_jacobi, jacobian, milnor_number_from_weights, reduced_genus, spectral_number, Analysis,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn outcome(name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { name, passed, detail }
}

/// Runs every identity on `a`. Tangency is checked for monomial forms up to
/// weighted degree `tangency_bound`.
pub fn run_checks(a: &Analysis, tangency_bound: u64) -> Vec<CheckOutcome> {
    let g = &a.grading;
    let mu = a.mu();
    let mut out = Vec::new();

    let product = milnor_number_from_weights(g);
    out.push(outcome(
        "milnor-product",
        product == Some(mu),
        format!(
            "basis count {mu}, weight product {}",
            product.map_or("not an integer".into(), |p| p.to_string())
        ),
    ));

    let symmetric = match g.socle_degree() {
        Some(sigma) => a
            .jacobi
            .hilbert()
            .iter()
            .all(|(&k, &dim)| k <= sigma && a.jacobi.dim(sigma - k) == dim),
        None => false,
    };
    let dims: Vec<String> = a.jacobi.hilbert().iter().map(|(k, v)| format!("{k}:{v}")).collect();
    out.push(outcome(
        "hilbert-symmetry",
        symmetric,
        format!("sigma {:?}, dims [{}]", g.socle_degree(), dims.join(" ")),
    ));

    let total: u64 = a.root_lengths().iter().map(|(_, l)| l).sum();
    out.push(outcome(
        "length-sum",
        total == 1 + mu && total + a.lengths.ker_p == a.lengths.len_ds,
        format!(
            "sum over roots {total}, 1+mu {}, plus ker p {} vs len_ds {}",
            1 + mu,
            a.lengths.ker_p,
            a.lengths.len_ds
        ),
    ));

    let g_count = reduced_genus(g);
    let g_jacobi = genus_from_jacobi(&a.jacobi, g);
    out.push(outcome(
        "genus-agreement",
        g_count == g_jacobi && g_count == a.genus,
        format!("monomial count {g_count}, Jacobi piece {g_jacobi}"),
    ));

    let spec_sum: u64 = a.spectrum.iter().map(|e| e.dim).sum();
    out.push(outcome(
        "spectrum-sum",
        spec_sum == mu,
        format!("{spec_sum} vs mu {mu}"),
    ));

    let integral: Vec<&BigRational> = a.bfunction.integral_roots().collect();
    let only_minus_one = integral.len() == 1 && *integral[0] == -BigRational::one();
    out.push(outcome(
        "generated-by-inverse",
        a.h >= a.genus && a.lengths.generated_by_inverse == (a.h == a.genus) && (a.h == a.genus) == only_minus_one,
        format!("h {}, g {}, integral roots {}", a.h, a.genus, integral.len()),
    ));

    let lo = -spectral_number(g.socle_degree().unwrap_or(0), g);
    let hi = -spectral_number(0, g);
    let in_range = a
        .bfunction
        .roots()
        .iter()
        .filter(|r| r.root != -BigRational::one())
        .all(|r| lo <= r.root && r.root <= hi);
    out.push(outcome(
        "root-range",
        in_range,
        format!("roots other than -1 within [{lo}, {hi}]"),
    ));

    let gb = a.jacobi.groebner_basis();
    let members = jacobian(&a.polynomial).iter().all(|p| normal_form(p, gb).is_zero());
    out.push(outcome(
        "groebner-certificate",
        members && gb.verify_s_pairs() && gb.is_reduced(),
        format!("{} generators", gb.generators().len()),
    ));

    let n = a.polynomial.nvars();
    let forms = monomial_forms(g, n - 3, tangency_bound);
    let tangent = forms.iter().all(|alpha| {
        xi_field(alpha, &a.polynomial)
            .map(|xi| xi.apply(&a.polynomial).is_zero())
            .unwrap_or(false)
    });
    out.push(outcome(
        "tangency",
        tangent,
        format!("{} monomial forms up to degree {tangency_bound}", forms.len()),
    ));

    out.push(outcome(
        "nonvanishing",
        a.check_nonvanishing(),
        format!("{} roots", a.bfunction.roots().len()),
    ));

    if n == 3 && g.weights().iter().all(|&w| w == 1) {
        out.push(outcome(
            "curve-cone-h-2g",
            a.h == 2 * a.genus,
            format!("h {}, 2g {}", a.h, 2 * a.genus),
        ));
    }

    out
}
