//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use num_bigint::BigInt;
use num_rational::BigRational;
use qhinv_core::hamiltonian::monomial_forms;
use qhinv_core::invariants::{milnor_number_from_weights, reduced_genus};
use qhinv_core::poly::default_names;
use qhinv_core::samples::{fermat, random_quasi_homogeneous};
use qhinv_core::{
    bracket, find_weights, parse_polynomial, xi_field, Analysis, GroebnerOptions, Monomial, PolyForm, Polynomial,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn xyz(text: &str) -> Polynomial {
    parse_polynomial(text, &default_names(3)).unwrap()
}

fn analyze(f: &Polynomial) -> Analysis {
    Analysis::new(f, find_weights(f).unwrap(), &GroebnerOptions::default()).unwrap()
}

fn qhinv(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qhinv")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn analyze_json(text: &str) -> Value {
    let (code, out, err) = qhinv(&["analyze", text, "--format", "json"]);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

/// Invariants of `Σ x_i^{a_i}` read off the monomial basis
/// `{x^e : e_i <= a_i - 2}` of its Jacobi ring, without any Gröbner basis.
struct Brieskorn {
    mu: u64,
    genus: u64,
    h: u64,
    /// Root to multiplicity.
    roots: BTreeMap<BigRational, u32>,
}

fn brieskorn(exps: &[u64]) -> Brieskorn {
    let d = exps.iter().fold(1u64, |acc, &a| num_integer::lcm(acc, a));
    let m: Vec<u64> = exps.iter().map(|a| d / a).collect();
    let sm: u64 = m.iter().sum();
    let mut dims: BTreeMap<u64, u64> = BTreeMap::new();
    let mut e = vec![0u64; exps.len()];
    loop {
        let deg: u64 = e.iter().zip(&m).map(|(x, w)| x * w).sum();
        *dims.entry(deg).or_default() += 1;
        let mut i = 0;
        while i < e.len() {
            e[i] += 1;
            if e[i] <= exps[i] - 2 {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == e.len() {
            break;
        }
    }
    // monomials of weighted degree d - Σm, counted over all exponent vectors
    let target = d.checked_sub(sm);
    let mut genus = 0;
    if let Some(t) = target {
        let mut stack = vec![(0usize, 0u64)];
        while let Some((i, acc)) = stack.pop() {
            if i == m.len() {
                genus += (acc == t) as u64;
                continue;
            }
            let mut a = acc;
            while a <= t {
                stack.push((i + 1, a));
                a += m[i];
            }
        }
    }
    let h = dims
        .iter()
        .filter(|(&k, _)| (k + sm).is_multiple_of(d))
        .map(|(_, v)| v)
        .sum();
    let mut roots: BTreeMap<BigRational, u32> = BTreeMap::new();
    for &k in dims.keys() {
        roots.insert(-rat((k + sm) as i64, d as i64), 1);
    }
    *roots.entry(rat(-1, 1)).or_insert(0) = if genus > 0 { 2 } else { 1 };
    Brieskorn {
        mu: dims.values().sum(),
        genus,
        h,
        roots,
    }
}

fn criterion_1() {
    for d in 3..=6u32 {
        let a = analyze(&fermat(3, d));
        let g = ((d - 1) * (d - 2) / 2) as u64;
        assert_eq!(a.genus, g, "genus for d = {d}");
        assert_eq!(a.length_quotient(&rat(-1, 1)), 1 + g, "length at -1 for d = {d}");
        assert_eq!(a.lengths.len_h1f, 1 + 2 * g, "len H^1_f for d = {d}");
    }
}

fn criterion_2() {
    for (text, exps, expected) in [
        ("x^2+y^2+z^2", [2, 2, 2], 2),
        ("x^3+y^3+z^3", [3, 3, 3], 11),
        ("x^4+y^4+z^4", [4, 4, 4], 34),
        ("x^2+y^3+z^5", [2, 3, 5], 9),
    ] {
        let o = brieskorn(&exps);
        assert_eq!(1 + o.mu + o.h, expected, "oracle for {text}");
        let doc = analyze_json(text);
        assert_eq!(doc["len_ds"], expected, "{text}");
        assert_eq!(doc["mu"], o.mu, "{text}");
        assert_eq!(doc["h"], o.h, "{text}");
    }
}

fn criterion_3() {
    for (text, exps, expected) in [
        ("x^3+y^3+z^3", [3, 3, 3], 1),
        ("x^4+y^4+z^4", [4, 4, 4], 3),
        ("x^2+y^3+z^5", [2, 3, 5], 0),
    ] {
        let o = brieskorn(&exps);
        assert_eq!(o.h - o.genus, expected, "oracle for {text}");
        let a = analyze(&xyz(text));
        assert_eq!(a.lengths.ker_q_minus_one, expected, "{text}");
        assert_eq!(a.lengths.ker_p, o.h, "{text}");
    }
}

fn criterion_4() {
    let cases: [(&str, Vec<(BigRational, u32)>); 2] = [
        ("x^2+y^2+z^2", vec![(rat(-1, 1), 1), (rat(-3, 2), 1)]),
        (
            "x^3+y^3+z^3",
            vec![(rat(-1, 1), 2), (rat(-4, 3), 1), (rat(-5, 3), 1), (rat(-2, 1), 1)],
        ),
    ];
    for (text, expected) in cases {
        let a = analyze(&xyz(text));
        let got: Vec<(BigRational, u32)> = a
            .bfunction
            .roots()
            .iter()
            .map(|r| (r.root.clone(), r.multiplicity))
            .collect();
        assert_eq!(got, expected, "{text}");
    }
    for (exps, text) in [([2u64, 3, 5], "x^2+y^3+z^5"), ([4, 4, 4], "x^4+y^4+z^4")] {
        let o = brieskorn(&exps);
        let a = analyze(&xyz(text));
        let got: BTreeMap<BigRational, u32> = a
            .bfunction
            .roots()
            .iter()
            .map(|r| (r.root.clone(), r.multiplicity))
            .collect();
        assert_eq!(got, o.roots, "{text}");
    }
}

fn random_inputs(count: usize, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_quasi_homogeneous(&mut rng, 3, 6, 2).0)
        .collect()
}

fn corpus() -> Vec<Polynomial> {
    ["x^2+y^2+z^2", "x^3+y^3+z^3", "x^4+y^4+z^4", "x^2+y^3+z^5"]
        .iter()
        .map(|t| xyz(t))
        .collect()
}

fn criterion_5() {
    for f in corpus().iter().chain(&random_inputs(20, 5)) {
        let a = analyze(f);
        assert!(a.check_nonvanishing(), "{f}");
        for r in a.bfunction.roots() {
            assert!(a.length_quotient(&r.root) > 0, "{f} at {}", r.root);
        }
    }
}

fn criterion_6() {
    for f in corpus().iter().chain(&random_inputs(12, 6)) {
        let a = analyze(f);
        let mu = a.mu();
        let w = a.grading.weights();
        let d = a.grading.degree();
        // μ = Π (d/m_i − 1), computed in rationals
        let product = w
            .iter()
            .fold(rat(1, 1), |acc, &m| acc * (rat(d as i64, m as i64) - rat(1, 1)));
        assert_eq!(product, rat(mu as i64, 1), "{f}");
        assert_eq!(milnor_number_from_weights(&a.grading), Some(mu));
        let sigma: u64 = w.iter().map(|&m| d - 2 * m).sum();
        for (&k, &v) in a.jacobi.hilbert() {
            assert_eq!(a.jacobi.dim(sigma - k), v, "{f}: symmetry at {k}");
        }
        let total: u64 = a.root_lengths().iter().map(|(_, l)| l).sum();
        assert_eq!(total, 1 + mu, "{f}");
        let jacobi_piece = d
            .checked_sub(a.grading.weight_sum())
            .map_or(0, |k| a.jacobi.dim(sigma - k));
        assert_eq!(a.genus, jacobi_piece, "{f}: genus via the Jacobi ring");
        assert_eq!(a.genus, reduced_genus(&a.grading));
        assert_eq!(a.spectrum.iter().map(|e| e.dim).sum::<u64>(), mu, "{f}");
    }
}

fn random_poly(rng: &mut ChaCha8Rng, terms: usize, max_exp: u32) -> Polynomial {
    let mut p = Polynomial::zero(3);
    for _ in 0..terms {
        let m = Monomial::new((0..3).map(|_| rng.gen_range(0..=max_exp)).collect());
        p = &p + &Polynomial::term(m, rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    }
    p
}

fn criterion_7() {
    let names4 = default_names(4);
    let mut samples: Vec<Polynomial> = corpus();
    samples.extend(random_inputs(4, 7));
    for text in ["x^2+y^2+z^2+w^2", "x^3+y^3+z^3+w^3", "x^2+y^3+z^3+w^4"] {
        samples.push(parse_polynomial(text, &names4).unwrap());
    }
    for f in &samples {
        let g = find_weights(f).unwrap();
        for alpha in monomial_forms(&g, f.nvars() - 3, 6) {
            assert!(xi_field(&alpha, f).unwrap().apply(f).is_zero(), "{f}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let fun = |p: &Polynomial| PolyForm::function(p.clone());
    let br = |a: &Polynomial, b: &Polynomial, f: &Polynomial| bracket(&fun(a), &fun(b), f).unwrap().as_function();
    for _ in 0..50 {
        let f = random_poly(&mut rng, 3, 3);
        let (a, b, c) = (
            random_poly(&mut rng, 3, 2),
            random_poly(&mut rng, 3, 2),
            random_poly(&mut rng, 3, 2),
        );
        assert_eq!(br(&a, &b, &f), -&br(&b, &a, &f));
        let jacobi = &(&br(&a, &br(&b, &c, &f), &f) + &br(&b, &br(&c, &a, &f), &f)) + &br(&c, &br(&a, &b, &f), &f);
        assert!(jacobi.is_zero());
    }
}

fn criterion_8() {
    for (text, code, message) in [
        ("x^2*y+z^2", 3, "non-isolated singularity"),
        ("x+y+z", 4, "smooth at origin"),
        ("x^3+y^3+z^3+x*y", 2, "not quasi-homogeneous"),
    ] {
        let (got, _, err) = qhinv(&["analyze", text]);
        assert_eq!(got, code, "{text}: {err}");
        assert!(err.contains(message), "{text}: {err}");
        assert_eq!(err.lines().count(), 1, "{text}: one-line diagnostic");
    }
}

fn main() {
    let criteria: [(&str, fn()); 8] = [
        ("1 curve cones: genus, length at -1, len H^1_f", criterion_1),
        ("2 len D[s]f^s/D[s]f^(s+1) = 1+mu+h on the corpus", criterion_2),
        ("3 ker q_-1 = h-g and ker p = h", criterion_3),
        ("4 classical b-functions", criterion_4),
        ("5 nonvanishing on corpus and 20 random inputs", criterion_5),
        ("6 property suite", criterion_6),
        ("7 tangency and bracket identities", criterion_7),
        ("8 exit-code contract", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let ok = catch_unwind(AssertUnwindSafe(check)).is_ok();
        println!("criterion {name}: {}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
