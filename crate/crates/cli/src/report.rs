//! Text and JSON renderings. Every collection is iterated in a fixed order so
//! identical requests give byte-identical output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use qhinv_core::checks::CheckOutcome;
use qhinv_core::poly::fmt_rational;
use qhinv_core::{Analysis, MfGenerator};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::request::Request;

/// A rational serialized as `[numerator, denominator]`.
pub struct Rat<'a>(pub &'a BigRational);

fn big<S: SerializeSeq>(seq: &mut S, n: &BigInt) -> Result<(), S::Error> {
    match n.to_i64() {
        Some(v) => seq.serialize_element(&v),
        None => seq.serialize_element(&n.to_string()),
    }
}

impl Serialize for Rat<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        big(&mut seq, self.0.numer())?;
        big(&mut seq, self.0.denom())?;
        seq.end()
    }
}

/// `[numerator, denominator, multiplicity]`.
struct RootTriple<'a>(&'a BigRational, u32);

impl Serialize for RootTriple<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        big(&mut seq, self.0.numer())?;
        big(&mut seq, self.0.denom())?;
        seq.serialize_element(&self.1)?;
        seq.end()
    }
}

#[derive(Serialize)]
struct Provenance<'a> {
    tool: &'static str,
    version: &'static str,
    input: &'a str,
    variables: &'a [String],
    weights_override: Option<&'a [u64]>,
    grading: GradingDoc<'a>,
}

#[derive(Serialize)]
struct GradingDoc<'a> {
    weights: &'a [u64],
    degree: u64,
}

fn provenance(req: &Request) -> Provenance<'_> {
    Provenance {
        tool: "qhinv",
        version: env!("CARGO_PKG_VERSION"),
        input: &req.text,
        variables: &req.names,
        weights_override: req.weights_override.as_deref(),
        grading: GradingDoc {
            weights: req.analysis.grading.weights(),
            degree: req.analysis.grading.degree(),
        },
    }
}

#[derive(Serialize)]
struct LengthRow<'a> {
    lambda: Rat<'a>,
    length: u64,
}

#[derive(Serialize)]
struct SpectrumRow<'a> {
    alpha: Rat<'a>,
    j: i64,
    beta: Rat<'a>,
    dim: u64,
}

#[derive(Serialize)]
struct Kernels {
    p: u64,
    q_minus_one: u64,
    pi: u64,
}

#[derive(Serialize)]
struct Structure {
    delta_summand: u64,
    bottom_delta: u64,
    top_delta: u64,
}

#[derive(Serialize)]
struct AnalysisDoc<'a> {
    provenance: Provenance<'a>,
    mu: u64,
    genus: u64,
    h: u64,
    socle_degree: u64,
    hilbert: Vec<[u64; 2]>,
    b_roots: Vec<RootTriple<'a>>,
    lengths: Vec<LengthRow<'a>>,
    len_ds: u64,
    len_mf: u64,
    len_h1f: u64,
    kernels: Kernels,
    generated_by_inverse: bool,
    structure: Structure,
    spectrum: Vec<SpectrumRow<'a>>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("report serializes") + "\n"
}

fn b_roots(a: &Analysis) -> Vec<RootTriple<'_>> {
    a.bfunction
        .roots()
        .iter()
        .map(|r| RootTriple(&r.root, r.multiplicity))
        .collect()
}

fn length_rows<'a>(rows: &'a [(BigRational, u64)]) -> Vec<LengthRow<'a>> {
    rows.iter()
        .map(|(l, n)| LengthRow {
            lambda: Rat(l),
            length: *n,
        })
        .collect()
}

fn alphas(a: &Analysis) -> Vec<BigRational> {
    a.spectrum.iter().map(|e| -e.lambda()).collect()
}

fn spectrum_rows<'a>(a: &'a Analysis, alphas: &'a [BigRational]) -> Vec<SpectrumRow<'a>> {
    a.spectrum
        .iter()
        .zip(alphas)
        .map(|(e, alpha)| SpectrumRow {
            alpha: Rat(alpha),
            j: e.j,
            beta: Rat(&e.beta),
            dim: e.dim,
        })
        .collect()
}

fn header(req: &Request, out: &mut String) {
    let a = &req.analysis;
    let w: Vec<String> = a.grading.weights().iter().map(u64::to_string).collect();
    out.push_str(&format!("f = {}\n", a.polynomial.to_string_with(&req.names)));
    out.push_str(&format!("variables: {}\n", req.names.join(", ")));
    out.push_str(&format!("weights: ({}), degree {}\n", w.join(", "), a.grading.degree()));
}

fn socle(a: &Analysis) -> u64 {
    a.grading
        .socle_degree()
        .expect("isolated singularity has a socle degree")
}

pub fn analyze(req: &Request, json: bool) -> String {
    let a = &req.analysis;
    let rows = a.root_lengths();
    if json {
        let al = alphas(a);
        let doc = AnalysisDoc {
            provenance: provenance(req),
            mu: a.mu(),
            genus: a.genus,
            h: a.h,
            socle_degree: socle(a),
            hilbert: a.jacobi.hilbert().iter().map(|(&k, &v)| [k, v]).collect(),
            b_roots: b_roots(a),
            lengths: length_rows(&rows),
            len_ds: a.lengths.len_ds,
            len_mf: a.lengths.len_mf,
            len_h1f: a.lengths.len_h1f,
            kernels: Kernels {
                p: a.lengths.ker_p,
                q_minus_one: a.lengths.ker_q_minus_one,
                pi: a.lengths.ker_pi,
            },
            generated_by_inverse: a.lengths.generated_by_inverse,
            structure: Structure {
                delta_summand: a.structure.delta_summand,
                bottom_delta: a.structure.bottom_delta,
                top_delta: a.structure.top_delta,
            },
            spectrum: spectrum_rows(a, &al),
        };
        return to_json(&doc);
    }
    let mut out = String::new();
    header(req, &mut out);
    let hilbert: Vec<String> = a.jacobi.hilbert().iter().map(|(k, v)| format!("{k}:{v}")).collect();
    out.push_str(&format!("milnor number mu: {}\n", a.mu()));
    out.push_str(&format!("jacobi ring dimensions: {}\n", hilbert.join(" ")));
    out.push_str(&format!("socle degree: {}\n", socle(a)));
    out.push_str(&format!("reduced genus g: {}\n", a.genus));
    out.push_str(&format!("link cohomology h: {}\n", a.h));
    out.push_str(&format!("b-function: {}\n", a.bfunction));
    out.push_str("lengths of D f^λ / D f^(λ+1) at the roots:\n");
    for (l, n) in &rows {
        out.push_str(&format!("  λ = {}: {n}\n", fmt_rational(l)));
    }
    out.push_str(&format!("len D[s]f^s / D[s]f^(s+1): {}\n", a.lengths.len_ds));
    out.push_str(&format!("len M(f): {}\n", a.lengths.len_mf));
    out.push_str(&format!("len H^1_f(O): {}\n", a.lengths.len_h1f));
    out.push_str(&format!(
        "kernels: p {}, q_-1 {}, pi {}\n",
        a.lengths.ker_p, a.lengths.ker_q_minus_one, a.lengths.ker_pi
    ));
    let yes_no = if a.lengths.generated_by_inverse { "yes" } else { "no" };
    out.push_str(&format!("O[1/f] generated by 1/f: {yes_no}\n"));
    out.push_str(&format!("structure: {}\n", a.structure));
    out.push_str("spectrum:\n");
    spectrum_text(a, &mut out);
    out
}

fn spectrum_text(a: &Analysis, out: &mut String) {
    out.push_str(&format!("  {:>8} {:>4} {:>8} {:>5}\n", "alpha", "j", "beta", "dim"));
    for (e, alpha) in a.spectrum.iter().zip(alphas(a)) {
        out.push_str(&format!(
            "  {:>8} {:>4} {:>8} {:>5}\n",
            fmt_rational(&alpha),
            e.j,
            fmt_rational(&e.beta),
            e.dim
        ));
    }
}

pub fn lengths(req: &Request, rows: &[(BigRational, u64)], json: bool) -> String {
    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            provenance: Provenance<'a>,
            lengths: Vec<LengthRow<'a>>,
            len_ds: u64,
        }
        return to_json(&Doc {
            provenance: provenance(req),
            lengths: length_rows(rows),
            len_ds: req.analysis.lengths.len_ds,
        });
    }
    let mut out = String::new();
    for (l, n) in rows {
        out.push_str(&format!("{}\t{n}\n", fmt_rational(l)));
    }
    out
}

pub fn bfunction(req: &Request, json: bool) -> String {
    let a = &req.analysis;
    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            provenance: Provenance<'a>,
            b_roots: Vec<RootTriple<'a>>,
            degree: u32,
        }
        return to_json(&Doc {
            provenance: provenance(req),
            b_roots: b_roots(a),
            degree: a.bfunction.degree(),
        });
    }
    format!("b(s) = {}\n", a.bfunction)
}

pub fn spectrum(req: &Request, json: bool) -> String {
    let a = &req.analysis;
    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            provenance: Provenance<'a>,
            mu: u64,
            spectrum: Vec<SpectrumRow<'a>>,
        }
        let al = alphas(a);
        return to_json(&Doc {
            provenance: provenance(req),
            mu: a.mu(),
            spectrum: spectrum_rows(a, &al),
        });
    }
    let mut out = String::new();
    spectrum_text(a, &mut out);
    out
}

pub fn hamiltonian(req: &Request, gens: &[MfGenerator], bound: u64, json: bool) -> String {
    if json {
        #[derive(Serialize)]
        struct Gen {
            form: Option<String>,
            operator: String,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            provenance: Provenance<'a>,
            degree_bound: u64,
            truncated: bool,
            generators: Vec<Gen>,
        }
        let generators = gens
            .iter()
            .map(|g| match g {
                MfGenerator::Function(f) => Gen {
                    form: None,
                    operator: f.to_string_with(&req.names),
                },
                MfGenerator::Field { form, field } => Gen {
                    form: Some(form.to_string_with(&req.names)),
                    operator: field.to_string_with(&req.names),
                },
            })
            .collect();
        return to_json(&Doc {
            provenance: provenance(req),
            degree_bound: bound,
            truncated: true,
            generators,
        });
    }
    let mut out = format!("# truncated: forms of weighted degree <= {bound}\n");
    for g in gens {
        out.push_str(&g.to_line(&req.names));
        out.push('\n');
    }
    out
}

pub fn checks(req: &Request, outcomes: &[CheckOutcome], json: bool) -> String {
    let passed = outcomes.iter().filter(|c| c.passed).count();
    if json {
        #[derive(Serialize)]
        struct Row<'a> {
            name: &'a str,
            passed: bool,
            detail: &'a str,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            provenance: Provenance<'a>,
            all_passed: bool,
            checks: Vec<Row<'a>>,
        }
        let checks = outcomes
            .iter()
            .map(|c| Row {
                name: c.name,
                passed: c.passed,
                detail: &c.detail,
            })
            .collect();
        return to_json(&Doc {
            provenance: provenance(req),
            all_passed: passed == outcomes.len(),
            checks,
        });
    }
    let mut out = String::new();
    for c in outcomes {
        out.push_str(&format!("{c}\n"));
    }
    out.push_str(&format!("{passed}/{} checks passed\n", outcomes.len()));
    out
}
