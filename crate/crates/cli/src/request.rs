//! Turns raw command-line input into a validated analysis, mapping every
//! failure to its exit status.

use std::fmt;
use std::io::Read;

use num_rational::BigRational;
use qhinv_core::invariants::InvariantError;
use qhinv_core::poly::{detect_variables, parse_rational};
use qhinv_core::{find_weights, parse_polynomial, Analysis, Grading, GradingError, GroebnerError, GroebnerOptions};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_QUASI_HOMOGENEOUS: i32 = 2;
pub const EXIT_NON_ISOLATED: i32 = 3;
pub const EXIT_SMOOTH: i32 = 4;
pub const EXIT_CHECK_FAILED: i32 = 5;

/// A failure with its exit status and one-line diagnostic.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<GradingError> for Failure {
    fn from(e: GradingError) -> Self {
        let code = match e {
            GradingError::NotQuasiHomogeneous | GradingError::NotHomogeneousFor(_) => EXIT_NOT_QUASI_HOMOGENEOUS,
            GradingError::ZeroOrConstant | GradingError::LengthMismatch { .. } | GradingError::NonPositiveWeight => {
                EXIT_USAGE
            }
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Smooth => Failure {
                code: EXIT_SMOOTH,
                message: e.to_string(),
            },
            InvariantError::NonIsolated => Failure {
                code: EXIT_NON_ISOLATED,
                message: e.to_string(),
            },
            InvariantError::Grading(g) => g.into(),
            InvariantError::Groebner(GroebnerError::DegreeCapExceeded { degree, cap }) => Failure::usage(format!(
                "Groebner basis computation reached degree {degree}, above --max-gb-degree {cap}"
            )),
            InvariantError::Inconsistent { .. } => Failure {
                code: EXIT_CHECK_FAILED,
                message: e.to_string(),
            },
            other => Failure::usage(other.to_string()),
        }
    }
}

/// Validated request: the parsed polynomial and everything derived from it.
pub struct Request {
    pub text: String,
    pub names: Vec<String>,
    pub weights_override: Option<Vec<u64>>,
    pub analysis: Analysis,
}

pub struct RawInput<'a> {
    pub input: &'a str,
    pub vars: Option<&'a str>,
    pub weights: Option<&'a str>,
    pub max_gb_degree: u64,
}

pub fn read_input(input: &str) -> Result<String, Failure> {
    if input != "-" {
        return Ok(input.to_string());
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
    Ok(buf.trim().to_string())
}

fn parse_vars(list: &str) -> Result<Vec<String>, Failure> {
    let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
    for name in &names {
        let ok = matches!(detect_variables(name), Ok(v) if v.len() == 1 && v[0] == *name);
        if !ok {
            return Err(Failure::usage(format!("--vars: {name:?} is not a variable name")));
        }
    }
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != names.len() {
        return Err(Failure::usage("--vars: variable names must be distinct"));
    }
    Ok(names)
}

fn parse_weights(list: &str) -> Result<Vec<u64>, Failure> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Failure::usage(format!("--weights: {:?} is not a positive integer", s.trim())))
        })
        .collect()
}

pub fn parse_lambda(text: &str) -> Result<BigRational, Failure> {
    parse_rational(text).map_err(|e| Failure::usage(format!("λ {text:?} is not an exact rational: {e}")))
}

pub fn build(raw: &RawInput<'_>) -> Result<Request, Failure> {
    let text = read_input(raw.input)?;
    let names = match raw.vars {
        Some(list) => parse_vars(list)?,
        None => detect_variables(&text).map_err(|e| Failure::usage(format!("parse error: {e}")))?,
    };
    if names.is_empty() {
        return Err(Failure::usage("f is constant: no variables"));
    }
    let f = parse_polynomial(&text, &names).map_err(|e| Failure::usage(format!("parse error: {e}")))?;
    let weights_override = raw.weights.map(parse_weights).transpose()?;
    let grading = match &weights_override {
        Some(w) => {
            if w.len() != names.len() {
                return Err(Failure::usage(format!(
                    "--weights: {} weights given for {} variables",
                    w.len(),
                    names.len()
                )));
            }
            Grading::for_polynomial(&f, w)?
        }
        None => find_weights(&f)?,
    };
    let options = GroebnerOptions {
        max_degree: raw.max_gb_degree,
    };
    let analysis = Analysis::new(&f, grading, &options)?;
    Ok(Request {
        text,
        names,
        weights_override,
        analysis,
    })
}
