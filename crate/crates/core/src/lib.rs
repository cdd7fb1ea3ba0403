//! Exact computation of D-module invariants of quasi-homogeneous isolated
//! hypersurface singularities from the graded Jacobi ring.
//!
//! Pipeline: [`poly`] parses `f`, [`grading::find_weights`] detects the
//! weights, [`groebner`] computes the Jacobian ideal's standard monomials, and
//! [`invariants::Analysis`] turns the Hilbert function into the Milnor number,
//! reduced genus, b-function, module lengths, and spectrum. [`hamiltonian`]
//! builds the vector fields `ξ_α` presenting `M(f)`.

pub mod checks;
pub mod grading;
pub mod groebner;
pub mod hamiltonian;
pub mod invariants;
pub mod poly;
pub mod samples;

pub use grading::{find_weights, weighted_degree, Grading, GradingError};
pub use groebner::{
    buchberger, normal_form, standard_monomials, GroebnerBasis, GroebnerError, GroebnerOptions, MonomialOrder,
    StandardMonomialBasis, StandardMonomials,
};
pub use hamiltonian::{bracket, mf_generators, xi_field, FormError, MfGenerator, PolyForm, PolyVectorField};
pub use invariants::{Analysis, BFunction, BRoot, GradedQuotientBasis, InvariantError, SpectrumEntry};
pub use poly::{parse_polynomial, Monomial, ParseError, PolyError, Polynomial};
