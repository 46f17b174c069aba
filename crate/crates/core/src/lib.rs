//! Exact-arithmetic library deciding whether a polynomial parametrization
//! t -> (f_1(t), ..., f_n(t)) of an affine curve is a birational equivalence
//! onto its image, and whether it is an isomorphism.
//!
//! The engine forms the divided differences g_i(s,t) = (f_i(t) - f_i(s))/(t - s),
//! computes the reduced Groebner basis of the ideal they span in k[s,t], and
//! reads both answers off the basis: {1} means isomorphism, a zero-dimensional
//! staircase means birational. Coefficients are exact rationals or prime-field
//! residues; there is no floating point anywhere.
//!
//! All values are immutable after construction and safe to share across
//! threads; every operation builds new values.

pub mod coeff;
pub mod decide;
pub mod groebner;
pub mod parse;
pub mod poly;

pub use coeff::{make_prime_field, CoeffError, Field, FieldSpec, PrimeField, Rationals};
pub use decide::{
    abhyankar_moh_check, check_preconditions, classify, is_birational, is_isomorphism, AmCheck,
    Classification, DecideError, Precondition, ProblemInstance, Verdict,
};
pub use groebner::{
    buchberger, normal_form, reduce_basis, reduced_groebner_basis, s_polynomial,
    staircase_dimension, GroebnerBasis, GroebnerError, IdealSpec, Staircase,
};
pub use parse::{
    format_bipoly, format_unipoly, integer_primitive, integer_primitive_uni, parse_poly, ParseError,
};
pub use poly::{
    bivariate_gcd, divided_difference, substitute_diagonal, BiPoly, Monomial, OrderKind, PolyError,
    TermOrder, UniPoly, Var,
};
