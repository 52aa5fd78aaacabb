//! Exact multivariate polynomials, Buchberger's algorithm and ideal operations.
//!
//! Polynomials live in a [`PolyRing`] which fixes the coefficient [`Field`] and
//! the variable names. Monomials are ordered lexicographically with the first
//! ring variable largest; rings built by [`PolyRing::for_graph`] use
//! `x1 > ... > xn > y1 > ... > yn`.

mod field;
mod groebner;
mod ideal;
mod monomial;
mod monomial_ideal;
mod polynomial;
mod text;

pub use field::{Field, FieldKind, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{
    buchberger, divide, is_groebner_basis, reduce, s_polynomial, GroebnerBasis, MonomialOrder,
};
pub use ideal::{
    contains_all, ideal_equal, ideal_intersection, ideal_membership, ideal_sum, intersect_all,
    unit_ideal, MAX_INTERSECTION_VARS,
};
pub use monomial::{lex_compare, Monomial, MAX_VARS};
pub use monomial_ideal::{initial_ideal, MonomialIdeal};
pub use polynomial::{PolyRing, Polynomial};
