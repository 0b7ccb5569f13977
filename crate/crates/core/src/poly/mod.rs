//! Univariate polynomials in `k` over `Q` or `Q(z)`.

mod field;
mod parse;
mod polynomial;
mod ratfunc;

pub use field::{Field, FieldElement};
pub use parse::{parse_poly, parse_poly_in};
pub use polynomial::{
    falling_factorial_poly, falling_factorial_value, parity_support, Parity, Polynomial,
};
pub use ratfunc::RatFunc;

/// Polynomial in `k` with coefficients in `Q` or `Q(z)`.
pub type Poly = Polynomial<FieldElement>;
