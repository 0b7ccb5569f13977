//! Fixtures shared by the benchmarks.

use partible_core::{BigInt, FieldElement, Poly, Polynomial, Rational};

/// `sum_{i<=n} (i+1) k^i`, a dense polynomial with integer coefficients.
pub fn dense_poly(n: usize) -> Poly {
    Polynomial::new((0..=n as i64).map(|i| FieldElement::from(i + 1)).collect())
}

pub fn as_rationals(terms: Vec<BigInt>) -> Vec<Rational> {
    terms.into_iter().map(Rational::from_integer).collect()
}
