//! Polynomial reduction for holonomic sequences, power-partible reduction,
//! and congruence families for Apéry numbers and central Delannoy
//! polynomials, all in exact arithmetic.

pub mod arith;
pub mod congruence;
pub mod error;
pub mod operator;
pub mod poly;
pub mod reduction;
pub mod sequences;

pub use arith::{BigInt, Rational, Residue, Valuation};
pub use congruence::{
    derive_constant, derive_constants, integrality_check, sweep, verify, CongruenceReport,
    ConstantTable,
};
pub use error::{Error, Result};
pub use operator::{Certificate, OperatorFile, ReductionProfile, ShiftOperator};
pub use poly::{Field, FieldElement, Poly, Polynomial, RatFunc};
pub use reduction::{
    find_gamma, is_partible, partible_reduce, reduce, AlphaRule, PartibleCertificate,
    PartibleReduction, ReductionResult, Scaling,
};
pub use sequences::{builtin, guess_annihilator, Family, SequenceFamily};
