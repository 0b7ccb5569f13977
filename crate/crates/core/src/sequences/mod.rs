//! Definition-based term generators for the built-in sequences, their
//! annihilators, and a recurrence guesser.

mod guess;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::operator::ShiftOperator;
use crate::poly::{parse_poly, Field, FieldElement, Poly};

pub use guess::{guess_annihilator, nullspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `A_n = sum_k C(n,k)^2 C(n+k,k)^2`.
    Apery,
    /// `(-1)^n A_n`.
    AperySigned,
    /// Central Delannoy numbers `D_n = D_n(1)`.
    DelannoyNumber,
    /// Central Delannoy polynomials `D_n(z) = sum_i C(n,i) C(n+i,i) z^i`.
    DelannoyPoly,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Apery,
        Family::AperySigned,
        Family::DelannoyNumber,
        Family::DelannoyPoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Apery => "apery",
            Family::AperySigned => "apery_signed",
            Family::DelannoyNumber => "delannoy_number",
            Family::DelannoyPoly => "delannoy_poly",
        }
    }

    pub fn is_apery(self) -> bool {
        matches!(self, Family::Apery | Family::AperySigned)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// `[A_0, ..., A_{n-1}]` by the double binomial sum.
pub fn apery_terms(n: usize) -> Vec<BigInt> {
    (0..n as u64)
        .map(|m| {
            // running C(m, j) and C(m + j, j)
            let mut c1 = BigInt::one();
            let mut c2 = BigInt::one();
            let mut acc = BigInt::zero();
            for j in 0..=m {
                let t = &c1 * &c2;
                acc += &t * &t;
                c1 = c1 * (m - j) / (j + 1);
                c2 = c2 * (m + j + 1) / (j + 1);
            }
            acc
        })
        .collect()
}

/// `[(-1)^k A_k]`.
pub fn apery_signed_terms(n: usize) -> Vec<BigInt> {
    apery_terms(n)
        .into_iter()
        .enumerate()
        .map(|(k, a)| if k % 2 == 1 { -a } else { a })
        .collect()
}

/// Coefficients of `z^i` in `D_k(z)`.
pub fn delannoy_coefficients(k: u64) -> Vec<BigInt> {
    let mut c1 = BigInt::one();
    let mut c2 = BigInt::one();
    let mut out = Vec::with_capacity(k as usize + 1);
    for i in 0..=k {
        out.push(&c1 * &c2);
        c1 = c1 * (k - i) / (i + 1);
        c2 = c2 * (k + i + 1) / (i + 1);
    }
    out
}

/// `[D_0(z0), ..., D_{n-1}(z0)]` for an integer `z0`.
pub fn delannoy_int_terms(n: usize, z: &BigInt) -> Vec<BigInt> {
    (0..n as u64)
        .map(|k| {
            delannoy_coefficients(k)
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * z + c)
        })
        .collect()
}

/// `[D_0(z), ..., D_{n-1}(z)]` for a rational or symbolic `z`.
pub fn delannoy_poly_terms(n: usize, z: &FieldElement) -> Vec<FieldElement> {
    (0..n as u64)
        .map(|k| {
            delannoy_coefficients(k)
                .into_iter()
                .rev()
                .fold(FieldElement::zero(), |acc, c| {
                    acc * z + &FieldElement::from(c)
                })
        })
        .collect()
}

fn op(srcs: &[&str]) -> ShiftOperator {
    ShiftOperator::new(
        srcs.iter()
            .map(|s| parse_poly(s).expect("built-in coefficient"))
            .collect(),
    )
    .expect("built-in operator")
}

/// `(k+2)^3 σ^2 - (2k+3)(17k^2+51k+39) σ + (k+1)^3`.
pub fn apery_operator() -> ShiftOperator {
    op(&["(k+1)^3", "-(2*k+3)*(17*k^2+51*k+39)", "(k+2)^3"])
}

/// Annihilator of `(-1)^k A_k`: the middle coefficient changes sign.
pub fn apery_signed_operator() -> ShiftOperator {
    op(&["(k+1)^3", "(2*k+3)*(17*k^2+51*k+39)", "(k+2)^3"])
}

/// `(k+2) σ^2 - (2k+3)(2z+1) σ + (k+1)` at the given `z`.
pub fn delannoy_operator(z: &FieldElement) -> ShiftOperator {
    let middle = Poly::linear(FieldElement::from(3) / &FieldElement::from(2))
        .scale(&(FieldElement::from(-2) * &(FieldElement::from(2) * z + &FieldElement::one())));
    ShiftOperator::new(vec![
        parse_poly("k+1").unwrap(),
        middle,
        parse_poly("k+2").unwrap(),
    ])
    .expect("built-in operator")
}

/// A named sequence with its definition-based generator and annihilator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFamily {
    pub family: Family,
    /// The value of `z` for the Delannoy families.
    pub parameter: Option<FieldElement>,
    pub annihilator: ShiftOperator,
}

impl SequenceFamily {
    pub fn terms(&self, n: usize) -> Vec<FieldElement> {
        match self.family {
            Family::Apery => apery_terms(n).into_iter().map(FieldElement::from).collect(),
            Family::AperySigned => apery_signed_terms(n)
                .into_iter()
                .map(FieldElement::from)
                .collect(),
            Family::DelannoyNumber | Family::DelannoyPoly => {
                delannoy_poly_terms(n, self.parameter.as_ref().expect("delannoy parameter"))
            }
        }
    }
}

/// Looks up a family by name. `parameter` is `z` for `delannoy_poly`
/// (symbolic when absent) and ignored otherwise.
pub fn builtin(name: &str, parameter: Option<FieldElement>) -> Result<SequenceFamily> {
    let family: Family = name.parse()?;
    Ok(builtin_family(family, parameter))
}

pub fn builtin_family(family: Family, parameter: Option<FieldElement>) -> SequenceFamily {
    let (parameter, annihilator) = match family {
        Family::Apery => (None, apery_operator()),
        Family::AperySigned => (None, apery_signed_operator()),
        Family::DelannoyNumber => {
            let one = FieldElement::one();
            let l = delannoy_operator(&one);
            (Some(one), l)
        }
        Family::DelannoyPoly => {
            let z = parameter.unwrap_or_else(FieldElement::z);
            let l = delannoy_operator(&z);
            (Some(z), l)
        }
    };
    SequenceFamily {
        family,
        parameter,
        annihilator,
    }
}
