//! Linear recurrence operators `L = sum a_i(k) σ^i`, their adjoints, the
//! degree invariant and indicator polynomial, and telescoping certificates.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, BigInt, Rational};
use crate::error::{Error, Result};
use crate::poly::{falling_factorial_poly, parse_poly, Field, FieldElement, Poly, Polynomial};

/// `L = a_0(k) + a_1(k) σ + ... + a_J(k) σ^J` with `a_J ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftOperator {
    coeffs: Vec<Poly>,
}

/// Degree data of an operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionProfile {
    /// `d = max_l (deg b_l - l)`; may be negative.
    pub degree: i64,
    pub b_polys: Vec<Poly>,
    /// `f(s) = sum_l [k^(d+l)] b_l(k) · s^(l falling)`.
    pub indicator: Poly,
    /// Nonnegative integer roots of the indicator.
    pub roots: BTreeSet<u64>,
    pub nondegenerate: bool,
}

/// Polynomials `u_0 .. u_{J-1}` of the telescoping certificate generated by `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub u_polys: Vec<Poly>,
}

impl ShiftOperator {
    pub fn new(coeffs: Vec<Poly>) -> Result<Self> {
        match coeffs.last() {
            Some(lead) if !lead.is_zero() => Ok(ShiftOperator { coeffs }),
            _ => Err(Error::ZeroLeadingCoefficient),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    /// True when some coefficient involves `z`.
    pub fn is_symbolic(&self) -> bool {
        self.coeffs
            .iter()
            .any(|a| a.coeffs().iter().any(|c| !c.is_rational()))
    }

    /// Specializes `z = z0`; `None` if a coefficient is undefined there or
    /// the leading coefficient vanishes.
    pub fn eval_z(&self, z0: &Rational) -> Option<ShiftOperator> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                a.coeffs()
                    .iter()
                    .map(|c| c.eval_z(z0).map(FieldElement::from))
                    .collect::<Option<Vec<_>>>()
                    .map(Polynomial::new)
            })
            .collect::<Option<Vec<_>>>()?;
        ShiftOperator::new(coeffs).ok()
    }

    /// `L*(x)(k) = sum_i a_i(k - i) x(k - i)`.
    pub fn adjoint_apply(&self, x: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            let term = (a * x).shift(&FieldElement::from(-(i as i64)));
            acc = &acc + &term;
        }
        acc
    }

    pub fn profile(&self) -> ReductionProfile {
        let order = self.order();
        let b_polys: Vec<Poly> = (0..=order)
            .map(|l| {
                (l..=order).fold(Poly::zero(), |acc, j| {
                    let shifted =
                        self.coeffs[order - j].shift(&FieldElement::from(j as i64 - order as i64));
                    let c = FieldElement::from(binomial(j as u64, l as u64));
                    &acc + &shifted.scale(&c)
                })
            })
            .collect();
        let degree = b_polys
            .iter()
            .enumerate()
            .filter_map(|(l, b)| b.degree().map(|deg| deg as i64 - l as i64))
            .max()
            .expect("a nonzero operator has a nonzero b_l");
        let indicator = b_polys
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (l, b)| {
                let c = b.coeff_signed(degree + l as i64);
                &acc + &falling_factorial_poly::<FieldElement>(l).scale(&c)
            });
        let roots = integer_roots(&indicator);
        ReductionProfile {
            degree,
            b_polys,
            nondegenerate: roots.is_empty(),
            indicator,
            roots,
        }
    }

    /// `u_i(k) = sum_{j=1}^{J-i} a_{i+j}(k - j) x(k - j)`.
    pub fn certificate(&self, x: &Poly) -> Certificate {
        let order = self.order();
        let u_polys = (0..order)
            .map(|i| {
                (1..=order - i).fold(Poly::zero(), |acc, j| {
                    let t = (&self.coeffs[i + j] * x).shift(&FieldElement::from(-(j as i64)));
                    &acc + &t
                })
            })
            .collect();
        Certificate { u_polys }
    }

    /// `L(F)(k) = sum_i a_i(k) F(k + i)`; `terms` must reach index `k + J`.
    pub fn apply_at(&self, k: usize, terms: &[FieldElement]) -> FieldElement {
        let kk = FieldElement::from(k as i64);
        self.coeffs
            .iter()
            .enumerate()
            .fold(FieldElement::zero(), |acc, (i, a)| {
                acc + &(a.eval(&kk) * &terms[k + i])
            })
    }

    /// Whether `L(F)(k) = 0` at every `k` the supplied terms reach. A list
    /// with at most `J` terms is vacuously annihilated.
    pub fn annihilates(&self, terms: &[FieldElement]) -> bool {
        let order = self.order();
        terms.len() <= order || (0..terms.len() - order).all(|k| self.apply_at(k, terms).is_zero())
    }

    /// Checks `sum_{k<n} L*(x)(k) F(k) = sum_i u_i(0) F(i) - sum_i u_i(n) F(n+i)`.
    pub fn telescope_sum_check(&self, x: &Poly, terms: &[FieldElement], n: usize) -> Result<bool> {
        let order = self.order();
        let needed = n + order;
        if terms.len() < needed {
            return Err(Error::InsufficientTerms {
                needed,
                got: terms.len(),
            });
        }
        let lhs = self.adjoint_partial_sum(x, terms, n);
        let cert = self.certificate(x);
        let boundary = |at: usize| {
            let kk = FieldElement::from(at as i64);
            cert.u_polys
                .iter()
                .enumerate()
                .fold(FieldElement::zero(), |acc, (i, u)| {
                    acc + &(u.eval(&kk) * &terms[at + i])
                })
        };
        Ok(lhs == boundary(0) - boundary(n))
    }

    /// `sum_{k<n} L*(x)(k) F(k)`.
    pub fn adjoint_partial_sum(&self, x: &Poly, terms: &[FieldElement], n: usize) -> FieldElement {
        let q = self.adjoint_apply(x);
        (0..n).fold(FieldElement::zero(), |acc, k| {
            acc + &(q.eval(&FieldElement::from(k as i64)) * &terms[k])
        })
    }

    pub fn to_file(&self) -> OperatorFile {
        OperatorFile {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|a| a.to_text("k")).collect(),
            field: if self.is_symbolic() { "Q(z)" } else { "Q" }.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("operator serializes")
    }

    pub fn from_file(file: &OperatorFile) -> Result<Self> {
        if file.field != "Q" && file.field != "Q(z)" {
            return Err(Error::InvalidOperator(format!(
                "field must be \"Q\" or \"Q(z)\", got {:?}",
                file.field
            )));
        }
        if file.coeffs.len() != file.order + 1 {
            return Err(Error::InvalidOperator(format!(
                "order {} needs {} coefficients, got {}",
                file.order,
                file.order + 1,
                file.coeffs.len()
            )));
        }
        let coeffs = file
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, src)| {
                parse_poly(src).map_err(|e| Error::InvalidOperator(format!("coefficient {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let op = ShiftOperator::new(coeffs)?;
        if file.field == "Q" && op.is_symbolic() {
            return Err(Error::InvalidOperator(
                "field is Q but a coefficient uses z".into(),
            ));
        }
        Ok(op)
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let file: OperatorFile = serde_json::from_str(src).map_err(|e| Error::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        ShiftOperator::from_file(&file)
    }
}

/// On-disk operator description. Coefficient `i` is `a_i(k)` in the
/// polynomial text syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorFile {
    pub order: usize,
    pub coeffs: Vec<String>,
    pub field: String,
}

/// Rewrites a polynomial over `Q(z)` as polynomials over `Q` whose common
/// roots are exactly the constants that are roots identically in `z`.
pub(crate) fn split_by_z(f: &Poly) -> Vec<Polynomial<Rational>> {
    if f.coeffs().iter().all(|c| c.is_rational()) {
        return vec![f.map_coeffs(|c| c.as_rational().unwrap())];
    }
    let common = f
        .coeffs()
        .iter()
        .fold(Polynomial::<Rational>::one(), |acc, c| {
            let d = c.denom_z();
            let g = acc.gcd(&d);
            (&acc * &d).div_rem(&g).0
        });
    let numerators: Vec<Polynomial<Rational>> = f
        .coeffs()
        .iter()
        .map(|c| &c.numer_z() * &common.div_rem(&c.denom_z()).0)
        .collect();
    let zdeg = numerators
        .iter()
        .filter_map(|n| n.degree())
        .max()
        .unwrap_or(0);
    (0..=zdeg)
        .map(|j| Polynomial::new(numerators.iter().map(|n| n.coeff(j)).collect()))
        .collect()
}

fn integer_content(p: &Polynomial<Rational>) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

/// Positive divisors of `n`, or `None` when `n` is too large to enumerate.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}

/// Rational roots of a nonzero polynomial over `Q`, ascending, without
/// multiplicity.
pub fn rational_roots(p: &Polynomial<Rational>) -> Vec<Rational> {
    let mut ints = integer_content(p);
    let mut roots = BTreeSet::new();
    if ints.is_empty() {
        return Vec::new();
    }
    if ints[0].is_zero() {
        roots.insert(<Rational as Zero>::zero());
        let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
        ints.drain(..lead_zeros);
    }
    let q = Polynomial::<Rational>::new(ints.iter().cloned().map(Rational::from_integer).collect());
    if q.degree().unwrap_or(0) > 0 {
        let (Some(nums), Some(dens)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return roots.into_iter().collect();
        };
        for a in &nums {
            for b in &dens {
                for cand in [
                    Rational::new(a.clone(), b.clone()),
                    Rational::new(-a.clone(), b.clone()),
                ] {
                    if Zero::is_zero(&q.eval(&cand)) {
                        roots.insert(cand);
                    }
                }
            }
        }
    }
    roots.into_iter().collect()
}

/// Nonnegative integer roots of a nonzero polynomial over `Q` or `Q(z)`;
/// over `Q(z)` a root must vanish identically in `z`.
pub fn integer_roots(f: &Poly) -> BTreeSet<u64> {
    let g = split_by_z(f)
        .into_iter()
        .fold(Polynomial::<Rational>::zero(), |acc, h| acc.gcd(&h));
    if g.is_zero() {
        return BTreeSet::new();
    }
    rational_roots(&g)
        .into_iter()
        .filter(|r| r.is_integer() && !r.is_negative())
        .filter_map(|r| r.to_integer().to_u64())
        .collect()
}
