//! Polynomial reduction modulo the difference space `{L*(x)}`, detection of a
//! symmetry center `γ`, and the parity-preserving reduction of powers of
//! `(k - γ)` for power-partible operators.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::operator::{rational_roots, split_by_z, ReductionProfile, ShiftOperator};
use crate::poly::{parity_support, Field, FieldElement, Parity, Poly, Polynomial};
use crate::Rational;

/// `Q = L*(x) + sum_{s in R_L} c_s k^(d+s) + remainder`, with `deg remainder < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub x: Poly,
    /// Coefficients `c_s` of the monomials `k^(d+s)`, keyed by `s`.
    pub exceptional: BTreeMap<u64, FieldElement>,
    pub remainder: Poly,
    pub degree: i64,
}

impl ReductionResult {
    pub fn reassemble(&self, op: &ShiftOperator) -> Poly {
        let mut acc = &op.adjoint_apply(&self.x) + &self.remainder;
        for (s, c) in &self.exceptional {
            let n = (self.degree + *s as i64) as usize;
            acc = &acc + &Poly::monomial(c.clone(), n);
        }
        acc
    }

    /// True when `Q` lies in the difference space.
    pub fn is_summable(&self) -> bool {
        self.exceptional.is_empty() && self.remainder.is_zero()
    }
}

pub fn reduce(q: &Poly, op: &ShiftOperator) -> ReductionResult {
    reduce_with_profile(q, op, &op.profile())
}

pub fn reduce_with_profile(
    q: &Poly,
    op: &ShiftOperator,
    profile: &ReductionProfile,
) -> ReductionResult {
    let d = profile.degree;
    let mut rest = q.clone();
    let mut x = Poly::zero();
    let mut exceptional = BTreeMap::new();
    while let Some(deg) = rest.degree() {
        if (deg as i64) < d {
            break;
        }
        let s = (deg as i64 - d) as u64;
        let lc = rest.leading().unwrap().clone();
        if profile.roots.contains(&s) {
            rest = &rest - &Poly::monomial(lc.clone(), deg);
            exceptional.insert(s, lc);
            continue;
        }
        let image = op.adjoint_apply(&Poly::monomial(FieldElement::one(), s as usize));
        debug_assert_eq!(image.degree(), Some(deg));
        let c = lc / image.leading().unwrap();
        rest = &rest - &image.scale(&c);
        x = &x + &Poly::monomial(c, s as usize);
    }
    ReductionResult {
        x,
        exceptional,
        remainder: rest,
        degree: d,
    }
}

/// Witness that `a_i(γ + k) = (-1)^d a_{J-i}(γ - k - J)` for `i <= J/2` on a
/// nondegenerate operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartibleCertificate {
    pub gamma: FieldElement,
    pub degree: i64,
    pub order: usize,
}

fn sign_of_parity(n: i64) -> FieldElement {
    if n.rem_euclid(2) == 0 {
        FieldElement::one()
    } else {
        FieldElement::from(-1)
    }
}

/// Whether the symmetry condition holds at `gamma` for a given degree.
pub fn symmetry_holds(op: &ShiftOperator, gamma: &FieldElement, degree: i64) -> bool {
    let order = op.order();
    let sign = sign_of_parity(degree);
    let back = gamma.clone() - &FieldElement::from(order as i64);
    (0..=order / 2).all(|i| {
        let lhs = op.coeff(i).shift(gamma);
        let rhs = op.coeff(order - i).shift(&back).reflect().scale(&sign);
        lhs == rhs
    })
}

impl PartibleCertificate {
    pub fn holds_for(&self, op: &ShiftOperator) -> bool {
        if op.order() != self.order {
            return false;
        }
        let profile = op.profile();
        profile.nondegenerate
            && profile.degree == self.degree
            && symmetry_holds(op, &self.gamma, self.degree)
    }
}

/// All `γ` in the coefficient field satisfying the symmetry condition.
///
/// Each condition is expanded in powers of `k`; the coefficients are
/// polynomials in `γ` whose common roots are the candidates. When every
/// constraint vanishes identically any `γ` works and `0` is returned.
pub fn find_gamma(op: &ShiftOperator) -> Vec<FieldElement> {
    find_gamma_with_degree(op, op.profile().degree)
}

pub fn find_gamma_with_degree(op: &ShiftOperator, degree: i64) -> Vec<FieldElement> {
    let order = op.order();
    let shift_back = FieldElement::from(-(order as i64));
    let mut constraint = Poly::zero();
    for i in 0..=order / 2 {
        let left = op.coeff(i);
        let right = op.coeff(order - i);
        let top = left.degree().max(right.degree()).unwrap_or(0);
        for t in 0..=top {
            // [k^t] a(γ + k) is the t-th Taylor coefficient of a at γ
            let lhs = left.taylor_coefficient(t);
            let rhs = right
                .taylor_coefficient(t)
                .shift(&shift_back)
                .scale(&sign_of_parity(degree + t as i64));
            constraint = constraint.gcd(&(&lhs - &rhs));
        }
    }
    if constraint.is_zero() {
        return vec![FieldElement::zero()];
    }
    field_roots(&constraint)
        .into_iter()
        .filter(|g| symmetry_holds(op, g, degree))
        .collect()
}

/// Roots in `Q` or `Q(z)` of a nonzero polynomial: every root when the
/// polynomial is linear, otherwise the roots that are constants in `z`.
fn field_roots(g: &Poly) -> Vec<FieldElement> {
    match g.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => vec![-(g.coeff(0) / &g.coeff(1))],
        Some(_) => {
            let common = split_by_z(g)
                .into_iter()
                .fold(Polynomial::<Rational>::zero(), |acc, h| acc.gcd(&h));
            if common.is_zero() {
                return Vec::new();
            }
            rational_roots(&common)
                .into_iter()
                .map(FieldElement::from)
                .collect()
        }
    }
}

/// Certificate when `op` is nondegenerate and a symmetry center exists; the
/// first center found is used.
pub fn is_partible(op: &ShiftOperator) -> Option<PartibleCertificate> {
    let profile = op.profile();
    if !profile.nondegenerate {
        return None;
    }
    let gamma = find_gamma_with_degree(op, profile.degree)
        .into_iter()
        .next()?;
    Some(PartibleCertificate {
        gamma,
        degree: profile.degree,
        order: op.order(),
    })
}

/// How the generators `x_s = α_s (k - γ + J/2)^s` are scaled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaRule {
    Unit,
    /// `α_s = 2^(s+1)`.
    PowersOfTwo,
    /// Explicit values; missing entries default to one.
    Custom(BTreeMap<usize, FieldElement>),
}

impl AlphaRule {
    pub fn alpha(&self, s: usize) -> FieldElement {
        match self {
            AlphaRule::Unit => FieldElement::one(),
            AlphaRule::PowersOfTwo => FieldElement::from(2).pow(s as u32 + 1),
            AlphaRule::Custom(m) => m.get(&s).cloned().unwrap_or_else(FieldElement::one),
        }
    }
}

/// Generator scaling plus the unit `λ` of the output basis `(λ (k - γ))^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaling {
    pub alpha: AlphaRule,
    pub unit: FieldElement,
}

impl Scaling {
    /// `α_s = 2^(s+1)` with basis `(2k - 2γ)^i` for half-integer `γ`,
    /// unit scaling otherwise.
    pub fn default_for(gamma: &FieldElement) -> Self {
        let half_integer = gamma
            .as_rational()
            .is_some_and(|g| *g.denom() == crate::BigInt::from(2));
        if half_integer {
            Scaling {
                alpha: AlphaRule::PowersOfTwo,
                unit: FieldElement::from(2),
            }
        } else {
            Scaling {
                alpha: AlphaRule::Unit,
                unit: FieldElement::one(),
            }
        }
    }
}

/// `x_s(k) = α (k - γ + J/2)^s`.
pub fn basis_generator(gamma: &FieldElement, order: usize, s: usize, alpha: &FieldElement) -> Poly {
    let half = FieldElement::from(Rational::new((order as i64).into(), 2.into()));
    Poly::linear(half - gamma).pow(s as u32).scale(alpha)
}

/// Coefficients of `L*(x_s)` in the basis `(unit · (k - γ))^i`.
pub fn expand_adjoint_basis(
    op: &ShiftOperator,
    cert: &PartibleCertificate,
    s: usize,
    alpha: &FieldElement,
    unit: &FieldElement,
) -> Vec<FieldElement> {
    let image = op.adjoint_apply(&basis_generator(&cert.gamma, cert.order, s, alpha));
    let inv = FieldElement::one() / unit;
    let mut scale = FieldElement::one();
    image
        .expand_in_center(&cert.gamma)
        .into_iter()
        .map(|c| {
            let out = c * &scale;
            scale = scale.clone() * &inv;
            out
        })
        .collect()
}

/// `(λ(k-γ))^m = sum_i u_i (λ(k-γ))^i + sum_j v_j L*(x_j)`, with `i < d` of the
/// parity of `m` and `d + j ≡ m (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartibleReduction {
    pub power: usize,
    pub gamma: FieldElement,
    pub order: usize,
    pub unit: FieldElement,
    pub u_coeffs: BTreeMap<usize, FieldElement>,
    pub v_coeffs: BTreeMap<usize, FieldElement>,
    pub alphas: BTreeMap<usize, FieldElement>,
}

impl PartibleReduction {
    /// `λ (k - γ)`.
    pub fn basis_unit_poly(&self) -> Poly {
        Poly::linear(-self.gamma.clone()).scale(&self.unit)
    }

    pub fn target(&self) -> Poly {
        self.basis_unit_poly().pow(self.power as u32)
    }

    pub fn reassemble(&self, op: &ShiftOperator) -> Poly {
        let t = self.basis_unit_poly();
        let mut acc = Poly::zero();
        for (i, u) in &self.u_coeffs {
            acc = &acc + &t.pow(*i as u32).scale(u);
        }
        for (j, v) in &self.v_coeffs {
            let x = basis_generator(&self.gamma, self.order, *j, &self.alphas[j]);
            acc = &acc + &op.adjoint_apply(&x).scale(v);
        }
        acc
    }

    /// Whether the decomposition reproduces the target exactly.
    pub fn verify(&self, op: &ShiftOperator) -> bool {
        self.reassemble(op) == self.target()
    }
}

pub fn partible_reduce(
    m: usize,
    op: &ShiftOperator,
    cert: &PartibleCertificate,
    scaling: &Scaling,
) -> Result<PartibleReduction> {
    if !cert.holds_for(op) {
        return Err(Error::NotPartible(format!(
            "certificate with gamma = {} does not hold for the operator",
            cert.gamma
        )));
    }
    let d = cert.degree;
    let mut cur = vec![FieldElement::zero(); m + 1];
    cur[m] = FieldElement::one();
    let mut v_coeffs = BTreeMap::new();
    let mut alphas = BTreeMap::new();
    if m as i64 >= d {
        let top = (m as i64 - d) as usize;
        for j in (0..=top).rev().step_by(2) {
            let alpha = scaling.alpha.alpha(j);
            let image = expand_adjoint_basis(op, cert, j, &alpha, &scaling.unit);
            let lead = (d + j as i64) as usize;
            if image.len() != lead + 1 || parity_support(&image) != Parity::of(lead as i64) {
                return Err(Error::NotPartible(format!(
                    "image of x_{j} breaks the parity structure"
                )));
            }
            let v = cur[lead].clone() / &image[lead];
            for (i, c) in image.iter().enumerate() {
                cur[i] = cur[i].clone() - &(v.clone() * c);
            }
            v_coeffs.insert(j, v);
            alphas.insert(j, alpha);
        }
    }
    let mut u_coeffs = BTreeMap::new();
    for (i, c) in cur.into_iter().enumerate() {
        let keep = (i as i64) < d && (i + m).is_multiple_of(2);
        if keep {
            u_coeffs.insert(i, c);
        } else if !c.is_zero() {
            return Err(Error::NotPartible(format!("nonzero residual at power {i}")));
        }
    }
    for i in (m % 2..d.max(0) as usize).step_by(2) {
        u_coeffs.entry(i).or_insert_with(FieldElement::zero);
    }
    Ok(PartibleReduction {
        power: m,
        gamma: cert.gamma.clone(),
        order: op.order(),
        unit: scaling.unit.clone(),
        u_coeffs,
        v_coeffs,
        alphas,
    })
}
