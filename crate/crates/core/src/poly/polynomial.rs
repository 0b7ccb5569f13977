use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::split_sign;
use super::Field;
use crate::arith::binomial;

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i` and there are
/// no trailing zeros. The zero polynomial has degree `None` (minus infinity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Polynomial::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Polynomial::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, n: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = c;
        Polynomial { coeffs }
    }

    /// `x + c`.
    pub fn linear(c: F) -> Self {
        Polynomial::new(vec![c, F::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Polynomial::new(cs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`; zero outside the stored range.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficient of `x^i` for a possibly negative index.
    pub fn coeff_signed(&self, i: i64) -> F {
        if i < 0 {
            F::zero()
        } else {
            self.coeff(i as usize)
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * v + c)
    }

    /// `x -> p(x + c)`, by Taylor shift.
    pub fn shift(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let lin = Polynomial::linear(c.clone());
        let mut acc = Polynomial::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Polynomial::constant(a.clone());
        }
        acc
    }

    /// `x -> p(-x)`.
    pub fn reflect(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `x -> p(c * x)`.
    pub fn dilate(&self, c: &F) -> Self {
        let mut pw = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &pw);
            pw = pw * c;
        }
        Polynomial::new(out)
    }

    /// The coefficient of `t^j` in `p(y + t)`, as a polynomial in `y`.
    pub fn taylor_coefficient(&self, j: usize) -> Self {
        if self.coeffs.len() <= j {
            return Polynomial::zero();
        }
        Polynomial::new(
            (j..self.coeffs.len())
                .map(|n| {
                    let b = binomial(n as u64, j as u64);
                    self.coeffs[n].clone() * &F::from_rational(b.into())
                })
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        if nd < dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut q = vec![F::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = r[i + dd].clone() / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - &(c.clone() * dj);
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Polynomial::new(q), Polynomial::new(r))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&(F::one() / lc)),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Coefficients `c_i` with `p(x) = sum c_i (x - center)^i`.
    pub fn expand_in_center(&self, center: &F) -> Vec<F> {
        self.shift(center).into_coeffs()
    }

    /// Rebuilds `sum c_i (x - center)^i`.
    pub fn from_center_expansion(coeffs: &[F], center: &F) -> Self {
        Polynomial::new(coeffs.to_vec()).shift(&-center.clone())
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = match c.as_rational() {
                Some(q) => {
                    let (neg, mag) = split_sign(&q);
                    let unit = mag == F::one().as_rational().unwrap();
                    let text = if unit && n > 0 {
                        String::new()
                    } else {
                        mag.to_string()
                    };
                    (neg, text)
                }
                None => (false, format!("({})", c.to_text())),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
            if n > 0 {
                if !body.is_empty() {
                    out.push('*');
                }
                out.push_str(var);
                if n > 1 {
                    out.push('^');
                    out.push_str(&n.to_string());
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("k"))
    }
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, o: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, o: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, o: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, o: Polynomial<F>) -> Polynomial<F> { (&self).$m(&o) }
        }
        impl<'a, F: Field> $tr<&'a Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, o: &Polynomial<F>) -> Polynomial<F> { (&self).$m(o) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// Which index parities carry nonzero coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
    Zero,
}

impl Parity {
    pub fn of(n: i64) -> Parity {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

pub fn parity_support<F: Field>(coeffs: &[F]) -> Parity {
    let mut even = false;
    let mut odd = false;
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            if i % 2 == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
    }
    match (even, odd) {
        (false, false) => Parity::Zero,
        (true, false) => Parity::Even,
        (false, true) => Parity::Odd,
        (true, true) => Parity::Mixed,
    }
}

/// `s (s-1) ... (s-l+1)`; the empty product is one.
pub fn falling_factorial_value<F: Field>(s: &F, l: usize) -> F {
    (0..l).fold(F::one(), |acc, i| {
        acc * &(s.clone() - &F::from_int(i as i64))
    })
}

/// `s (s-1) ... (s-l+1)` as a polynomial in `s`.
pub fn falling_factorial_poly<F: Field>(l: usize) -> Polynomial<F> {
    (0..l).fold(Polynomial::one(), |acc, i| {
        &acc * &Polynomial::linear(F::from_int(-(i as i64)))
    })
}
