use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ratfunc::RatFunc;
use super::Polynomial;
use crate::arith::{BigInt, Rational};

/// A field of characteristic zero.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `Some` when the element lies in the prime field `Q`.
    fn as_rational(&self) -> Option<Rational>;

    /// Text form accepted back by the polynomial parser.
    fn to_text(&self) -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_text(&self) -> String {
        self.to_string()
    }
}

/// A scalar from either `Q` or `Q(z)`.
///
/// Rational functions that reduce to a constant are always stored as
/// `Rational`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldElement {
    Rational(Rational),
    Function(RatFunc),
}

impl FieldElement {
    /// The transcendental parameter `z`.
    pub fn z() -> Self {
        FieldElement::Function(RatFunc::z())
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        match f.constant_value() {
            Some(q) => FieldElement::Rational(q),
            None => FieldElement::Function(f),
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        match self {
            FieldElement::Rational(q) => RatFunc::constant(q.clone()),
            FieldElement::Function(f) => f.clone(),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldElement::Rational(_))
    }

    /// Substitute `z = z0`. `None` when a denominator vanishes.
    pub fn eval_z(&self, z0: &Rational) -> Option<Rational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Function(f) => f.eval(z0),
        }
    }

    pub fn numer_z(&self) -> Polynomial<Rational> {
        self.to_ratfunc().numer().clone()
    }

    pub fn denom_z(&self) -> Polynomial<Rational> {
        self.to_ratfunc().denom().clone()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl From<Rational> for FieldElement {
    fn from(q: Rational) -> Self {
        FieldElement::Rational(q)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<BigInt> for FieldElement {
    fn from(n: BigInt) -> Self {
        FieldElement::Rational(Rational::from_integer(n))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn combine(
    a: &FieldElement,
    b: &FieldElement,
    on_q: impl FnOnce(&Rational, &Rational) -> Rational,
    on_f: impl FnOnce(&RatFunc, &RatFunc) -> RatFunc,
) -> FieldElement {
    match (a, b) {
        (FieldElement::Rational(x), FieldElement::Rational(y)) => {
            FieldElement::Rational(on_q(x, y))
        }
        _ => FieldElement::from_ratfunc(on_f(&a.to_ratfunc(), &b.to_ratfunc())),
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        combine(self, o, |x, y| x + y, |x, y| x.add(y))
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        combine(self, o, |x, y| x - y, |x, y| x.sub(y))
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        combine(self, o, |x, y| x * y, |x, y| x.mul(y))
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, o: &FieldElement) -> FieldElement {
        assert!(!Field::is_zero(o), "division by zero field element");
        combine(self, o, |x, y| x / y, |x, y| x.div(y))
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Function(f) => FieldElement::Function(f.neg()),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement { (&self).$m(o) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Field for FieldElement {
    fn zero() -> Self {
        FieldElement::Rational(<Rational as Zero>::zero())
    }

    fn one() -> Self {
        FieldElement::Rational(<Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        matches!(self, FieldElement::Rational(q) if Zero::is_zero(q))
    }

    fn from_rational(q: Rational) -> Self {
        FieldElement::Rational(q)
    }

    fn as_rational(&self) -> Option<Rational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Function(_) => None,
        }
    }

    fn to_text(&self) -> String {
        match self {
            FieldElement::Rational(q) => q.to_string(),
            FieldElement::Function(f) => f.to_text(),
        }
    }
}

/// Rational coefficient text with its sign split off: `(negative, magnitude)`.
pub(crate) fn split_sign(q: &Rational) -> (bool, Rational) {
    (q.is_negative(), q.abs())
}
