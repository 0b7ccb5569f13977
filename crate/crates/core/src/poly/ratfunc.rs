use super::{Field, Polynomial};
use crate::arith::Rational;

/// Rational function in `z` over `Q`, kept in lowest terms with a monic
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Polynomial<Rational>,
    den: Polynomial<Rational>,
}

impl RatFunc {
    /// Builds `num / den`; `None` when `den` is the zero polynomial.
    pub fn new(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc::constant(<Rational as Field>::zero()));
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lc = den.leading().cloned().expect("nonzero denominator");
        if !Field::is_one(&lc) {
            num = num.scale(&(<Rational as Field>::one() / &lc));
            den = den.scale(&(<Rational as Field>::one() / &lc));
        }
        Some(RatFunc { num, den })
    }

    pub fn constant(q: Rational) -> Self {
        RatFunc {
            num: Polynomial::constant(q),
            den: Polynomial::one(),
        }
    }

    pub fn z() -> Self {
        RatFunc {
            num: Polynomial::x(),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(num: Polynomial<Rational>) -> Self {
        RatFunc {
            num,
            den: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial<Rational> {
        &self.den
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    pub fn eval(&self, z0: &Rational) -> Option<Rational> {
        let d = self.den.eval(z0);
        if Field::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(z0) / d)
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
            .expect("division by zero rational function")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.to_text("z")
        } else {
            format!("({})/({})", self.num.to_text("z"), self.den.to_text("z"))
        }
    }
}
