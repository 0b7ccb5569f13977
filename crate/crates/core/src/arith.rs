//! Exact integer and rational arithmetic, residue rings and small
//! number-theoretic helpers.
//!
//! Integers and rationals are backed by `num-bigint` / `num-rational`;
//! `BigRational` is always kept in lowest terms with a positive denominator.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Exact rational number in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// p-adic valuation. Zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_nonnegative(self) -> bool {
        match self {
            Valuation::Finite(v) => v >= 0,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(q) = v_p(numer) - v_p(denom)`.
pub fn padic_valuation(q: &Rational, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    Valuation::Finite(int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p))
}

/// An element of `Z/mZ`. The modulus travels with the value and mixed-modulus
/// arithmetic is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: BigInt,
    modulus: BigInt,
}

impl Residue {
    pub fn new(value: BigInt, modulus: BigInt) -> Result<Self> {
        if modulus < BigInt::from(2) {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        let value = value.mod_floor(&modulus);
        Ok(Residue { value, modulus })
    }

    pub fn from_i64(value: i64, modulus: &BigInt) -> Result<Self> {
        Residue::new(BigInt::from(value), modulus.clone())
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_ring(&self, other: &Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.to_string(),
                other.modulus.to_string(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Residue) -> Result<Residue> {
        self.same_ring(other)?;
        Residue::new(&self.value + &other.value, self.modulus.clone())
    }

    pub fn checked_sub(&self, other: &Residue) -> Result<Residue> {
        self.same_ring(other)?;
        Residue::new(&self.value - &other.value, self.modulus.clone())
    }

    pub fn checked_mul(&self, other: &Residue) -> Result<Residue> {
        self.same_ring(other)?;
        Residue::new(&self.value * &other.value, self.modulus.clone())
    }

    pub fn neg(&self) -> Residue {
        Residue {
            value: (&self.modulus - &self.value).mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }

    pub fn pow(&self, e: u64) -> Residue {
        Residue {
            value: self.value.modpow(&BigInt::from(e), &self.modulus),
            modulus: self.modulus.clone(),
        }
    }

    /// Scale by an integer, staying in the same ring.
    pub fn scale(&self, c: &BigInt) -> Residue {
        Residue {
            value: (&self.value * c).mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }

    /// Symmetric representative in `(-m/2, m/2]`.
    pub fn signed_value(&self) -> BigInt {
        if &self.value * 2 > self.modulus {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Maps `q = a/b` to `a * b^{-1} mod m`.
pub fn rational_to_residue(q: &Rational, m: &BigInt) -> Result<Residue> {
    if m < &BigInt::from(2) {
        return Err(Error::InvalidModulus(m.to_string()));
    }
    let den = q.denom().mod_floor(m);
    let egcd = den.extended_gcd(m);
    if !egcd.gcd.is_one() {
        return Err(Error::NonInvertibleDenominator {
            denominator: q.denom().to_string(),
            modulus: m.to_string(),
        });
    }
    Residue::new(q.numer() * egcd.x, m.clone())
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in `[lo, hi]`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let n = hi as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi).filter(|&p| sieve[p as usize]).collect()
}

/// Legendre symbol `(a/p)` via Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p.to_string()));
    }
    let pb = BigInt::from(p);
    let r = a.mod_floor(&pb).modpow(&BigInt::from((p - 1) / 2), &pb);
    Ok(if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else {
        -1
    })
}

/// Prime divisors of `n`, found by trial division up to `10^6`; a cofactor
/// left over beyond that bound is reported as-is.
pub fn prime_divisors(n: &BigInt) -> BTreeSet<BigInt> {
    let mut out = BTreeSet::new();
    let mut n = n.abs();
    if n.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while d <= 1_000_000 {
        let db = BigInt::from(d);
        if &db * &db > n {
            break;
        }
        if (&n % &db).is_zero() {
            out.insert(db.clone());
            while (&n % &db).is_zero() {
                n /= &db;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.insert(n);
    }
    out
}

/// `(-1/p) = (-1)^((p-1)/2)` for odd `p`.
pub fn minus_one_symbol(p: u64) -> i8 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

/// `(p/3)`: `+1` for `p = 1 mod 3`, `-1` for `p = 2 mod 3`, `0` for `p = 3`.
pub fn symbol_over_three(p: u64) -> i8 {
    match p % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, i| acc * i)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(9, 0), BigInt::one());
        assert_eq!(
            binomial(10, 5),
            factorial(10) / (factorial(5) * factorial(5))
        );
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 7), BigInt::zero());
        for n in 0..30 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k),
                    factorial(n) / (factorial(k) * factorial(n - k))
                );
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&BigInt::from(-1), 5).unwrap(), 1);
        assert_eq!(legendre_symbol(&BigInt::from(7), 3).unwrap(), 1);
        assert_eq!(legendre_symbol(&BigInt::from(5), 3).unwrap(), -1);
        assert_eq!(legendre_symbol(&BigInt::from(10), 5).unwrap(), 0);
        assert!(matches!(
            legendre_symbol(&BigInt::from(3), 2),
            Err(Error::NotOddPrime(_))
        ));
        assert!(matches!(
            legendre_symbol(&BigInt::from(3), 9),
            Err(Error::NotOddPrime(_))
        ));
    }

    #[test]
    fn legendre_matches_square_enumeration() {
        for p in primes_in_range(3, 100) {
            let squares: BTreeSet<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 1..p {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(legendre_symbol(&BigInt::from(a), p).unwrap(), expected);
            }
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(&rat(1, 8), 5), Valuation::Finite(0));
        assert_eq!(padic_valuation(&rat(1, 8), 2), Valuation::Finite(-3));
        assert_eq!(padic_valuation(&int(0), 7), Valuation::Infinite);
        assert_eq!(padic_valuation(&rat(-50, 3), 5), Valuation::Finite(2));
        assert!(Valuation::Finite(100) < Valuation::Infinite);
    }

    #[test]
    fn residue_examples() {
        let m = BigInt::from(125);
        assert_eq!(
            rational_to_residue(&rat(1, 8), &m).unwrap().value(),
            &BigInt::from(47)
        );
        assert_eq!(
            rational_to_residue(&int(3), &BigInt::from(7))
                .unwrap()
                .value(),
            &BigInt::from(3)
        );
        assert!(matches!(
            rational_to_residue(&rat(1, 2), &BigInt::from(4)),
            Err(Error::NonInvertibleDenominator { .. })
        ));
        assert_eq!(
            rational_to_residue(&rat(-1, 8), &m).unwrap().value(),
            &BigInt::from(78)
        );
    }

    #[test]
    fn residue_rejects_mixed_moduli() {
        let a = Residue::from_i64(3, &BigInt::from(5)).unwrap();
        let b = Residue::from_i64(3, &BigInt::from(125)).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::ModulusMismatch(..))));
        assert!(Residue::from_i64(0, &BigInt::from(1)).is_err());
        assert_eq!(a.neg().value(), &BigInt::from(2));
        assert_eq!(b.pow(3).value(), &BigInt::from(27));
        assert_eq!(
            Residue::from_i64(124, &BigInt::from(125))
                .unwrap()
                .signed_value(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn primes() {
        assert_eq!(primes_in_range(5, 13), vec![5, 7, 11, 13]);
        assert!(primes_in_range(24, 28).is_empty());
        assert_eq!(primes_in_range(2, 20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        let sieve = primes_in_range(0, 5000);
        let trial: Vec<u64> = (0..=5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, trial);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn prime_divisor_sets() {
        let ds: Vec<BigInt> = prime_divisors(&BigInt::from(360)).into_iter().collect();
        assert_eq!(ds, vec![BigInt::from(2), BigInt::from(3), BigInt::from(5)]);
        assert!(prime_divisors(&BigInt::one()).is_empty());
    }

    #[test]
    fn symbols() {
        assert_eq!(minus_one_symbol(5), 1);
        assert_eq!(minus_one_symbol(7), -1);
        assert_eq!(symbol_over_three(7), 1);
        assert_eq!(symbol_over_three(5), -1);
        for p in primes_in_range(5, 200) {
            let via_euler = legendre_symbol(&BigInt::from(p), 3).unwrap();
            assert_eq!(symbol_over_three(p), via_euler);
            assert_eq!(
                minus_one_symbol(p),
                legendre_symbol(&BigInt::from(-1), p).unwrap()
            );
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_rat() -> impl Strategy<Value = Rational> {
            (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
        }

        proptest! {
            #[test]
            fn exact_field_ops(a in small_rat(), b in small_rat()) {
                prop_assert_eq!(&(&a + &b) - &b, a.clone());
                if !b.is_zero() {
                    prop_assert_eq!(&(&a / &b) * &b, a.clone());
                }
                prop_assert!(a.denom().is_positive());
            }

            #[test]
            fn residue_map_is_additive_and_multiplicative(a in small_rat(), b in small_rat(), m in 2i64..500) {
                let m = BigInt::from(m);
                let ra = rational_to_residue(&a, &m);
                let rb = rational_to_residue(&b, &m);
                if let (Ok(ra), Ok(rb)) = (ra, rb) {
                    let sum = rational_to_residue(&(&a + &b), &m).unwrap();
                    prop_assert_eq!(sum, ra.checked_add(&rb).unwrap());
                    let prod = rational_to_residue(&(&a * &b), &m).unwrap();
                    prop_assert_eq!(prod, ra.checked_mul(&rb).unwrap());
                }
            }
        }
    }
}
