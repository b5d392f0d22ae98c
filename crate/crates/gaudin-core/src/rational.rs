//! Exact rational arithmetic and the coefficient families of the
//! derivative-shifted bracket hierarchy.
//!
//! `Rational` wraps an arbitrary-precision fraction kept in lowest terms
//! with a positive denominator. The coefficient family `alpha_coeff` and
//! the cyclic invariants `beta_coeff` built from it control every local
//! bracket of order `r`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number. Always in lowest terms, denominator positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Ratio of two machine integers. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Integer power, with negative exponents going through the inverse.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let base = if exp < 0 {
            self.inv().expect("zero base with negative exponent")
        } else {
            self.clone()
        };
        let mut acc = Rational::one();
        for _ in 0..exp.unsigned_abs() {
            acc *= &base;
        }
        acc
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Ratio of two arbitrary-precision naturals as a `Rational`.
fn ratio(num: BigUint, den: BigUint) -> Rational {
    Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Coefficient `alpha_r(k, l) = (k+r-1)! (l+r-1)! / ((k+l+2r-1)! (r-1)!)`
/// of the order-`r` local bracket family. For `r = 1` this is
/// `k! l! / (k+l+1)!`.
///
/// Panics if `r == 0`; total otherwise.
pub fn alpha_coeff(r: u64, k: u64, l: u64) -> Rational {
    assert!(r >= 1, "alpha_coeff requires r >= 1");
    let num = factorial(k + r - 1) * factorial(l + r - 1);
    let den = factorial(k + l + 2 * r - 1) * factorial(r - 1);
    ratio(num, den)
}

/// Cyclic invariant `beta_r(k, l, m) = alpha_r(k, l) * alpha_r(k+l+r, m)`.
///
/// The closed form is `(k+r-1)! (l+r-1)! (m+r-1)! / ((k+l+m+3r-1)! ((r-1)!)^2)`,
/// fully symmetric in `(k, l, m)`; its invariance under cyclic permutations
/// is what makes the order-`r` brackets Jacobi.
pub fn beta_coeff(r: u64, k: u64, l: u64, m: u64) -> Rational {
    assert!(r >= 1, "beta_coeff requires r >= 1");
    alpha_coeff(r, k, l) * alpha_coeff(r, k + l + r, m)
}

/// Derivative-shift order of a local bracket family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoeffSpec {
    r: u64,
}

impl CoeffSpec {
    /// Requires `r >= 1`; `r = 1` is the plain Gaudin-type family.
    pub fn new(r: u64) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::Parse("derivative-shift order r must be >= 1".into()));
        }
        Ok(CoeffSpec { r })
    }

    pub fn order(&self) -> u64 {
        self.r
    }

    pub fn alpha(&self, k: u64, l: u64) -> Rational {
        alpha_coeff(self.r, k, l)
    }

    pub fn beta(&self, k: u64, l: u64, m: u64) -> Rational {
        beta_coeff(self.r, k, l, m)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    /// Canonical form: `p/q`, or just `p` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad integer: {t:?}")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rational(BigRational::new(parse_int(num)?, den)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::from_str(&s).map_err(de::Error::custom)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self == &Rational::from_int(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Rational::from_int(*other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Independent factorial oracle for the closed forms: everything below
    /// is computed directly from factorials, not through `alpha_coeff`.
    fn fact_ratio(num: &[u64], den: &[u64]) -> Rational {
        let n: BigUint = num.iter().map(|&x| factorial(x)).product();
        let d: BigUint = den.iter().map(|&x| factorial(x)).product();
        ratio(n, d)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_coeff(1, 0, 0), Rational::one());
        assert_eq!(alpha_coeff(1, 1, 1), q(1, 6));
        assert_eq!(alpha_coeff(2, 0, 0), q(1, 6));
        assert_eq!(alpha_coeff(2, 1, 0), q(1, 12));
    }

    #[test]
    fn beta_examples() {
        // 1! 2! 3! / 8!
        assert_eq!(beta_coeff(1, 1, 2, 3), q(1, 3360));
        assert_eq!(beta_coeff(1, 0, 0, 0), q(1, 2));
        // Oracle value: alpha_2(0,0) * alpha_2(2,0) = 1/6 * 1/20 = 1/120,
        // i.e. 1!1!1!/(5! * (1!)^2) -- the sum index in the closed form is
        // k+l+m+3r-1, not k+l+m+2r-1.
        assert_eq!(beta_coeff(2, 0, 0, 0), q(1, 120));
        assert_eq!(
            beta_coeff(2, 0, 0, 0),
            fact_ratio(&[1, 1, 1], &[5]) // (r-1)! = 1
        );
    }

    #[test]
    fn beta_matches_factorial_oracle() {
        for r in 1..=4u64 {
            for k in 0..=4 {
                for l in 0..=4 {
                    for m in 0..=4 {
                        let oracle = fact_ratio(
                            &[k + r - 1, l + r - 1, m + r - 1],
                            &[k + l + m + 3 * r - 1, r - 1, r - 1],
                        );
                        assert_eq!(beta_coeff(r, k, l, m), oracle, "r={r} k={k} l={l} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_symmetry() {
        for r in 1..=4 {
            for k in 0..=10 {
                for l in 0..=10 {
                    assert_eq!(alpha_coeff(r, k, l), alpha_coeff(r, l, k));
                }
            }
        }
    }

    #[test]
    fn beta_cyclic() {
        for r in 1..=3 {
            for k in 0..=5 {
                for l in 0..=5 {
                    for m in 0..=5 {
                        let b = beta_coeff(r, k, l, m);
                        assert_eq!(b, beta_coeff(r, l, m, k));
                        assert_eq!(b, beta_coeff(r, m, k, l));
                    }
                }
            }
        }
    }

    #[test]
    fn order_two_scalar_identity() {
        // alpha_2(k,0)/k! = 1/(k+2)! - 2/(k+3)!
        for k in 0..=20u64 {
            let lhs = alpha_coeff(2, k, 0) / Rational::from_bigint(BigInt::from(factorial(k)));
            let rhs = fact_ratio(&[], &[k + 2]) - q(2, 1) * fact_ratio(&[], &[k + 3]);
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn derivation_recurrence() {
        // alpha_r(k,l) = alpha_r(k+1,l) + alpha_r(k,l+1): compatibility of the
        // local family with d/dv.
        for r in 1..=4 {
            for k in 0..=6 {
                for l in 0..=6 {
                    assert_eq!(
                        alpha_coeff(r, k, l),
                        alpha_coeff(r, k + 1, l) + alpha_coeff(r, k, l + 1)
                    );
                }
            }
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(q(-3, 6).to_string(), "-1/2");
        assert_eq!(q(8, 4).to_string(), "2");
        assert_eq!("7/21".parse::<Rational>().unwrap(), q(1, 3));
        assert_eq!("-5".parse::<Rational>().unwrap(), q(-5, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn lowest_terms_invariant() {
        let a = q(6, 8) * q(4, 3); // = 1
        assert!(a.is_one());
        let b = q(2, 7) + q(5, 7);
        assert_eq!(b.numer(), &BigInt::from(1));
        assert_eq!(b.denom(), &BigInt::from(1));
    }

    #[test]
    fn pow_and_inv() {
        assert_eq!(q(2, 3).pow(-2), q(9, 4));
        assert_eq!(q(2, 3).pow(0), Rational::one());
        assert!(Rational::zero().inv().is_err());
    }
}
