//! Arbitrary-precision rationals kept in lowest terms.
//!
//! Arithmetic takes an integer fast path whenever both denominators are one,
//! which is the common case inside fraction-free elimination and bracket
//! evaluation on primitive integer vectors.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number; the denominator is always positive and coprime to
/// the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

/// gcd of two big integers, with a cheap path when one side fits a machine word.
pub fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    if let Some(small) = b.to_u64().or_else(|| (-b).to_u64()) {
        let r = (a % BigInt::from(small)).abs().to_u64().unwrap_or(0);
        return BigInt::from(small.gcd(&r));
    }
    if let Some(small) = a.to_u64().or_else(|| (-a).to_u64()) {
        let r = (b % BigInt::from(small)).abs().to_u64().unwrap_or(0);
        return BigInt::from(small.gcd(&r));
    }
    a.gcd(b)
}

impl Rational {
    pub fn zero() -> Self {
        Rational { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Rational { num: BigInt::one(), den: BigInt::one() }
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational { num: n, den: BigInt::one() }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }

    /// Builds `num/den` and reduces it. Panics on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Rational { num, den };
        r.reduce();
        r
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    fn reduce(&mut self) {
        if self.den.sign() == Sign::Minus {
            self.num = -std::mem::take(&mut self.num);
            self.den = -std::mem::take(&mut self.den);
        }
        if self.den.is_one() {
            return;
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = big_gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num /= &g;
            self.den /= &g;
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational { num: self.num.abs(), den: self.den.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let mut r = Rational { num: self.den.clone(), den: self.num.clone() };
        if r.den.is_negative() {
            r.num = -r.num;
            r.den = -r.den;
        }
        Some(r)
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational { num: num_traits::pow(self.num.clone(), e as usize), den: num_traits::pow(self.den.clone(), e as usize) }
    }

    /// Scales by `n/d` for machine-size `n`, `d` (d > 0).
    pub fn scale(&self, n: i64, d: i64) -> Self {
        if d == 1 {
            if self.den.is_one() {
                return Rational::from_integer(&self.num * n);
            }
            return Rational::new(&self.num * n, self.den.clone());
        }
        Rational::new(&self.num * n, &self.den * d)
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / self.den.to_f64().unwrap_or(f64::NAN)
    }

    /// Number of bits in the larger of numerator and denominator.
    pub fn height_bits(&self) -> u64 {
        self.num.bits().max(self.den.bits())
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_i64(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, o: &Rational) -> Rational {
        if self.den.is_one() && o.den.is_one() {
            return Rational::from_integer(&self.num + &o.num);
        }
        if self.den == o.den {
            return Rational::new(&self.num + &o.num, self.den.clone());
        }
        Rational::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, o: &Rational) -> Rational {
        if self.den.is_one() && o.den.is_one() {
            return Rational::from_integer(&self.num - &o.num);
        }
        if self.den == o.den {
            return Rational::new(&self.num - &o.num, self.den.clone());
        }
        Rational::new(&self.num * &o.den - &o.num * &self.den, &self.den * &o.den)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, o: &Rational) -> Rational {
        if self.num.is_zero() || o.num.is_zero() {
            return Rational::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Rational::from_integer(&self.num * &o.num);
        }
        Rational::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, o: &Rational) -> Rational {
        assert!(!o.num.is_zero(), "division by zero");
        Rational::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, o: &Rational) {
        if self.den.is_one() && o.den.is_one() {
            self.num += &o.num;
        } else {
            *self = &*self + o;
        }
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, o: &Rational) {
        if self.den.is_one() && o.den.is_one() {
            self.num -= &o.num;
        } else {
            *self = &*self - o;
        }
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, o: &Rational) {
        *self = &*self * o;
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational '{s}'"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
            None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

/// Serialized as the string `"num/den"`.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.num, self.den))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let q = Rational::ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(Rational::ratio(0, -7), Rational::zero());
    }

    #[test]
    fn arithmetic() {
        let a = Rational::ratio(1, 3);
        let b = Rational::ratio(1, 6);
        assert_eq!(&a + &b, Rational::ratio(1, 2));
        assert_eq!(&a - &b, Rational::ratio(1, 6));
        assert_eq!(&a * &b, Rational::ratio(1, 18));
        assert_eq!(&a / &b, Rational::from_i64(2));
        assert_eq!(a.inv().unwrap(), Rational::from_i64(3));
        assert!(Rational::zero().inv().is_none());
    }

    #[test]
    fn parse_and_display() {
        let q: Rational = "-10/4".parse().unwrap();
        assert_eq!(q.to_string(), "-5/2");
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_i64(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"-5/2\"");
    }

    #[test]
    fn small_gcd_path() {
        let big = BigInt::from(3u64).pow(200) * 14;
        assert_eq!(big_gcd(&big, &BigInt::from(21)), BigInt::from(21));
        assert_eq!(big_gcd(&BigInt::from(-8), &big), BigInt::from(2));
    }
}
