//! Exact rational arithmetic for link costs.
//!
//! Costs are parsed from decimal text and kept as exact rationals so that
//! argmin tie behavior is deterministic and survives rescaling to [0,1].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::InputError;

/// An exact rational quantity. Link costs are nonnegative, but differences
/// (swap gains) may be negative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cost(BigRational);

impl Cost {
    pub fn zero() -> Self {
        Cost(BigRational::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Cost(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Cost(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact division; panics on a zero divisor.
    pub fn div(&self, other: &Cost) -> Cost {
        Cost(&self.0 / &other.0)
    }

    pub fn mul_int(&self, k: u64) -> Cost {
        Cost(&self.0 * BigInt::from(k))
    }

    /// Compares `self / a` against `other / b` by cross multiplication.
    pub fn cmp_ratio(&self, a: u64, other: &Cost, b: u64) -> std::cmp::Ordering {
        (&self.0 * BigInt::from(b)).cmp(&(&other.0 * BigInt::from(a)))
    }

    pub(crate) fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub(crate) fn from_rational(r: BigRational) -> Self {
        Cost(r)
    }
}

impl FromStr for Cost {
    type Err = InputError;

    /// Accepts integer (`42`), decimal (`0.125`) and fraction (`3/7`) forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || InputError::MalformedInput(format!("invalid number `{s}`"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Cost(BigRational::new(n, d)));
        }
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let digits = if digits.is_empty() { "0".to_string() } else { digits };
        let n = BigInt::from_str(&digits).map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        Ok(Cost(BigRational::new(n * BigInt::from(sign), den)))
    }
}

impl fmt::Display for Cost {
    /// Prints an exact, canonical form: an integer when integral, a plain
    /// decimal when the reduced denominator is 2^a*5^b, otherwise `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = self.0.numer();
        let denom = self.0.denom();
        if denom.is_one() {
            return write!(f, "{numer}");
        }
        let mut twos = 0u32;
        let mut fives = 0u32;
        let mut d = denom.clone();
        let two = BigInt::from(2u32);
        let five = BigInt::from(5u32);
        while (&d % &two).is_zero() {
            d /= &two;
            twos += 1;
        }
        while (&d % &five).is_zero() {
            d /= &five;
            fives += 1;
        }
        if d.is_one() {
            let scale = twos.max(fives);
            let shifted = numer * BigInt::from(10u32).pow(scale) / denom;
            let neg = shifted.is_negative();
            let body = shifted.abs().to_string();
            let body = format!("{:0>width$}", body, width = scale as usize + 1);
            let split = body.len() - scale as usize;
            let (ip, fp) = body.split_at(split);
            write!(f, "{}{ip}.{fp}", if neg { "-" } else { "" })
        } else {
            write!(f, "{numer}/{denom}")
        }
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Cost> for Cost {
    type Output = Cost;
    fn add(self, rhs: &'a Cost) -> Cost {
        Cost(self.0 + &rhs.0)
    }
}

impl AddAssign<&Cost> for Cost {
    fn add_assign(&mut self, rhs: &Cost) {
        self.0 += &rhs.0;
    }
}

impl Sub for Cost {
    type Output = Cost;
    fn sub(self, rhs: Cost) -> Cost {
        Cost(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a Cost> for Cost {
    type Output = Cost;
    fn sub(self, rhs: &'a Cost) -> Cost {
        Cost(self.0 - &rhs.0)
    }
}

impl SubAssign<&Cost> for Cost {
    fn sub_assign(&mut self, rhs: &Cost) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Cost {
    type Output = Cost;
    fn neg(self) -> Cost {
        Cost(-self.0)
    }
}

impl<'a> Sum<&'a Cost> for Cost {
    fn sum<I: Iterator<Item = &'a Cost>>(iter: I) -> Cost {
        let mut acc = Cost::zero();
        for c in iter {
            acc += c;
        }
        acc
    }
}

impl From<u64> for Cost {
    fn from(v: u64) -> Self {
        Cost(BigRational::from_integer(BigInt::from(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_decimals_and_fractions() {
        assert_eq!("42".parse::<Cost>().unwrap(), Cost::from_int(42));
        assert_eq!("0.5".parse::<Cost>().unwrap(), Cost::ratio(1, 2));
        assert_eq!("12.345".parse::<Cost>().unwrap(), Cost::ratio(12345, 1000));
        assert_eq!("3/7".parse::<Cost>().unwrap(), Cost::ratio(3, 7));
        assert!("abc".parse::<Cost>().is_err());
        assert!("1/0".parse::<Cost>().is_err());
        assert!("".parse::<Cost>().is_err());
    }

    #[test]
    fn display_is_exact_and_canonical() {
        assert_eq!(Cost::from_int(7).to_string(), "7");
        assert_eq!(Cost::ratio(1, 2).to_string(), "0.5");
        assert_eq!(Cost::ratio(3, 20).to_string(), "0.15");
        assert_eq!(Cost::ratio(3, 7).to_string(), "3/7");
        assert_eq!(Cost::ratio(-1, 4).to_string(), "-0.25");
        // round trip
        for s in ["7", "0.5", "0.15", "3/7", "123.001"] {
            let c: Cost = s.parse().unwrap();
            assert_eq!(c.to_string().parse::<Cost>().unwrap(), c);
        }
    }

    #[test]
    fn ratio_comparison_is_exact() {
        // 1/3 vs 2/6 are equal; 1/3 vs 3/10 differ
        let a = Cost::from_int(1);
        let b = Cost::from_int(2);
        assert_eq!(a.cmp_ratio(3, &b, 6), std::cmp::Ordering::Equal);
        let c = Cost::from_int(3);
        assert_eq!(a.cmp_ratio(3, &c, 10), std::cmp::Ordering::Greater);
    }
}
