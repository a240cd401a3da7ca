//! Exact nonnegative rational degrees and costs.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A nonnegative rational number, always kept in lowest terms.
///
/// Used both for action costs and for the degree superscript of blame
/// formulas. Ordering and equality are exact.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("negative degree `{0}`")]
    Negative(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed degree literal `{0}`")]
    Malformed(String),
}

impl Degree {
    pub fn zero() -> Self {
        Degree(BigRational::zero())
    }

    pub fn from_integer(n: u64) -> Self {
        Degree(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; fails on a zero denominator.
    pub fn from_fraction(numer: u64, denom: u64) -> Result<Self, DegreeError> {
        if denom == 0 {
            return Err(DegreeError::ZeroDenominator(format!("{numer}/{denom}")));
        }
        Ok(Degree(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    /// Wraps an arbitrary rational, rejecting negative values.
    pub fn from_rational(r: BigRational) -> Result<Self, DegreeError> {
        if r.is_negative() {
            return Err(DegreeError::Negative(r.to_string()));
        }
        Ok(Degree(r))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Parses the surface forms `12`, `12.5` and `25/2`.
    pub fn parse(text: &str) -> Result<Self, DegreeError> {
        let t = text.trim();
        if t.starts_with('-') {
            return Err(DegreeError::Negative(t.to_string()));
        }
        let malformed = || DegreeError::Malformed(t.to_string());
        if let Some((n, d)) = t.split_once('/') {
            let n = parse_digits(n.trim()).ok_or_else(malformed)?;
            let d = parse_digits(d.trim()).ok_or_else(malformed)?;
            if d.is_zero() {
                return Err(DegreeError::ZeroDenominator(t.to_string()));
            }
            return Ok(Degree(BigRational::new(n, d)));
        }
        if let Some((int, frac)) = t.split_once('.') {
            if int.is_empty() || frac.is_empty() {
                return Err(malformed());
            }
            let whole = parse_digits(&format!("{int}{frac}")).ok_or_else(malformed)?;
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            return Ok(Degree(BigRational::new(whole, scale)));
        }
        let n = parse_digits(t).ok_or_else(malformed)?;
        Ok(Degree(BigRational::from_integer(n)))
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Degree({self})")
    }
}

impl FromStr for Degree {
    type Err = DegreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Degree::parse(s)
    }
}

impl From<u64> for Degree {
    fn from(n: u64) -> Self {
        Degree::from_integer(n)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Degree> for &'a Degree {
    type Output = Degree;
    fn add(self, rhs: &'a Degree) -> Degree {
        Degree(&self.0 + &rhs.0)
    }
}

impl Sum for Degree {
    fn sum<I: Iterator<Item = Degree>>(iter: I) -> Degree {
        iter.fold(Degree::zero(), |acc, d| acc + d)
    }
}

impl<'a> Sum<&'a Degree> for Degree {
    fn sum<I: Iterator<Item = &'a Degree>>(iter: I) -> Degree {
        iter.fold(Degree::zero(), |acc, d| &acc + d)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(u64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(t) => Degree::parse(&t).map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Degree::from_integer(n)),
        }
    }
}
