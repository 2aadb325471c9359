//! Exact values in ℚ ∪ {∞}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds `p/q` as a rational. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Validation(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Validation(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// Formats a rational as `"p"` or `"p/q"` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An element of ℚ ∪ {∞}.
///
/// Addition absorbs into `Infinity`. Subtraction is only defined when the
/// subtrahend is finite; `∞ − ∞` is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtValue {
    Finite(Rational),
    Infinity,
}

impl ExtValue {
    pub fn zero() -> Self {
        ExtValue::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        ExtValue::Finite(int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtValue::Infinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtValue::Finite(r) => Some(r),
            ExtValue::Infinity => None,
        }
    }

    /// `self − rhs`; errors unless `rhs` is finite.
    pub fn checked_sub(&self, rhs: &ExtValue) -> Result<ExtValue> {
        match (self, rhs) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => Ok(ExtValue::Finite(a - b)),
            (ExtValue::Infinity, ExtValue::Finite(_)) => Ok(ExtValue::Infinity),
            (_, ExtValue::Infinity) => Err(Error::InfinityMinusInfinity),
        }
    }

    /// `self − r` for a finite `r`.
    pub fn sub_finite(&self, r: &Rational) -> ExtValue {
        match self {
            ExtValue::Finite(a) => ExtValue::Finite(a - r),
            ExtValue::Infinity => ExtValue::Infinity,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtValue::Finite(r) if r.is_zero())
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, ExtValue::Finite(r) if r.is_negative())
    }
}

impl From<Rational> for ExtValue {
    fn from(r: Rational) -> Self {
        ExtValue::Finite(r)
    }
}

impl From<i64> for ExtValue {
    fn from(n: i64) -> Self {
        ExtValue::int(n)
    }
}

impl Add for &ExtValue {
    type Output = ExtValue;

    fn add(self, rhs: &ExtValue) -> ExtValue {
        match (self, rhs) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a + b),
            _ => ExtValue::Infinity,
        }
    }
}

impl Add for ExtValue {
    type Output = ExtValue;

    fn add(self, rhs: ExtValue) -> ExtValue {
        &self + &rhs
    }
}

impl PartialOrd for ExtValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => a.cmp(b),
            (ExtValue::Finite(_), ExtValue::Infinity) => Ordering::Less,
            (ExtValue::Infinity, ExtValue::Finite(_)) => Ordering::Greater,
            (ExtValue::Infinity, ExtValue::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(r) => f.write_str(&format_rational(r)),
            ExtValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(ExtValue::Infinity),
            other => parse_rational(other).map(ExtValue::Finite),
        }
    }
}

/// Binomial coefficient C(n, k) as a rational, for integer n ≥ 0.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}
