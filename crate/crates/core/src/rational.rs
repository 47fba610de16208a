//! Exact rational scalars and points.
//!
//! Scalars are `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator. Text form is `"p/q"`, or `"p"` for
//! integers; no decimal or exponent notation is accepted.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parse `"p"` or `"p/q"` with optional leading minus sign on `p`.
pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    fn digits(s: &str) -> bool {
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    }
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let unsigned = numer.strip_prefix('-').unwrap_or(numer);
    if !digits(unsigned) {
        return Err(format!("invalid rational {text:?}: expected \"p\" or \"p/q\""));
    }
    let numer: BigInt = numer
        .parse()
        .map_err(|e| format!("invalid numerator in {text:?}: {e}"))?;
    let denom: BigInt = match denom {
        None => BigInt::one(),
        Some(d) if digits(d) => d
            .parse()
            .map_err(|e| format!("invalid denominator in {text:?}: {e}"))?,
        Some(_) => return Err(format!("invalid denominator in {text:?}")),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(numer, denom))
}

pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scale a rational vector to the unique primitive integer vector on the same ray.
///
/// Returns `None` for the zero vector.
pub fn primitive_integer(values: &[Rational]) -> Option<Vec<BigInt>> {
    if values.iter().all(Zero::is_zero) {
        return None;
    }
    let scale = denominator_lcm(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&scale / v.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(ints.into_iter().map(|x| x / &g).collect())
}

/// A point of Q^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn origin(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn parse(coords: &[&str]) -> std::result::Result<Self, String> {
        coords
            .iter()
            .map(|c| parse_rational(c))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        dot(&self.coords, other)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coords.iter().map(|c| c * factor).collect())
    }

    pub fn sub(&self, other: &Self) -> Vec<Rational> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(is_integral)
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }

    /// Largest absolute coordinate value.
    pub fn max_abs(&self) -> Rational {
        self.coords
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl Index<usize> for RationalPoint {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.coords[index]
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
