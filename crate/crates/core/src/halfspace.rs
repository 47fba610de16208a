use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, dot, Rational, RationalPoint};

/// The closed half-space `{x : <normal, x> <= bound}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    normal: Vec<Rational>,
    bound: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vec<Rational>, bound: Rational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::DimensionDeficient {
                hull_dim: 0,
                ambient_dim: normal.len(),
            });
        }
        Ok(Self { normal, bound })
    }

    pub fn from_integers(normal: &[i64], bound: Rational) -> Result<Self> {
        Self::new(normal.iter().map(|&x| rational::int(x)).collect(), bound)
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn value(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }

    pub fn contains(&self, x: &RationalPoint, strict: bool) -> bool {
        let v = self.value(x.coords());
        if strict {
            v < self.bound
        } else {
            v <= self.bound
        }
    }

    pub fn is_tight(&self, x: &RationalPoint) -> bool {
        self.value(x.coords()) == self.bound
    }

    /// The same half-space with a primitive integer normal (entries coprime).
    pub fn primitive(&self) -> Self {
        let ints = rational::primitive_integer(&self.normal).expect("normal is nonzero");
        let normal: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
        // positive ratio because both normals point the same way
        let ratio = first_nonzero_ratio(&normal, &self.normal);
        Self {
            bound: &self.bound * &ratio,
            normal,
        }
    }

    /// Rescaled so that the bound is 1. Only defined when the bound is positive,
    /// i.e. the origin lies strictly inside.
    pub fn unit_bound(&self) -> Option<Self> {
        if !self.bound.is_positive() {
            return None;
        }
        Some(Self {
            normal: self.normal.iter().map(|u| u / &self.bound).collect(),
            bound: rational::int(1),
        })
    }

    pub fn has_integral_normal(&self) -> bool {
        self.normal.iter().all(rational::is_integral)
    }

    pub fn integer_normal(&self) -> Option<Vec<BigInt>> {
        self.has_integral_normal()
            .then(|| self.normal.iter().map(|u| u.numer().clone()).collect())
    }
}

fn first_nonzero_ratio(scaled: &[Rational], original: &[Rational]) -> Rational {
    scaled
        .iter()
        .zip(original)
        .find(|(_, o)| !o.is_zero())
        .map(|(s, o)| s / o)
        .expect("normal is nonzero")
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<(")?;
        for (i, u) in self.normal.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "), x> <= {}", self.bound)
    }
}
