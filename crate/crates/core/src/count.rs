//! Lattice points in dilations `mP` and their strict interiors.
//!
//! Points are enumerated over the integer bounding box of `mP`. For each
//! choice of the first `n - 1` coordinates the admissible values of the last
//! coordinate form an interval, computed exactly from the facet inequalities,
//! so the innermost axis is never scanned point by point. Slabs along the
//! first axis are counted in parallel.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfspace::HalfSpace;
use crate::polytope::Polytope;
use crate::rational::Rational;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

pub type LatticePoint = Vec<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountConfig {
    /// Largest bounding-box cell count that may be enumerated.
    pub budget: u64,
}

impl Default for CountConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Closed and strict-interior counts of one dilation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub m: u64,
    #[serde(with = "crate::serde_big::unsigned")]
    pub closed_count: BigUint,
    #[serde(with = "crate::serde_big::unsigned")]
    pub interior_count: BigUint,
}

/// Integer inequality system `<u, x> <= t` describing the lattice points of
/// `mP` (or of its interior), together with the integer bounding box.
struct Slicer {
    rows: Vec<(Vec<i128>, i128)>,
    lo: Vec<i128>,
    hi: Vec<i128>,
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or(Error::CoordinateOverflow)
}

fn ceil(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

impl Slicer {
    fn new(p: &Polytope, m: u64, strict: bool, cfg: &CountConfig) -> Result<Self> {
        let scale = Rational::from_integer(BigInt::from(m));
        let mut lo = Vec::with_capacity(p.dim());
        let mut hi = Vec::with_capacity(p.dim());
        let mut cells = BigInt::from(1);
        for (min, max) in p.bounding_box() {
            let l = ceil(&(&min * &scale));
            let h = floor(&(&max * &scale));
            let width = (&h - &l + 1u32).max(BigInt::zero());
            cells *= width;
            lo.push(l);
            hi.push(h);
        }
        if cells > BigInt::from(cfg.budget) {
            return Err(Error::BudgetExceeded {
                cells: cells.to_string(),
                budget: cfg.budget,
            });
        }
        let rows = p
            .facets()
            .iter()
            .map(|h| {
                let normal = h.integer_normal().expect("facets have primitive integer normals");
                let bound = h.bound() * &scale;
                // <u, x> is an integer, so the rational bound rounds exactly
                let threshold = if strict {
                    ceil(&bound) - 1
                } else {
                    floor(&bound)
                };
                Ok((
                    normal.iter().map(to_i128).collect::<Result<Vec<_>>>()?,
                    to_i128(&threshold)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows,
            lo: lo.iter().map(to_i128).collect::<Result<_>>()?,
            hi: hi.iter().map(to_i128).collect::<Result<_>>()?,
        })
    }

    fn dim(&self) -> usize {
        self.lo.len()
    }

    /// Admissible range of the last coordinate given the others.
    fn last_axis(&self, prefix: &[i128]) -> Option<(i128, i128)> {
        let last = self.dim() - 1;
        let mut lo = self.lo[last];
        let mut hi = self.hi[last];
        for (u, t) in &self.rows {
            let partial: i128 = u[..last].iter().zip(prefix).map(|(a, b)| a * b).sum();
            let rest = t - partial;
            let c = u[last];
            if c > 0 {
                hi = hi.min(Integer::div_floor(&rest, &c));
            } else if c < 0 {
                lo = lo.max(Integer::div_ceil(&rest, &c));
            } else if rest < 0 {
                return None;
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// Calls `visit` for every admissible prefix with the first coordinate fixed.
    fn for_each_in_slab(&self, first: i128, mut visit: impl FnMut(&[i128], i128, i128)) {
        let last = self.dim() - 1;
        if last == 0 {
            if let Some((lo, hi)) = self.last_axis(&[]) {
                visit(&[], lo, hi);
            }
            return;
        }
        let mut prefix: Vec<i128> = self.lo[..last].to_vec();
        prefix[0] = first;
        loop {
            if let Some((lo, hi)) = self.last_axis(&prefix) {
                visit(&prefix, lo, hi);
            }
            // odometer over axes 1..last
            let mut axis = last - 1;
            loop {
                if axis == 0 {
                    return;
                }
                if prefix[axis] < self.hi[axis] {
                    prefix[axis] += 1;
                    break;
                }
                prefix[axis] = self.lo[axis];
                axis -= 1;
            }
        }
    }

    fn first_axis_values(&self) -> Vec<i128> {
        if self.dim() == 1 {
            // the single axis is handled by `last_axis`
            vec![0]
        } else {
            (self.lo[0]..=self.hi[0]).collect()
        }
    }

    fn count(&self) -> BigUint {
        self.first_axis_values()
            .into_par_iter()
            .map(|first| {
                let mut total: u128 = 0;
                self.for_each_in_slab(first, |_, lo, hi| total += (hi - lo + 1) as u128);
                total
            })
            .map(BigUint::from)
            .sum()
    }

    fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        for first in self.first_axis_values() {
            self.for_each_in_slab(first, |prefix, lo, hi| {
                for x in lo..=hi {
                    out.push(
                        prefix
                            .iter()
                            .chain(std::iter::once(&x))
                            .map(|&c| BigInt::from(c))
                            .collect(),
                    );
                }
            });
        }
        out
    }
}

/// Number of integer points in `mP` (or in its strict interior when `strict`).
///
/// At `m = 0` the closed count is 1 (the origin) and the strict count is 0.
pub fn count_points(p: &Polytope, m: u64, strict: bool, cfg: &CountConfig) -> Result<BigUint> {
    Ok(Slicer::new(p, m, strict, cfg)?.count())
}

pub fn count_record(p: &Polytope, m: u64, cfg: &CountConfig) -> Result<CountRecord> {
    Ok(CountRecord {
        m,
        closed_count: count_points(p, m, false, cfg)?,
        interior_count: count_points(p, m, true, cfg)?,
    })
}

/// The integer points of `mP` (or its strict interior), in lexicographic order.
pub fn lattice_points(
    p: &Polytope,
    m: u64,
    strict: bool,
    cfg: &CountConfig,
) -> Result<Vec<LatticePoint>> {
    Ok(Slicer::new(p, m, strict, cfg)?.points())
}

/// Outcome of comparing the interior lattice points of `mP` with the lattice
/// points of `(m - 1)P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftComparison {
    pub m: u64,
    pub interior_count: usize,
    pub shifted_count: usize,
    /// Lexicographically first point in exactly one of the two sets.
    #[serde(with = "crate::serde_big::option_vec")]
    pub witness: Option<LatticePoint>,
    /// Whether the witness lies in the interior of `mP` (otherwise in `(m-1)P`).
    pub witness_in_interior: Option<bool>,
}

impl ShiftComparison {
    pub fn equal(&self) -> bool {
        self.witness.is_none()
    }
}

/// Compare the interior lattice points of `mP` with the lattice points of
/// `(m - 1)P` as sets, with no precondition on the dual.
pub fn interior_shift_compare(p: &Polytope, m: u64, cfg: &CountConfig) -> Result<ShiftComparison> {
    if m == 0 {
        return Err(Error::ZeroDilation);
    }
    let interior: BTreeSet<LatticePoint> = lattice_points(p, m, true, cfg)?.into_iter().collect();
    let shifted: BTreeSet<LatticePoint> =
        lattice_points(p, m - 1, false, cfg)?.into_iter().collect();
    let witness = interior.symmetric_difference(&shifted).next().cloned();
    let witness_in_interior = witness.as_ref().map(|w| interior.contains(w));
    Ok(ShiftComparison {
        m,
        interior_count: interior.len(),
        shifted_count: shifted.len(),
        witness,
        witness_in_interior,
    })
}

/// Set equality of `mP° ∩ Z^n` and `(m-1)P ∩ Z^n`, for polytopes whose dual is
/// a lattice polytope.
pub fn interior_shift_check(p: &Polytope, m: u64, cfg: &CountConfig) -> Result<bool> {
    if !p.dual_is_lattice()? {
        return Err(Error::DualNotLattice);
    }
    Ok(interior_shift_compare(p, m, cfg)?.equal())
}

/// An axis-aligned box of integer points, bounds inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl IntBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len(), "box bounds must have equal length");
        Self { lo, hi }
    }

    pub fn cube(dim: usize, radius: i64) -> Self {
        Self::new(vec![-radius; dim], vec![radius; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// All points, lexicographic.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for (&lo, &hi) in self.lo.iter().zip(&self.hi) {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out
    }
}

/// Heights `<u, x>` of the lattice points `x` of `region` relative to the
/// hyperplane normal `u`, in lexicographic point order.
///
/// Only integral normals are accepted; every returned height is an integer.
pub fn height_profile(u: &HalfSpace, region: &IntBox) -> Result<Vec<BigInt>> {
    if u.dim() != region.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            got: region.dim(),
        });
    }
    let normal = u.integer_normal().ok_or(Error::NonIntegerNormal)?;
    Ok(region
        .points()
        .iter()
        .map(|x| normal.iter().zip(x).map(|(a, &b)| a * b).sum())
        .collect())
}
