//! Full-dimensional rational polytopes in vertex and facet form.
//!
//! Facets come from an exhaustive search over affinely independent
//! `n`-subsets of the input points: each subset spans a candidate hyperplane,
//! which is kept when every point lies on one side of it. With `N` points this
//! is `O(C(N, n) * N)` exact rational operations, fine for a few dozen
//! vertices in dimension at most four. A point is a vertex iff the normals of
//! the facets it lies on span `Q^n`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::halfspace::HalfSpace;
use crate::linalg;
use crate::rational::{self, Rational, RationalPoint};

/// Default cap on the ambient dimension.
pub const DEFAULT_MAX_DIM: usize = 4;

/// Smallest `k >= 1` such that `kP` has integer vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Denominator(BigInt);

impl Denominator {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.0.to_usize()
    }
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A full-dimensional convex polytope with rational vertices.
///
/// Vertices are irredundant and sorted lexicographically; facets are stored
/// with primitive integer normals and sorted, so two polytopes are equal iff
/// they have the same vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<HalfSpace>,
}

impl Polytope {
    /// Convex hull of `points`, with the default dimension cap.
    pub fn from_vertices(points: Vec<RationalPoint>) -> Result<Self> {
        Self::from_vertices_with_max_dim(points, DEFAULT_MAX_DIM)
    }

    pub fn from_vertices_with_max_dim(points: Vec<RationalPoint>, max_dim: usize) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyInput)?.dim();
        if dim == 0 {
            return Err(Error::DimensionDeficient {
                hull_dim: 0,
                ambient_dim: 0,
            });
        }
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        if dim > max_dim {
            return Err(Error::DimensionTooLarge { dim, max: max_dim });
        }

        let points: Vec<RationalPoint> = points
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let hull_dim = affine_dimension(&points);
        if hull_dim < dim {
            return Err(Error::DimensionDeficient {
                hull_dim,
                ambient_dim: dim,
            });
        }

        let facets = hull_facets(&points, dim);
        let vertices = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<Rational>> = facets
                    .iter()
                    .filter(|h| h.is_tight(p))
                    .map(|h| h.normal().to_vec())
                    .collect();
                linalg::rank(&tight) == dim
            })
            .collect();
        Ok(Self {
            dim,
            vertices,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Facets normalized to bound 1. Requires the origin strictly inside.
    pub fn unit_facets(&self) -> Result<Vec<HalfSpace>> {
        self.facets
            .iter()
            .map(|h| h.unit_bound().ok_or(Error::OriginNotInterior))
            .collect()
    }

    pub fn contains(&self, x: &RationalPoint, strict: bool) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        Ok(self.facets.iter().all(|h| h.contains(x, strict)))
    }

    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|h| h.bound().is_positive())
    }

    /// The polar dual `{u : <u, v> <= 1 for all v in P}`.
    ///
    /// Its vertices are the facet normals of `P` scaled to bound 1.
    pub fn dual(&self) -> Result<Polytope> {
        let vertices = self
            .unit_facets()?
            .into_iter()
            .map(|h| RationalPoint::new(h.normal().to_vec()))
            .collect();
        Self::from_vertices_with_max_dim(vertices, usize::MAX)
    }

    /// Whether the dual is a lattice polytope, read off the unit-bound facet
    /// normals without building the dual.
    pub fn dual_is_lattice(&self) -> Result<bool> {
        Ok(self
            .unit_facets()?
            .iter()
            .all(HalfSpace::has_integral_normal))
    }

    pub fn denominator(&self) -> Denominator {
        Denominator(rational::denominator_lcm(
            self.vertices.iter().flat_map(RationalPoint::coords),
        ))
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(RationalPoint::is_integral)
    }

    /// The dilation `mP`. `0P` is a single point, not a polytope, and is rejected.
    pub fn dilate(&self, m: u64) -> Result<Polytope> {
        if m == 0 {
            return Err(Error::ZeroDilation);
        }
        self.scale(&Rational::from_integer(BigInt::from(m)))
    }

    pub(crate) fn scale(&self, factor: &Rational) -> Result<Polytope> {
        if !factor.is_positive() {
            return Err(Error::ZeroDilation);
        }
        // positive scaling preserves extremality and ordering
        let factor_is_one = factor.is_one();
        let vertices = self.vertices.iter().map(|v| v.scale(factor)).collect();
        let facets = self
            .facets
            .iter()
            .map(|h| {
                if factor_is_one {
                    h.clone()
                } else {
                    HalfSpace::new(h.normal().to_vec(), h.bound() * factor)
                        .expect("normal is nonzero")
                }
            })
            .collect();
        Ok(Polytope {
            dim: self.dim,
            vertices,
            facets,
        })
    }

    /// Per-axis `(min, max)` over the vertices.
    pub fn bounding_box(&self) -> Vec<(Rational, Rational)> {
        (0..self.dim)
            .map(|axis| {
                let (lo, hi) = self
                    .vertices
                    .iter()
                    .map(|v| &v[axis])
                    .minmax()
                    .into_option()
                    .expect("polytope has vertices");
                (lo.clone(), hi.clone())
            })
            .collect()
    }
}

/// The facet-defining half-spaces of a full-dimensional polytope.
pub fn facet_enumeration(p: &Polytope) -> Vec<HalfSpace> {
    p.facets().to_vec()
}

fn affine_dimension(points: &[RationalPoint]) -> usize {
    let Some((base, rest)) = points.split_first() else {
        return 0;
    };
    let rows: Vec<Vec<Rational>> = rest.iter().map(|p| p.sub(base)).collect();
    linalg::rank(&rows)
}

fn hull_facets(points: &[RationalPoint], dim: usize) -> Vec<HalfSpace> {
    let mut found = BTreeSet::new();
    for subset in (0..points.len()).combinations(dim) {
        let base = &points[subset[0]];
        let rows: Vec<Vec<Rational>> = subset[1..].iter().map(|&i| points[i].sub(base)).collect();
        if linalg::rank(&rows) != dim - 1 {
            continue;
        }
        let normal = linalg::null_space(&rows, dim)
            .pop()
            .expect("rank n-1 system has a one-dimensional kernel");
        let bound = base.dot(&normal);
        let values: Vec<Rational> = points.iter().map(|p| p.dot(&normal)).collect();
        let half = if values.iter().all(|v| *v <= bound) {
            HalfSpace::new(normal, bound)
        } else if values.iter().all(|v| *v >= bound) {
            HalfSpace::new(normal.into_iter().map(|u| -u).collect(), -bound)
        } else {
            continue;
        };
        found.insert(half.expect("normal is nonzero").primitive());
    }
    found.into_iter().collect()
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
