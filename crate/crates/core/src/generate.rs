//! Seeded test-polytope generators.
//!
//! Randomness comes from SplitMix64 (Steele, Lea and Flood), chosen because
//! it is a few lines in any language: with 64-bit wrapping arithmetic,
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! An integer in `[lo, hi]` is `lo + next() mod (hi - lo + 1)`. A candidate
//! polytope draws its vertex count first, then its coordinates in row-major
//! order; rejected candidates are discarded and the stream simply continues.

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::{Rational, RationalPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `[lo, hi]` (modulo reduction).
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        (lo as i128 + (self.next_u64() as u128 % span) as i128) as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub dim: usize,
    /// Inclusive range of the number of points drawn per candidate.
    pub vertex_count: (usize, usize),
    /// Coordinates (lattice) or coordinate magnitudes (rational) lie in `[-B, B]`.
    pub coordinate_bound: i64,
    /// Largest coordinate denominator for rational controls.
    pub denominator_bound: i64,
    pub max_attempts: usize,
}

impl GeneratorConfig {
    pub fn new(seed: u64, dim: usize) -> Self {
        Self {
            seed,
            dim,
            vertex_count: (dim + 1, 2 * dim + 2),
            coordinate_bound: 2,
            denominator_bound: 3,
            max_attempts: 1000,
        }
    }

    pub fn with_vertex_count(mut self, min: usize, max: usize) -> Self {
        self.vertex_count = (min, max);
        self
    }

    pub fn with_coordinate_bound(mut self, bound: i64) -> Self {
        self.coordinate_bound = bound;
        self
    }

    pub fn with_denominator_bound(mut self, bound: i64) -> Self {
        self.denominator_bound = bound;
        self
    }
}

/// A deterministic stream of polytopes for one configuration.
#[derive(Debug, Clone)]
pub struct InstanceGenerator {
    cfg: GeneratorConfig,
    rng: SplitMix64,
}

impl InstanceGenerator {
    pub fn new(cfg: GeneratorConfig) -> Self {
        let rng = SplitMix64::new(cfg.seed);
        Self { cfg, rng }
    }

    pub fn config(&self) -> &GeneratorConfig {
        &self.cfg
    }

    fn sample(&mut self, mut coord: impl FnMut(&mut SplitMix64) -> Rational) -> Result<Polytope> {
        let (min, max) = self.cfg.vertex_count;
        for _ in 0..self.cfg.max_attempts {
            let count = self.rng.range(min as i64, max as i64) as usize;
            let points: Vec<RationalPoint> = (0..count)
                .map(|_| RationalPoint::new((0..self.cfg.dim).map(|_| coord(&mut self.rng)).collect()))
                .collect();
            if let Ok(p) = Polytope::from_vertices(points) {
                if p.origin_is_interior() {
                    return Ok(p);
                }
            }
        }
        Err(Error::GenerationExhausted {
            attempts: self.cfg.max_attempts,
        })
    }

    /// A lattice polytope in `[-B, B]^n` with the origin strictly inside.
    pub fn lattice_with_interior_origin(&mut self) -> Result<Polytope> {
        let b = self.cfg.coordinate_bound;
        self.sample(|rng| Rational::from_integer(rng.range(-b, b).into()))
    }

    /// The dual of a lattice polytope, so its own dual is a lattice polytope.
    pub fn dual_of_lattice(&mut self) -> Result<Polytope> {
        self.lattice_with_interior_origin()?.dual()
    }

    /// A rational polytope with the origin strictly inside and no condition on
    /// its dual. Each coordinate draws a denominator `d` in
    /// `[1, denominator_bound]`, then a numerator in `[-B d, B d]`.
    pub fn rational_control(&mut self) -> Result<Polytope> {
        let b = self.cfg.coordinate_bound;
        let dmax = self.cfg.denominator_bound.max(1);
        self.sample(|rng| {
            let d = rng.range(1, dmax);
            let p = rng.range(-b * d, b * d);
            Rational::new(p.into(), d.into())
        })
    }
}

pub fn gen_lattice_with_interior_origin(cfg: &GeneratorConfig) -> Result<Polytope> {
    InstanceGenerator::new(cfg.clone()).lattice_with_interior_origin()
}

pub fn gen_dual_of_lattice(cfg: &GeneratorConfig) -> Result<Polytope> {
    InstanceGenerator::new(cfg.clone()).dual_of_lattice()
}

pub fn gen_rational_control(cfg: &GeneratorConfig) -> Result<Polytope> {
    InstanceGenerator::new(cfg.clone()).rational_control()
}
