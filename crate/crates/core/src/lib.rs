//! Exact Ehrhart quasi-polynomials and delta-vectors of rational polytopes.
//!
//! A polytope `P` with the origin strictly inside whose polar dual is a
//! lattice polytope has a palindromic delta-vector. This crate computes the
//! objects involved with exact arithmetic and checks that symmetry, together
//! with the identities it rests on, on concrete polytopes:
//!
//! - [`polytope`]: vertex/facet representations, duality, dilation, denominator;
//! - [`count`]: lattice points of `mP` and of its interior;
//! - [`quasi`]: the quasi-polynomial in the per-residue binomial basis and
//!   the delta-vector, by fitting and by series multiplication;
//! - [`verify`]: reciprocity, symmetry and characterization checks;
//! - [`generate`] and [`catalog`]: test polytopes.

pub mod catalog;
pub mod count;
pub mod error;
pub mod generate;
pub mod halfspace;
pub mod json;
mod linalg;
pub mod polytope;
pub mod quasi;
pub mod rational;
mod serde_big;
pub mod verify;

pub use count::{count_points, CountConfig, CountRecord};
pub use error::{Error, Result};
pub use halfspace::HalfSpace;
pub use polytope::{Denominator, Polytope};
pub use quasi::{delta_vector, delta_vector_series, fit_qp, DeltaVector, EhrhartQP, ResidueDeltaTable};
pub use rational::{Rational, RationalPoint};
pub use verify::{full_report, VerificationReport, VerifyConfig};
