//! The polytope file format: `{"dim": n, "vertices": [["p/q", ...], ...]}`.
//!
//! Coordinates are strings `"p"` or `"p/q"`. JSON numbers (integer or float)
//! are rejected as coordinates so no value ever passes through floating point.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{Polytope, DEFAULT_MAX_DIM};
use crate::rational::{self, Rational, RationalPoint};

struct Coord(Rational);

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoordVisitor;

        impl Visitor<'_> for CoordVisitor {
            type Value = Coord;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational coordinate string \"p\" or \"p/q\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coord, E> {
                rational::parse_rational(v).map(Coord).map_err(E::custom)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Coord, E> {
                Err(E::custom(format!(
                    "floating-point coordinate {v} not allowed; write it as a \"p/q\" string"
                )))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coord, E> {
                Err(E::custom(format!(
                    "numeric coordinate {v} not allowed; write it as the string \"{v}\""
                )))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coord, E> {
                Err(E::custom(format!(
                    "numeric coordinate {v} not allowed; write it as the string \"{v}\""
                )))
            }
        }

        deserializer.deserialize_any(CoordVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeIn {
    dim: usize,
    vertices: Vec<Vec<Coord>>,
}

/// Serialized form of a polytope, usable inside larger JSON documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl From<&Polytope> for PolytopeDoc {
    fn from(p: &Polytope) -> Self {
        Self {
            dim: p.dim(),
            vertices: p.vertices().iter().map(RationalPoint::to_strings).collect(),
        }
    }
}

fn parse_error(err: serde_json::Error) -> Error {
    Error::Parse {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

/// Parse the raw vertex list without building the hull.
pub fn parse_points(text: &str) -> Result<(usize, Vec<RationalPoint>)> {
    let doc: PolytopeIn = serde_json::from_str(text).map_err(parse_error)?;
    for (i, v) in doc.vertices.iter().enumerate() {
        if v.len() != doc.dim {
            return Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!(
                    "vertex {i} has {} coordinates but dim is {}",
                    v.len(),
                    doc.dim
                ),
            });
        }
    }
    let points = doc
        .vertices
        .into_iter()
        .map(|v| RationalPoint::new(v.into_iter().map(|c| c.0).collect()))
        .collect();
    Ok((doc.dim, points))
}

pub fn parse_polytope(text: &str) -> Result<Polytope> {
    parse_polytope_with_max_dim(text, DEFAULT_MAX_DIM)
}

pub fn parse_polytope_with_max_dim(text: &str, max_dim: usize) -> Result<Polytope> {
    let (dim, points) = parse_points(text)?;
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if dim == 0 {
        return Err(Error::DimensionDeficient {
            hull_dim: 0,
            ambient_dim: 0,
        });
    }
    Polytope::from_vertices_with_max_dim(points, max_dim)
}

/// Compact canonical JSON: vertices in lexicographic order, lowest terms.
pub fn polytope_to_json(p: &Polytope) -> String {
    serde_json::to_string(&PolytopeDoc::from(p)).expect("plain data serializes")
}
