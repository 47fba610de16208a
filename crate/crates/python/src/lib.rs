//! Python bindings. Everything exact crosses the boundary as Python `int` or
//! as `"p/q"` strings; coordinates may be given as `int`, `str` or
//! `fractions.Fraction` (anything whose `str()` is `"p"` or `"p/q"`).

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ehrhart::count::{self, CountConfig, DEFAULT_BUDGET};
use ehrhart::generate::{GeneratorConfig, InstanceGenerator};
use ehrhart::quasi;
use ehrhart::rational::{parse_rational, RationalPoint};
use ehrhart::verify::{self, VerifyConfig, DEFAULT_M_MAX};

create_exception!(ehrhart_py, EhrhartError, PyValueError);

fn err(e: ehrhart::Error) -> PyErr {
    EhrhartError::new_err(e.to_string())
}

fn point(coords: &[Bound<'_, PyAny>]) -> PyResult<RationalPoint> {
    coords
        .iter()
        .map(|c| {
            let text = c.str()?.to_string();
            parse_rational(&text).map_err(EhrhartError::new_err)
        })
        .collect::<PyResult<Vec<_>>>()
        .map(RationalPoint::new)
}

fn budget_cfg(budget: u64) -> CountConfig {
    CountConfig { budget }
}

#[pyclass(name = "Polytope", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolytope {
    inner: ehrhart::Polytope,
}

#[pymethods]
impl PyPolytope {
    /// Convex hull of the given points.
    #[new]
    fn new(vertices: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let points = vertices.iter().map(|v| point(v)).collect::<PyResult<Vec<_>>>()?;
        ehrhart::Polytope::from_vertices(points)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        ehrhart::json::parse_polytope(text)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        ehrhart::catalog::lookup(name)
            .map(|inner| Self { inner })
            .ok_or_else(|| EhrhartError::new_err(format!("no catalog entry {name:?}")))
    }

    fn to_json(&self) -> String {
        ehrhart::json::polytope_to_json(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertices(&self) -> Vec<Vec<String>> {
        self.inner.vertices().iter().map(RationalPoint::to_strings).collect()
    }

    /// `(normal, bound)` pairs for `<normal, x> <= bound`.
    #[getter]
    fn facets(&self) -> Vec<(Vec<String>, String)> {
        self.inner
            .facets()
            .iter()
            .map(|h| {
                (
                    h.normal().iter().map(ToString::to_string).collect(),
                    h.bound().to_string(),
                )
            })
            .collect()
    }

    fn denominator(&self) -> BigInt {
        self.inner.denominator().value().clone()
    }

    fn is_lattice(&self) -> bool {
        self.inner.is_lattice()
    }

    fn origin_is_interior(&self) -> bool {
        self.inner.origin_is_interior()
    }

    fn dual(&self) -> PyResult<Self> {
        self.inner.dual().map(|inner| Self { inner }).map_err(err)
    }

    fn dual_is_lattice(&self) -> PyResult<bool> {
        self.inner.dual_is_lattice().map_err(err)
    }

    fn dilate(&self, m: u64) -> PyResult<Self> {
        self.inner.dilate(m).map(|inner| Self { inner }).map_err(err)
    }

    #[pyo3(signature = (point, strict = false))]
    fn contains(&self, point: Vec<Bound<'_, PyAny>>, strict: bool) -> PyResult<bool> {
        self.inner.contains(&self::point(&point)?, strict).map_err(err)
    }

    #[pyo3(signature = (m, strict = false, budget = DEFAULT_BUDGET))]
    fn count_points(&self, m: u64, strict: bool, budget: u64) -> PyResult<BigInt> {
        count::count_points(&self.inner, m, strict, &budget_cfg(budget))
            .map(BigInt::from)
            .map_err(err)
    }

    #[pyo3(signature = (m, budget = DEFAULT_BUDGET))]
    fn interior_shift_check(&self, m: u64, budget: u64) -> PyResult<bool> {
        count::interior_shift_check(&self.inner, m, &budget_cfg(budget)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Polytope({})", self.inner)
    }
}

#[pyclass(name = "EhrhartQP", frozen)]
struct PyEhrhartQP {
    inner: ehrhart::EhrhartQP,
}

#[pymethods]
impl PyEhrhartQP {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    /// `table[i][r]`, the coefficient of `C(l + n - i, n)` at residue `r`.
    #[getter]
    fn table(&self) -> Vec<Vec<BigInt>> {
        self.inner.table().rows().to_vec()
    }

    fn evaluate(&self, m: BigInt) -> BigInt {
        self.inner.evaluate(&m)
    }

    fn delta_vector(&self) -> Vec<BigInt> {
        quasi::delta_vector(&self.inner).entries().to_vec()
    }

    /// `c_j(r)` as `"p/q"` strings, lowest degree first.
    fn periodic_coefficients(&self, r: usize) -> PyResult<Vec<String>> {
        if r >= self.inner.k() {
            return Err(EhrhartError::new_err(format!("residue {r} out of range")));
        }
        Ok(self
            .inner
            .periodic_coefficients(r)
            .iter()
            .map(ToString::to_string)
            .collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "EhrhartQP(n={}, k={}, table={})",
            self.inner.n(),
            self.inner.k(),
            self.inner.table()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (p, budget = DEFAULT_BUDGET))]
fn fit_qp(p: &PyPolytope, budget: u64) -> PyResult<PyEhrhartQP> {
    quasi::fit_qp(&p.inner, &budget_cfg(budget))
        .map(|inner| PyEhrhartQP { inner })
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (p, budget = DEFAULT_BUDGET))]
fn delta_vector(p: &PyPolytope, budget: u64) -> PyResult<Vec<BigInt>> {
    let qp = quasi::fit_qp(&p.inner, &budget_cfg(budget)).map_err(err)?;
    Ok(quasi::delta_vector(&qp).entries().to_vec())
}

#[pyfunction]
#[pyo3(signature = (p, budget = DEFAULT_BUDGET))]
fn delta_vector_series(p: &PyPolytope, budget: u64) -> PyResult<Vec<BigInt>> {
    quasi::delta_vector_series(&p.inner, &budget_cfg(budget))
        .map(|d| d.entries().to_vec())
        .map_err(err)
}

#[pyfunction]
fn binomial(x: BigInt, n: u32) -> BigInt {
    quasi::binomial(&x, n)
}

#[pyfunction]
fn is_palindromic(entries: Vec<BigInt>) -> bool {
    let k = entries.len();
    verify::check_palindrome(&ehrhart::DeltaVector::new(0, k, entries)).passed
}

/// The full verification report, as a dict parsed from its JSON form.
#[pyfunction(name = "verify")]
#[pyo3(signature = (p, polytope_id = "polytope", m_max = DEFAULT_M_MAX, budget = DEFAULT_BUDGET))]
fn verify_report<'py>(
    py: Python<'py>,
    p: &PyPolytope,
    polytope_id: &str,
    m_max: u64,
    budget: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = VerifyConfig {
        m_max,
        count: budget_cfg(budget),
    };
    let report = verify::full_report(polytope_id, &p.inner, &cfg).map_err(err)?;
    let text = verify::report_to_json(&report);
    PyModule::import(py, "json")?.call_method1("loads", (text,))
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    ehrhart::catalog::names().collect()
}

fn generate(
    seed: u64,
    dim: usize,
    bound: i64,
    denominator_bound: i64,
    count: usize,
    draw: impl Fn(&mut InstanceGenerator) -> ehrhart::Result<ehrhart::Polytope>,
) -> PyResult<Vec<PyPolytope>> {
    let cfg = GeneratorConfig::new(seed, dim)
        .with_coordinate_bound(bound)
        .with_denominator_bound(denominator_bound);
    let mut g = InstanceGenerator::new(cfg);
    (0..count)
        .map(|_| draw(&mut g).map(|inner| PyPolytope { inner }).map_err(err))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (seed, dim, bound = 2, count = 1))]
fn gen_lattice(seed: u64, dim: usize, bound: i64, count: usize) -> PyResult<Vec<PyPolytope>> {
    generate(seed, dim, bound, 1, count, InstanceGenerator::lattice_with_interior_origin)
}

#[pyfunction]
#[pyo3(signature = (seed, dim, bound = 2, count = 1))]
fn gen_dual_of_lattice(seed: u64, dim: usize, bound: i64, count: usize) -> PyResult<Vec<PyPolytope>> {
    generate(seed, dim, bound, 1, count, InstanceGenerator::dual_of_lattice)
}

#[pyfunction]
#[pyo3(signature = (seed, dim, bound = 2, denominator_bound = 3, count = 1))]
fn gen_rational_control(
    seed: u64,
    dim: usize,
    bound: i64,
    denominator_bound: i64,
    count: usize,
) -> PyResult<Vec<PyPolytope>> {
    generate(seed, dim, bound, denominator_bound, count, InstanceGenerator::rational_control)
}

#[pymodule]
fn ehrhart_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("EhrhartError", m.py().get_type::<EhrhartError>())?;
    m.add_class::<PyPolytope>()?;
    m.add_class::<PyEhrhartQP>()?;
    m.add_function(wrap_pyfunction!(fit_qp, m)?)?;
    m.add_function(wrap_pyfunction!(delta_vector, m)?)?;
    m.add_function(wrap_pyfunction!(delta_vector_series, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(is_palindromic, m)?)?;
    m.add_function(wrap_pyfunction!(verify_report, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(gen_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(gen_dual_of_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(gen_rational_control, m)?)?;
    Ok(())
}
