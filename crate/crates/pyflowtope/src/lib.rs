//! Python bindings: quivers, lattice polytopes, tightening, classification,
//! pulling triangulations, Ehrhart polynomials and toric verdicts.

use std::collections::BTreeMap;

use flowtope::catalog;
use flowtope::ehrhart::interpolate_ehrhart;
use flowtope::exact_math::Rational;
use flowtope::polytopes::{self, LatticePolytope};
use flowtope::quivers::{self, Bounds, Quiver, Weight};
use flowtope::subdivision;
use flowtope::toric;
use flowtope::triangulation::{self, Triangulation};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

#[pyclass(name = "Quiver", module = "pyflowtope", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyQuiver {
    inner: Quiver,
}

#[pymethods]
impl PyQuiver {
    /// `arrows` is a list of `(id, tail, head)` triples.
    #[new]
    fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> PyResult<Self> {
        Ok(PyQuiver { inner: Quiver::new(vertices, arrows).map_err(err)? })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().to_vec()
    }

    #[getter]
    fn arrows(&self) -> Vec<(String, String, String)> {
        self.inner.arrows().iter().map(|a| (a.id.clone(), a.tail.clone(), a.head.clone())).collect()
    }

    fn chi(&self) -> i64 {
        self.inner.chi()
    }

    fn is_acyclic(&self) -> bool {
        self.inner.is_acyclic()
    }

    fn __repr__(&self) -> String {
        format!("Quiver({} vertices, {} arrows)", self.inner.vertices().len(), self.inner.arrows().len())
    }
}

#[pyclass(name = "LatticePolytope", module = "pyflowtope", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolytope {
    inner: LatticePolytope,
}

fn ambient_of(points: &[Vec<i64>]) -> PyResult<usize> {
    points.first().map(Vec::len).ok_or_else(|| PyValueError::new_err("no points"))
}

#[pymethods]
impl PyPolytope {
    /// All lattice points of a polytope; they are sorted.
    #[staticmethod]
    fn from_points(points: Vec<Vec<i64>>) -> PyResult<Self> {
        let n = ambient_of(&points)?;
        Ok(PyPolytope { inner: LatticePolytope::from_points(n, points).map_err(err)? })
    }

    /// Like `from_points` but keeps the given order.
    #[staticmethod]
    fn from_table(points: Vec<Vec<i64>>) -> PyResult<Self> {
        let n = ambient_of(&points)?;
        Ok(PyPolytope { inner: LatticePolytope::from_table(n, points).map_err(err)? })
    }

    /// A built-in point table such as `"V.b(4)"`.
    #[staticmethod]
    fn table(name: &str) -> PyResult<Self> {
        catalog::table_polytope(name).map(|inner| PyPolytope { inner }).ok_or_else(|| err(format!("unknown table {name:?}")))
    }

    #[getter]
    fn points(&self) -> Vec<Vec<i64>> {
        self.inner.points().to_vec()
    }

    /// Facets as `(normal, offset)` with `normal . x >= offset`.
    #[getter]
    fn facets(&self) -> Vec<(Vec<i64>, i64)> {
        self.inner.facets().iter().map(|f| (f.normal.clone(), f.offset)).collect()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    fn is_compressed(&self) -> bool {
        polytopes::is_compressed(&self.inner)
    }

    fn normalized_volume(&self) -> u64 {
        polytopes::normalized_volume(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.points().len()
    }

    fn __repr__(&self) -> String {
        format!(
            "LatticePolytope(dim={}, points={}, facets={})",
            self.inner.dim(),
            self.inner.points().len(),
            self.inner.facets().len()
        )
    }
}

fn bounds(lower: Option<BTreeMap<String, i64>>, upper: Option<BTreeMap<String, i64>>) -> Bounds {
    Bounds { lower: lower.unwrap_or_default(), upper: upper.unwrap_or_default() }
}

/// Tight pair with an equivalent flow polytope.
#[pyfunction]
fn tighten(q: &PyQuiver, theta: Weight) -> PyResult<(PyQuiver, Weight)> {
    let (t, w) = quivers::tighten(&q.inner, &theta).map_err(err)?;
    Ok((PyQuiver { inner: t }, w))
}

#[pyfunction]
#[pyo3(signature = (q, theta, lower=None, upper=None))]
fn lattice_points(
    q: &PyQuiver,
    theta: Weight,
    lower: Option<BTreeMap<String, i64>>,
    upper: Option<BTreeMap<String, i64>>,
) -> PyResult<Vec<Vec<i64>>> {
    quivers::lattice_points(&q.inner, &theta, &bounds(lower, upper)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (q, theta, lower=None, upper=None))]
fn flow_polytope(
    q: &PyQuiver,
    theta: Weight,
    lower: Option<BTreeMap<String, i64>>,
    upper: Option<BTreeMap<String, i64>>,
) -> PyResult<PyPolytope> {
    Ok(PyPolytope { inner: quivers::flow_polytope(&q.inner, &theta, &bounds(lower, upper)).map_err(err)? })
}

/// Representatives of the prime compressed flow polytopes of dimension `dim`.
#[pyfunction]
fn classify(py: Python<'_>, dim: usize) -> PyResult<Vec<PyPolytope>> {
    let classes = py.detach(|| subdivision::classify_compressed(dim)).map_err(err)?;
    Ok(classes.into_iter().map(|c| PyPolytope { inner: c.polytope }).collect())
}

#[pyfunction]
fn equivalent(p1: &PyPolytope, p2: &PyPolytope) -> bool {
    polytopes::equivalent(&p1.inner, &p2.inner).is_some()
}

fn pulled(p: &PyPolytope, pull: Option<Vec<usize>>) -> PyResult<Triangulation> {
    triangulation::try_pulling_triangulation(&p.inner, &pull.unwrap_or_default()).map_err(err)
}

/// Pulling triangulation as a dict with cells, non-faces, unimodularity and
/// regularity.
#[pyfunction]
#[pyo3(signature = (p, pull=None))]
fn triangulate<'py>(py: Python<'py>, p: &PyPolytope, pull: Option<Vec<usize>>) -> PyResult<Bound<'py, PyAny>> {
    let t = pulled(p, pull)?;
    let nonfaces: Vec<Vec<usize>> = triangulation::minimal_nonfaces(&t).into_iter().map(|f| f.0).collect();
    let d = pyo3::types::PyDict::new(py);
    d.set_item("cells", t.maximal_cells().to_vec())?;
    d.set_item("nonfaces", nonfaces)?;
    d.set_item("unimodular", triangulation::is_unimodular(&t))?;
    d.set_item("regular", triangulation::certify_regular(&t).is_some())?;
    Ok(d.into_any())
}

/// Coefficients of the Ehrhart polynomial, constant term first, as fractions.
#[pyfunction]
fn ehrhart<'py>(py: Python<'py>, p: &PyPolytope) -> PyResult<Bound<'py, PyList>> {
    let e = interpolate_ehrhart(&p.inner);
    let items = e.coefficients.iter().map(|c| fraction(py, c)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

#[pyfunction]
fn h_star(p: &PyPolytope) -> Vec<i64> {
    interpolate_ehrhart(&p.inner).h_star()
}

#[pyfunction]
fn generated_in_degree(p: &PyPolytope, degree: usize) -> bool {
    toric::generated_in_degree(&p.inner, degree)
}

/// Generators of the initial ideal of a pulling triangulation, as index lists.
#[pyfunction]
#[pyo3(signature = (p, pull=None))]
fn initial_ideal(p: &PyPolytope, pull: Option<Vec<usize>>) -> PyResult<Vec<Vec<usize>>> {
    let t = pulled(p, pull)?;
    Ok(toric::initial_ideal_from_nonfaces(&t).map_err(err)?.into_iter().map(|m| m.0).collect())
}

/// Verdict of one reproduction claim, e.g. `"ehrhart"`.
#[pyfunction]
fn reproduce(py: Python<'_>, claim: &str) -> PyResult<bool> {
    if !flowtope::cli::CLAIMS.contains(&claim) {
        return Err(err(format!("unknown claim {claim:?}")));
    }
    Ok(py.detach(|| flowtope::cli::reproduce(claim).pass))
}

#[pymodule]
fn pyflowtope(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuiver>()?;
    m.add_class::<PyPolytope>()?;
    m.add_function(wrap_pyfunction!(tighten, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_points, m)?)?;
    m.add_function(wrap_pyfunction!(flow_polytope, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(triangulate, m)?)?;
    m.add_function(wrap_pyfunction!(ehrhart, m)?)?;
    m.add_function(wrap_pyfunction!(h_star, m)?)?;
    m.add_function(wrap_pyfunction!(generated_in_degree, m)?)?;
    m.add_function(wrap_pyfunction!(initial_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    Ok(())
}
