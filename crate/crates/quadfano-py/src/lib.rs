//! Python bindings for the quadfano engine.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use quadfano::catalog::{catalog, SarkisovRecord};
use quadfano::classifier::{Classification, Containment, CurveInstance, TriState};
use quadfano::lattice::{self, DivisorClass, IntersectionLattice};
use quadfano::tables::{generate, Format, TableId};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Lattice", frozen)]
struct PyLattice(Arc<IntersectionLattice>);

#[pymethods]
impl PyLattice {
    #[staticmethod]
    fn k3_rank2(g: i64, d: i64) -> Self {
        Self(lattice::make_k3_rank2(g, d))
    }

    #[staticmethod]
    fn k3_rank3(g: i64, d: i64, n: i64, cg: i64) -> Self {
        Self(lattice::make_k3_rank3(g, d, n, cg))
    }

    #[staticmethod]
    fn quadric_smooth() -> Self {
        Self(lattice::make_quadric_smooth())
    }

    #[staticmethod]
    fn f2() -> Self {
        Self(lattice::make_f2())
    }

    #[staticmethod]
    fn dp4() -> Self {
        Self(lattice::make_dp4())
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    fn h(&self) -> PyDivisorClass {
        PyDivisorClass(self.0.h())
    }

    fn k(&self) -> PyDivisorClass {
        PyDivisorClass(self.0.k())
    }

    fn class_(&self, coords: Vec<i64>) -> PyResult<PyDivisorClass> {
        self.0.class(&coords).map(PyDivisorClass).map_err(err)
    }
}

#[pyclass(name = "DivisorClass", frozen)]
struct PyDivisorClass(DivisorClass);

#[pymethods]
impl PyDivisorClass {
    #[getter]
    fn coords(&self) -> Vec<i64> {
        self.0.coords().to_vec()
    }

    fn intersect(&self, other: &PyDivisorClass) -> PyResult<i64> {
        self.0.intersect(&other.0).map_err(err)
    }

    fn degree(&self) -> PyResult<i64> {
        self.0.degree().map_err(err)
    }

    fn genus(&self) -> PyResult<i64> {
        self.0.genus().map_err(err)
    }

    fn __add__(&self, other: &PyDivisorClass) -> PyResult<PyDivisorClass> {
        self.0.add(&other.0).map(PyDivisorClass).map_err(err)
    }

    fn __sub__(&self, other: &PyDivisorClass) -> PyResult<PyDivisorClass> {
        self.0.sub(&other.0).map(PyDivisorClass).map_err(err)
    }

    fn __eq__(&self, other: &PyDivisorClass) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DivisorClass({})", self.0)
    }
}

#[pyclass(name = "Classification", frozen)]
struct PyClassification(Classification);

#[pymethods]
impl PyClassification {
    #[getter]
    fn verdict(&self) -> &'static str {
        self.0.verdict.as_str()
    }

    #[getter]
    fn exit_code(&self) -> i32 {
        self.0.verdict.exit_code()
    }

    #[getter]
    fn reasons(&self) -> Vec<String> {
        self.0.reasons.clone()
    }

    #[getter]
    fn missing(&self) -> Vec<String> {
        self.0.missing.clone()
    }

    #[getter]
    fn n_max(&self) -> Option<i64> {
        self.0.n_max
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Classification({}, g={}, d={})",
            self.verdict(),
            self.0.instance.g,
            self.0.instance.d
        )
    }
}

#[pyclass(name = "SarkisovRecord", frozen)]
struct PySarkisovRecord(SarkisovRecord);

#[pymethods]
impl PySarkisovRecord {
    #[getter]
    fn g(&self) -> i64 {
        self.0.g
    }

    #[getter]
    fn d(&self) -> i64 {
        self.0.d
    }

    #[getter]
    fn minus_k_cubed(&self) -> i64 {
        self.0.minus_k_cubed
    }

    #[getter]
    fn link_type(&self) -> &'static str {
        self.0.link_type.as_str()
    }

    #[getter]
    fn target(&self) -> String {
        self.0.target.clone()
    }

    #[getter]
    fn ambiguous(&self) -> bool {
        self.0.ambiguous
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(err)
    }
}

fn tri(v: Option<bool>) -> TriState {
    match v {
        Some(true) => TriState::Yes,
        Some(false) => TriState::No,
        None => TriState::Unknown,
    }
}

/// classify(g, d, containment=None, has_4secant_line=None, has_7secant_conic=None)
///
/// containment is one of "hyperplane", "quadric_section", "cubic_section" or None.
#[pyfunction]
#[pyo3(signature = (g, d, containment=None, has_4secant_line=None, has_7secant_conic=None))]
fn classify(
    g: i64,
    d: i64,
    containment: Option<&str>,
    has_4secant_line: Option<bool>,
    has_7secant_conic: Option<bool>,
) -> PyResult<PyClassification> {
    let containment = match containment {
        None => Containment::Unknown,
        Some("hyperplane") => Containment::Hyperplane,
        Some("quadric_section") => Containment::SmoothQuadricSection,
        Some("cubic_section") => Containment::SmoothCubicSection,
        Some(other) => return Err(err(format!("unknown containment {other:?}"))),
    };
    let c = CurveInstance::new(g, d)
        .with_containment(containment)
        .with_secants(tri(has_4secant_line), tri(has_7secant_conic));
    quadfano::classify(&c).map(PyClassification).map_err(err)
}

#[pyfunction]
fn genus_bound_b(d: i64) -> PyResult<i64> {
    quadfano::k3::genus_bound_b(d).map(|b| b.value).map_err(err)
}

/// (raw, refined) secant-degree bound.
#[pyfunction]
fn nmax(g: i64, d: i64) -> PyResult<(i64, i64)> {
    quadfano::nmax_refined(g, d)
        .map(|r| (r.raw, r.refined))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (table_id, format="json"))]
fn table(table_id: &str, format: &str) -> PyResult<String> {
    let id: TableId = table_id.parse().map_err(err)?;
    let format: Format = format.parse().map_err(err)?;
    generate(id).and_then(|t| t.render(format)).map_err(err)
}

#[pyfunction(name = "catalog")]
fn py_catalog() -> Vec<PySarkisovRecord> {
    catalog().into_iter().map(PySarkisovRecord).collect()
}

/// True when every regenerated table matches its fixture up to known flags.
#[pyfunction]
fn audit() -> PyResult<bool> {
    quadfano::audit::run_audit()
        .map(|r| quadfano::audit::audit_passed(&r))
        .map_err(err)
}

#[pymodule]
fn quadfano_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLattice>()?;
    m.add_class::<PyDivisorClass>()?;
    m.add_class::<PyClassification>()?;
    m.add_class::<PySarkisovRecord>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(genus_bound_b, m)?)?;
    m.add_function(wrap_pyfunction!(nmax, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(py_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    Ok(())
}
