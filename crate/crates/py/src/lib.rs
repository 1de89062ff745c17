//! Python bindings: complexes, Stanley–Reisner ideals, homology and the
//! Cohen–Macaulay tests for second powers. Reports come back as plain
//! dicts with the same layout as the CLI's JSON.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyType;
use serde::Serialize;

use engine::complex::named::NamedComplex;
use engine::complex::VertexSet;
use engine::homology::FieldSpec;
use engine::{criteria, homology, ideal, takayama, Error};

create_exception!(srsq, BudgetExceeded, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn field(name: &str) -> PyResult<FieldSpec> {
    name.parse().map_err(err)
}

fn face(vertices: Vec<usize>, n: usize) -> PyResult<VertexSet> {
    if let Some(&v) = vertices.iter().find(|&&v| v == 0 || v > n) {
        return Err(err(Error::VertexOutOfRange { vertex: v, n }));
    }
    Ok(VertexSet::from_vertices(vertices))
}

/// A simplicial complex on `{1, ..., n}` given by its facets.
#[pyclass(name = "SimplicialComplex", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyComplex(engine::SimplicialComplex);

#[pymethods]
impl PyComplex {
    #[new]
    fn new(n: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        engine::SimplicialComplex::new(n, &facets).map(PyComplex).map_err(err)
    }

    /// Builds a named complex such as `"rp2"`, `"cycle:5"` or `"cross-stellar:3"`.
    #[classmethod]
    fn named(_cls: &Bound<'_, PyType>, spec: &str) -> PyResult<Self> {
        let named: NamedComplex = spec.parse().map_err(err)?;
        named.build().map(PyComplex).map_err(err)
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PyComplex)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).unwrap()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        self.0.facet_lists()
    }

    #[getter]
    fn dim(&self) -> isize {
        self.0.dim()
    }

    fn is_pure(&self) -> bool {
        self.0.is_pure()
    }

    fn f_vector(&self) -> Vec<usize> {
        self.0.f_vector().counts
    }

    /// The link with its vertices renumbered `1..m`, and the original labels.
    fn link(&self, face_: Vec<usize>) -> PyResult<(PyComplex, Vec<usize>)> {
        let r = self.0.link(face(face_, self.0.n())?).map_err(err)?;
        Ok((PyComplex(r.complex), r.labels))
    }

    fn star(&self, face_: Vec<usize>) -> PyResult<PyComplex> {
        self.0.star(face(face_, self.0.n())?).map(PyComplex).map_err(err)
    }

    fn stellar_subdivision(&self, face_: Vec<usize>) -> PyResult<PyComplex> {
        let f = face(face_, self.0.n())?;
        self.0.stellar_subdivision(f).map(PyComplex).map_err(err)
    }

    fn join(&self, other: &PyComplex) -> PyResult<PyComplex> {
        self.0.join(&other.0).map(PyComplex).map_err(err)
    }

    fn core(&self) -> (PyComplex, Vec<usize>) {
        let r = self.0.core();
        (PyComplex(r.complex), r.labels)
    }

    fn stanley_reisner(&self) -> PyIdeal {
        PyIdeal(ideal::stanley_reisner(&self.0))
    }

    fn symbolic_power(&self, l: u32) -> PyResult<PyIdeal> {
        ideal::symbolic_power(&self.0, l).map(PyIdeal).map_err(err)
    }

    #[pyo3(signature = (field = "Q"))]
    fn reduced_homology<'py>(&self, py: Python<'py>, field: &str) -> PyResult<Bound<'py, PyAny>> {
        let f = self::field(field)?;
        to_py(py, &homology::reduced_homology(&self.0, f))
    }

    #[pyo3(signature = (field = "Q"))]
    fn is_cohen_macaulay(&self, field: &str) -> PyResult<bool> {
        Ok(homology::is_cohen_macaulay(&self.0, self::field(field)?).holds)
    }

    #[pyo3(signature = (field = "Q"))]
    fn is_gorenstein(&self, field: &str) -> PyResult<bool> {
        Ok(homology::is_gorenstein(&self.0, self::field(field)?).holds)
    }

    #[pyo3(signature = (field = "Q"))]
    fn is_locally_gorenstein(&self, field: &str) -> PyResult<bool> {
        Ok(homology::is_locally_gorenstein(&self.0, self::field(field)?).holds)
    }

    /// Whether every link of dimension at least 1 has a connected 1-skeleton
    /// of diameter at most 2.
    fn link_diameter_condition(&self) -> bool {
        criteria::link_diameter_condition(&self.0).holds
    }

    /// Depth of `S/I_Δ^2` from the degree-vector scan, as a report dict.
    #[pyo3(signature = (field = "Q", budget = takayama::DEFAULT_BUDGET))]
    fn depth_square<'py>(&self, py: Python<'py>, field: &str, budget: u64) -> PyResult<Bound<'py, PyAny>> {
        let report = takayama::is_cm_square(&self.0, self::field(field)?, budget).map_err(err)?;
        to_py(py, &report)
    }

    #[pyo3(signature = (field = "Q", budget = takayama::DEFAULT_BUDGET))]
    fn depth_symbolic_square<'py>(
        &self,
        py: Python<'py>,
        field: &str,
        budget: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let f = self::field(field)?;
        let report = takayama::is_cm_symbolic_square(&self.0, f, budget).map_err(err)?;
        to_py(py, &report)
    }

    /// CM-ness of `S/I_Δ^2`, splitting into join factors if the direct scan
    /// is over budget.
    #[pyo3(signature = (field = "Q", budget = takayama::DEFAULT_BUDGET))]
    fn is_cm_square(&self, field: &str, budget: u64) -> PyResult<bool> {
        let verdict = takayama::cm_square_with_fallback(&self.0, self::field(field)?, budget);
        verdict.map(|v| v.is_cm()).map_err(err)
    }

    #[pyo3(signature = (fields = "Q,F2", budget = takayama::DEFAULT_BUDGET, bound = criteria::CONDITION3_BOUND))]
    fn audit<'py>(
        &self,
        py: Python<'py>,
        fields: &str,
        budget: u64,
        bound: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let fields = FieldSpec::parse_list(fields).map_err(err)?;
        let report = criteria::paper_audit(&self.0, &fields, budget, bound).map_err(err)?;
        to_py(py, &report)
    }

    fn __eq__(&self, other: &PyComplex) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex({}, {:?})", self.0.n(), self.0.facet_lists())
    }
}

/// A monomial ideal in `k[x1, ..., xn]` given by exponent vectors.
#[pyclass(name = "MonomialIdeal", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyIdeal(engine::MonomialIdeal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(n: usize, gens: Vec<Vec<u32>>) -> PyResult<Self> {
        let gens = gens.into_iter().map(engine::Monomial::new).collect();
        engine::MonomialIdeal::new(n, gens).map(PyIdeal).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn gens(&self) -> Vec<Vec<u32>> {
        self.0.gens().iter().map(|g| g.exponents().to_vec()).collect()
    }

    fn power(&self, k: u32) -> PyIdeal {
        PyIdeal(self.0.power(k))
    }

    fn symbolic_power(&self, l: u32) -> PyResult<PyIdeal> {
        ideal::symbolic_power_of_ideal(&self.0, l).map(PyIdeal).map_err(err)
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.intersect(&other.0).map(PyIdeal).map_err(err)
    }

    fn contains(&self, exponents: Vec<u32>) -> PyResult<bool> {
        self.0.contains(&engine::Monomial::new(exponents)).map_err(err)
    }

    fn complex(&self) -> PyResult<PyComplex> {
        ideal::complex_of_ideal(&self.0).map(PyComplex).map_err(err)
    }

    /// Whether `I^(2) = I^2`, with a certificate: a failing special triangle
    /// and its test monomial, or the triangles checked.
    fn symbolic2_equals_square<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &ideal::symbolic2_equals_square(&self.0).map_err(err)?)
    }

    fn special_triangles<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &ideal::special_triangles(&self.0).map_err(err)?)
    }

    fn __eq__(&self, other: &PyIdeal) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

/// Runs the reproduction suite and returns its report dict.
#[pyfunction]
#[pyo3(signature = (seed = 0, budget = takayama::DEFAULT_BUDGET))]
fn reproduce(py: Python<'_>, seed: u64, budget: u64) -> PyResult<Bound<'_, PyAny>> {
    let opts = engine::reproduce::ReproOptions {
        budget,
        seed,
        ..Default::default()
    };
    to_py(py, &engine::reproduce::run(&opts).map_err(err)?)
}

#[pymodule]
fn srsq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    Ok(())
}
