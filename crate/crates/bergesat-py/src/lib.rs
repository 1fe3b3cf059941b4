//! Python bindings exposing the main types and operations of `bergesat`.

use bergesat::berge::{self, DetectorConfig};
use bergesat::constructions::{self, ConstructionParams};
use bergesat::error::Error;
use bergesat::hypergraph;
use bergesat::invariants;
use bergesat::saturation::{self, SatSearchOptions};
use bergesat::tightpath;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    if e.is_indeterminate() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

#[pyclass(name = "Hypergraph", from_py_object)]
#[derive(Clone)]
struct PyHypergraph {
    inner: hypergraph::Hypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyHypergraph { inner: hypergraph::Hypergraph::new(k, n, edges).map_err(to_py)? })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyHypergraph { inner: hypergraph::Hypergraph::parse(text).map_err(to_py)? })
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn disjoint_union(&self, other: &PyHypergraph) -> PyResult<Self> {
        Ok(PyHypergraph { inner: self.inner.disjoint_union(&other.inner).map_err(to_py)? })
    }

    fn canonical_form(&self) -> PyResult<Vec<Vec<usize>>> {
        self.inner.canonical_form().map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(k={}, n={}, m={})",
            self.inner.k(),
            self.inner.n(),
            self.inner.edge_count()
        )
    }

    fn __eq__(&self, other: &PyHypergraph) -> bool {
        self.inner == other.inner
    }
}

fn witness_dict(py: Python<'_>, w: &berge::BergeWitness) -> PyResult<Py<PyDict>> {
    let d = PyDict::new(py);
    d.set_item("core_map", w.core_map.clone())?;
    d.set_item("edge_map", w.edge_map.clone())?;
    Ok(d.into())
}

#[pyfunction]
#[pyo3(signature = (pattern, k))]
fn expansion(pattern: &PyHypergraph, k: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: berge::expansion(&pattern.inner, k).map_err(to_py)? })
}

#[pyfunction]
#[pyo3(signature = (host, pattern, node_budget = 100_000_000))]
fn contains_berge(
    py: Python<'_>,
    host: &PyHypergraph,
    pattern: &PyHypergraph,
    node_budget: u64,
) -> PyResult<Option<Py<PyDict>>> {
    let cfg = DetectorConfig { node_budget };
    match berge::contains_berge(&host.inner, &pattern.inner, &cfg).map_err(to_py)? {
        Some(w) => Ok(Some(witness_dict(py, &w)?)),
        None => Ok(None),
    }
}

#[pyfunction]
fn vertex_cover_number(graph: &PyHypergraph) -> PyResult<(usize, Vec<usize>)> {
    let (beta, cert) = invariants::vertex_cover_number(&graph.inner).map_err(to_py)?;
    Ok((beta, cert.vertices))
}

#[pyfunction]
fn feedback_number(graph: &PyHypergraph) -> PyResult<(usize, Vec<usize>)> {
    let (f, cert) = invariants::feedback_number(&graph.inner).map_err(to_py)?;
    Ok((f, cert.vertices))
}

#[pyfunction]
fn case_select(graph: &PyHypergraph, k: usize) -> PyResult<String> {
    match invariants::case_select(&graph.inner, k) {
        Ok(tag) => Ok(tag.to_string()),
        Err(Error::Unsupported(_)) => Ok("UNSUPPORTED".into()),
        Err(e) => Err(to_py(e)),
    }
}

#[pyfunction]
fn build_construction(
    k: usize,
    n: usize,
    a: usize,
    g: &PyHypergraph,
    s: Vec<usize>,
) -> PyResult<PyHypergraph> {
    let params = ConstructionParams { k, n, a, g: g.inner.clone(), s };
    let built = constructions::build_construction(&params).map_err(to_py)?;
    Ok(PyHypergraph { inner: built.host })
}

#[pyfunction]
fn build_lemma_host(f: &PyHypergraph, k: usize, n: usize) -> PyResult<(String, PyHypergraph)> {
    let build = constructions::build_lemma_instance(&f.inner, k, n).map_err(to_py)?;
    Ok((build.instance.case.to_string(), PyHypergraph { inner: build.host }))
}

#[pyfunction]
#[pyo3(signature = (host, pattern, node_budget = 100_000_000))]
fn is_saturated(
    py: Python<'_>,
    host: &PyHypergraph,
    pattern: &PyHypergraph,
    node_budget: u64,
) -> PyResult<Py<PyDict>> {
    let cfg = DetectorConfig { node_budget };
    let rep = saturation::is_saturated(&host.inner, &pattern.inner, &cfg).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("free", rep.free)?;
    d.set_item("saturated", rep.saturated)?;
    d.set_item("blocking_nonedge", rep.blocking_nonedge)?;
    Ok(d.into())
}

#[pyfunction]
#[pyo3(signature = (host, pattern, node_budget = 100_000_000))]
fn greedy_complete(
    host: &PyHypergraph,
    pattern: &PyHypergraph,
    node_budget: u64,
) -> PyResult<(PyHypergraph, PyHypergraph)> {
    let cfg = DetectorConfig { node_budget };
    let (h, added) =
        saturation::greedy_complete(&host.inner, &pattern.inner, &cfg).map_err(to_py)?;
    Ok((PyHypergraph { inner: h }, PyHypergraph { inner: added }))
}

#[pyfunction]
fn degeneracy_order(host: &PyHypergraph) -> (Vec<usize>, usize) {
    saturation::degeneracy_order(&host.inner)
}

#[pyfunction]
#[pyo3(signature = (n, k, pattern, m_cap = 6, isomorphism_rejection = true, node_budget = 100_000_000))]
fn sat_bruteforce(
    n: usize,
    k: usize,
    pattern: &PyHypergraph,
    m_cap: usize,
    isomorphism_rejection: bool,
    node_budget: u64,
) -> PyResult<(usize, PyHypergraph)> {
    let cfg = DetectorConfig { node_budget };
    let opts = SatSearchOptions { m_cap, isomorphism_rejection };
    let (m, cert) = saturation::sat_bruteforce(n, k, &pattern.inner, &opts, &cfg).map_err(to_py)?;
    Ok((m, PyHypergraph { inner: cert }))
}

#[pyfunction]
fn tight_path(r: usize, l: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: tightpath::tight_path(r, l).map_err(to_py)? })
}

#[pyfunction]
fn reduction_threshold(r: usize, k: usize, l: usize) -> PyResult<u64> {
    tightpath::reduction_threshold(r, k, l).map_err(to_py)
}

#[pyfunction]
fn run_reduction(py: Python<'_>, host: &PyHypergraph, r: usize, l: usize) -> PyResult<Py<PyDict>> {
    let (out, _) = tightpath::run_reduction(&host.inner, r, l).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item(
        "kind",
        match out.kind {
            tightpath::ReductionKind::BoundCertificate => "BOUND_CERTIFICATE",
            tightpath::ReductionKind::ExtractedPath => "EXTRACTED_PATH",
        },
    )?;
    d.set_item("c", out.c)?;
    d.set_item("max_multiplicity", out.max_multiplicity)?;
    match &out.path_witness {
        Some(w) => d.set_item("witness", witness_dict(py, w)?)?,
        None => d.set_item("witness", py.None())?,
    }
    Ok(d.into())
}

#[pyfunction]
fn intersection_level(pattern: &PyHypergraph) -> PyResult<usize> {
    tightpath::intersection_level(&pattern.inner).map_err(to_py)
}

#[pymodule]
fn bergesat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(expansion, m)?)?;
    m.add_function(wrap_pyfunction!(contains_berge, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_cover_number, m)?)?;
    m.add_function(wrap_pyfunction!(feedback_number, m)?)?;
    m.add_function(wrap_pyfunction!(case_select, m)?)?;
    m.add_function(wrap_pyfunction!(build_construction, m)?)?;
    m.add_function(wrap_pyfunction!(build_lemma_host, m)?)?;
    m.add_function(wrap_pyfunction!(is_saturated, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_complete, m)?)?;
    m.add_function(wrap_pyfunction!(degeneracy_order, m)?)?;
    m.add_function(wrap_pyfunction!(sat_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(tight_path, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(run_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_level, m)?)?;
    Ok(())
}
