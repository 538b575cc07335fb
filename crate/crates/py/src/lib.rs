//! Python bindings: finite groups, power graphs, connectivity reports and
//! theorem checks, driven in-process from Python.
//!
//! Usage from Python:
//!
//!     from powergraph_py import FiniteGroup, sweep_default
//!     g = FiniteGroup.heisenberg(3)
//!     pg = g.power_graph()
//!     print(pg.analyze()["edgeConnectivity"])
//!     report = sweep_default(fast=True)

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use powergraph_core::connectivity;
use powergraph_core::graph::SimpleGraph;
use powergraph_core::groups::{self, GroupSpec};
use powergraph_core::powergraph::build_power_graph;
use powergraph_core::theorems::{self, CheckContext, CheckOptions, StatementId, SweepOptions};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// serde_json::Value -> Python object.
fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match value {
        serde_json::Value::Null => py.None().into_bound(py),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize_to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let json = serde_json::to_value(value).map_err(value_err)?;
    json_to_py(py, &json)
}

/// A finite group held as a validated multiplication table.
#[pyclass(name = "FiniteGroup")]
struct PyFiniteGroup {
    inner: groups::FiniteGroup,
}

#[pymethods]
impl PyFiniteGroup {
    #[staticmethod]
    fn cyclic(n: usize) -> PyResult<Self> {
        GroupSpec::Cyclic { n }.build().map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn elementary_abelian(p: usize, r: u32) -> PyResult<Self> {
        groups::elementary_abelian(p, r).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn dihedral(n: usize) -> PyResult<Self> {
        groups::dihedral(n).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn symmetric(degree: usize) -> PyResult<Self> {
        groups::symmetric(degree).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn generalized_quaternion(order: usize) -> PyResult<Self> {
        groups::generalized_quaternion(order).map(|inner| Self { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn heisenberg(p: usize) -> PyResult<Self> {
        groups::heisenberg(p).map(|inner| Self { inner }).map_err(value_err)
    }

    /// Build from a spec string, e.g. "direct_product cyclic:2 cyclic:4".
    #[staticmethod]
    fn from_spec(text: &str) -> PyResult<Self> {
        GroupSpec::parse(text)
            .and_then(|s| s.build())
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    /// Validate an n x n table of 0-based indices.
    #[staticmethod]
    fn from_cayley_table(table: Vec<Vec<usize>>) -> PyResult<Self> {
        groups::FiniteGroup::from_cayley_table(&table)
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    /// Closure of cycle-notation generators, e.g. ["(1 2)", "(1 2 3)"].
    #[staticmethod]
    #[pyo3(signature = (generators, max_order = 2048))]
    fn from_permutation_generators(generators: Vec<String>, max_order: usize) -> PyResult<Self> {
        let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
        groups::from_permutation_generators(&refs, max_order)
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn exponent(&self) -> usize {
        self.inner.exponent()
    }

    fn element_order(&self, x: usize) -> PyResult<usize> {
        self.check_element(x)?;
        Ok(self.inner.element_order(x))
    }

    fn cyclic_subgroup(&self, x: usize) -> PyResult<Vec<usize>> {
        self.check_element(x)?;
        Ok(self.inner.cyclic_subgroup(x))
    }

    fn generator_class(&self, x: usize) -> PyResult<Vec<usize>> {
        self.check_element(x)?;
        Ok(self.inner.generator_class(x))
    }

    fn maximal_cyclic_subgroups(&self) -> Vec<Vec<usize>> {
        self.inner.maximal_cyclic_subgroups()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels()
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        serialize_to_py(py, &self.inner.classify())
    }

    fn power_graph(&self) -> PyPowerGraph {
        PyPowerGraph {
            graph: build_power_graph(&self.inner).graph().clone(),
            group: self.inner.clone(),
        }
    }

    /// Run one statement check; returns the verdict as a dict.
    fn check<'py>(&self, py: Python<'py>, statement: &str) -> PyResult<Bound<'py, PyAny>> {
        let id = StatementId::parse(statement)
            .ok_or_else(|| value_err(format!("unknown statement id {statement:?}")))?;
        let ctx = CheckContext::new(&self.inner);
        let verdict = theorems::check(&ctx, id, &CheckOptions::default());
        serialize_to_py(py, &verdict)
    }

    fn __repr__(&self) -> String {
        format!("FiniteGroup(order={})", self.inner.order())
    }
}

impl PyFiniteGroup {
    fn check_element(&self, x: usize) -> PyResult<()> {
        if x >= self.inner.order() {
            return Err(value_err(format!(
                "element {x} out of range for group of order {}",
                self.inner.order()
            )));
        }
        Ok(())
    }
}

/// The power graph of a finite group (vertex i = element i).
#[pyclass(name = "PowerGraph")]
struct PyPowerGraph {
    graph: SimpleGraph,
    group: groups::FiniteGroup,
}

#[pymethods]
impl PyPowerGraph {
    #[getter]
    fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.graph.vertex_count() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.graph.degree(v))
    }

    fn is_complete(&self) -> bool {
        self.graph.is_complete()
    }

    fn is_regular(&self) -> bool {
        self.graph.is_regular()
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.graph.connected_components()
    }

    fn blocks(&self) -> Vec<Vec<usize>> {
        self.graph.blocks()
    }

    /// Reduced-graph view (identity vertex deleted); vertex i = element i+1.
    fn reduced_edges(&self) -> Vec<(usize, usize)> {
        build_power_graph(&self.group).reduced_graph().edges()
    }

    fn reduced_is_regular(&self) -> bool {
        build_power_graph(&self.group).reduced_graph().is_regular()
    }

    fn to_dot(&self) -> String {
        self.graph.to_dot()
    }

    fn to_adjacency_list(&self) -> String {
        self.graph.to_adjacency_list()
    }

    /// Full connectivity report as a dict (same shape as the CLI JSON).
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = connectivity::analyze(&self.graph).map_err(value_err)?;
        serialize_to_py(py, &report)
    }

    fn vertex_connectivity(&self) -> PyResult<usize> {
        connectivity::vertex_connectivity(&self.graph).map_err(value_err)
    }

    fn edge_connectivity(&self) -> PyResult<usize> {
        connectivity::edge_connectivity(&self.graph).map_err(value_err)
    }

    fn minimum_vertex_cuts(&self) -> PyResult<Vec<Vec<usize>>> {
        connectivity::minimum_vertex_cuts(&self.graph, &connectivity::AnalysisCaps::default())
            .map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "PowerGraph(vertices={}, edges={})",
            self.graph.vertex_count(),
            self.graph.edge_count()
        )
    }
}

#[pyfunction]
fn euler_totient(n: usize) -> PyResult<usize> {
    if n == 0 {
        return Err(value_err("totient is defined for n >= 1"));
    }
    Ok(groups::euler_totient(n))
}

/// Sweep the built-in catalog; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (fast = false, statements = None))]
fn sweep_default<'py>(
    py: Python<'py>,
    fast: bool,
    statements: Option<Vec<String>>,
) -> PyResult<Bound<'py, PyAny>> {
    let ids = match statements {
        None => StatementId::ALL.to_vec(),
        Some(raw) => raw
            .iter()
            .map(|s| {
                StatementId::parse(s)
                    .ok_or_else(|| value_err(format!("unknown statement id {s:?}")))
            })
            .collect::<PyResult<Vec<_>>>()?,
    };
    let options = SweepOptions {
        fast,
        ..SweepOptions::default()
    };
    let report = theorems::sweep(&theorems::default_catalog(), &ids, &options);
    serialize_to_py(py, &report)
}

#[pyfunction]
fn statement_ids() -> Vec<&'static str> {
    StatementId::ALL.iter().map(|id| id.as_str()).collect()
}

#[pymodule]
fn powergraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFiniteGroup>()?;
    m.add_class::<PyPowerGraph>()?;
    m.add_function(wrap_pyfunction!(euler_totient, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_default, m)?)?;
    m.add_function(wrap_pyfunction!(statement_ids, m)?)?;
    Ok(())
}
