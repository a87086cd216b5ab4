//! Python bindings: the graph type plus the counting, detection, bound,
//! reduction, and search entry points, with counts delivered as Python
//! ints of arbitrary size.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use turanlab_core::bounds::{self, BoundId, BoundReport};
use turanlab_core::graph::Graph as CoreGraph;
use turanlab_core::reduce as core_reduce;
use turanlab_core::search::{self, Forbidden, SearchResult, SweepEntry};
use turanlab_core::{counting, detect, graph6};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(module = "turanlab", from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: CoreGraph,
}

impl Graph {
    fn wrap(inner: CoreGraph) -> Self {
        Graph { inner }
    }

    fn check_vertex(&self, v: usize) -> PyResult<()> {
        if v < self.inner.n() {
            Ok(())
        } else {
            Err(value_error(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.inner.n()
            )))
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> PyResult<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(value_error("loops are not allowed"));
        }
        Ok(())
    }
}

#[pymethods]
impl Graph {
    /// An edgeless graph on `n` vertices.
    #[new]
    fn new(n: usize) -> Self {
        Graph::wrap(CoreGraph::empty(n))
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph6::parse_graph6(text)
            .map(Graph::wrap)
            .map_err(value_error)
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Graph::wrap(CoreGraph::complete(n))
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::wrap(CoreGraph::complete_bipartite(a, b))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(value_error("a cycle needs at least 3 vertices"));
        }
        Ok(Graph::wrap(CoreGraph::cycle(n)))
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Graph::wrap(CoreGraph::path(n))
    }

    /// The 3-dimensional cube: 8 vertices, 12 edges, 3-regular.
    #[staticmethod]
    fn cube() -> Self {
        Graph::wrap(CoreGraph::cube())
    }

    /// The cube plus one antipodal diagonal (13 edges).
    #[staticmethod]
    fn cube_with_diagonal() -> Self {
        Graph::wrap(CoreGraph::cube_with_diagonal())
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<()> {
        self.check_edge(u, v)?;
        self.inner.add_edge(u, v);
        Ok(())
    }

    fn remove_edge(&mut self, u: usize, v: usize) -> PyResult<()> {
        self.check_edge(u, v)?;
        self.inner.remove_edge(u, v);
        Ok(())
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.inner.has_edge(u, v))
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check_vertex(v)?;
        Ok(self.inner.degree(v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.inner.neighbors(v).collect())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    /// Degrees in descending order.
    fn degree_sequence(&self) -> Vec<usize> {
        self.inner.degree_sequence().degrees().to_vec()
    }

    fn to_graph6(&self) -> String {
        graph6::to_graph6(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner.n() == other.inner.n() && self.inner.edges() == other.inner.edges()
    }
}

// ============================================================
// counting
// ============================================================

/// Number of walks with `k` edges (ordered, repetition allowed).
#[pyfunction]
fn walk_count(g: &Graph, k: u32) -> BigUint {
    counting::walk_count(&g.inner, k)
}

/// Number of 3-edge path subgraphs.
#[pyfunction]
fn path3_count(g: &Graph) -> BigUint {
    counting::path3_count(&g.inner)
}

/// Number of 4-cycle subgraphs.
#[pyfunction]
fn c4_count(g: &Graph) -> BigUint {
    counting::c4_count(&g.inner)
}

/// Number of 6-cycle subgraphs.
#[pyfunction]
fn c6_count(g: &Graph) -> BigUint {
    counting::c6_count(&g.inner)
}

/// Number of common neighbors of `x` and `y`.
#[pyfunction]
fn codegree(g: &Graph, x: usize, y: usize) -> PyResult<usize> {
    counting::codegree(&g.inner, x, y).map_err(value_error)
}

/// Length of the shortest cycle; `None` for forests.
#[pyfunction]
fn girth(g: &Graph) -> Option<usize> {
    counting::girth(&g.inner)
}

// ============================================================
// detection
// ============================================================

#[pyfunction]
fn contains_c6(g: &Graph) -> bool {
    detect::contains_c6(&g.inner)
}

#[pyfunction]
fn find_c6(g: &Graph) -> Option<Vec<usize>> {
    detect::find_c6(&g.inner).map(|c| c.to_vec())
}

#[pyfunction]
fn contains_cube(g: &Graph) -> bool {
    detect::contains_cube(&g.inner)
}

#[pyfunction]
fn contains_cube_diag(g: &Graph) -> bool {
    detect::contains_cube_diag(&g.inner)
}

/// Finds a hexagon between `x` and `y` which, together with them, forms a
/// cube; returns `{x, y, hexagon, cube_edges}` or `None`.
#[pyfunction]
fn hexagon_between<'py>(
    py: Python<'py>,
    g: &Graph,
    x: usize,
    y: usize,
) -> PyResult<Option<Bound<'py, PyDict>>> {
    let witness = detect::hexagon_between(&g.inner, x, y).map_err(value_error)?;
    witness
        .map(|w| {
            let dict = PyDict::new(py);
            dict.set_item("x", w.x)?;
            dict.set_item("y", w.y)?;
            dict.set_item("hexagon", w.hexagon.to_vec())?;
            dict.set_item("cube_edges", w.cube_edges().to_vec())?;
            Ok(dict)
        })
        .transpose()
}

// ============================================================
// bounds
// ============================================================

fn serde_token(value: impl serde::Serialize) -> String {
    serde_json::to_value(value)
        .expect("enum serializes")
        .as_str()
        .expect("enum serializes to a string")
        .to_owned()
}

fn report_dict<'py>(py: Python<'py>, report: &BoundReport) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("bound_id", report.bound_id.to_string())?;
    dict.set_item("direction", serde_token(report.direction))?;
    dict.set_item("bound_value", report.bound_value)?;
    dict.set_item("observed", report.observed.clone())?;
    dict.set_item("verdict", serde_token(report.verdict))?;
    dict.set_item("slack", report.slack)?;
    dict.set_item("tight", report.tight)?;
    dict.set_item("certified", report.certified)?;
    Ok(dict)
}

/// Evaluates one bound (by id) on `g`; see `bound_ids()` for the catalog.
#[pyfunction]
fn evaluate_bound<'py>(py: Python<'py>, g: &Graph, bound_id: &str) -> PyResult<Bound<'py, PyDict>> {
    let id: BoundId = bound_id.parse().map_err(value_error)?;
    report_dict(py, &bounds::evaluate(&g.inner, &id))
}

/// Every bound id, certified and asymptotic alike.
#[pyfunction]
fn bound_ids() -> Vec<String> {
    BoundId::all().iter().map(BoundId::to_string).collect()
}

/// The ids whose inequality is exact (not merely asymptotic).
#[pyfunction]
fn certified_bound_ids() -> Vec<String> {
    BoundId::all_certified()
        .iter()
        .map(BoundId::to_string)
        .collect()
}

// ============================================================
// reductions
// ============================================================

/// Bipartite subgraph keeping at least half of every vertex degree.
#[pyfunction]
fn erdos_bipartite_subgraph<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyDict>> {
    let r = core_reduce::erdos_bipartite_subgraph(&g.inner);
    let dict = PyDict::new(py);
    dict.set_item("output", Graph::wrap(r.reduction.output.clone()))?;
    dict.set_item("kept_edges", r.reduction.kept_edges)?;
    dict.set_item("guarantee", serde_token(r.reduction.guarantee))?;
    dict.set_item("class_a", r.class_a().to_vec())?;
    dict.set_item("class_b", r.class_b().to_vec())?;
    Ok(dict)
}

/// 4-cycle-free subgraph of a 6-cycle-free input keeping at least half the
/// edges. Raises `ValueError` (with a witness) on inputs containing a
/// 6-cycle.
#[pyfunction]
fn gyori_c4free_reduction<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyDict>> {
    let r = core_reduce::gyori_c4free_reduction(&g.inner).map_err(value_error)?;
    let dict = PyDict::new(py);
    dict.set_item("output", Graph::wrap(r.output))?;
    dict.set_item("kept_edges", r.kept_edges)?;
    dict.set_item("guarantee", serde_token(r.guarantee))?;
    Ok(dict)
}

// ============================================================
// search
// ============================================================

fn parse_forbidden(token: &str) -> PyResult<Forbidden> {
    token.parse().map_err(value_error)
}

/// One representative per isomorphism class of graphs on `n` vertices.
#[pyfunction]
fn enumerate_graphs(n: usize) -> PyResult<Vec<Graph>> {
    Ok(search::enumerate_graphs(n)
        .map_err(value_error)?
        .into_iter()
        .map(Graph::wrap)
        .collect())
}

fn search_dict<'py>(py: Python<'py>, result: &SearchResult) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("host", result.host.to_string())?;
    dict.set_item("forbidden", result.forbidden.to_string())?;
    dict.set_item("extremal_edges", result.extremal_edges)?;
    dict.set_item("witness", Graph::wrap(result.witness.clone()))?;
    dict.set_item("witness_graph6", graph6::to_graph6(&result.witness))?;
    dict.set_item("graphs_examined", result.graphs_examined)?;
    dict.set_item("canonical_classes", result.canonical_classes)?;
    Ok(dict)
}

/// Exact `ex(n, H)` with an extremal witness; `forbid` is one of
/// `"K3"`, `"C4"`, `"C6"`, `"Q"`, `"Qplus"`.
#[pyfunction]
fn extremal_number<'py>(py: Python<'py>, n: usize, forbid: &str) -> PyResult<Bound<'py, PyDict>> {
    let result =
        search::extremal_number(n, parse_forbidden(forbid)?).map_err(value_error)?;
    search_dict(py, &result)
}

/// Exact `ex(a, b, H)` inside the complete bipartite host.
#[pyfunction]
fn extremal_number_bipartite<'py>(
    py: Python<'py>,
    a: usize,
    b: usize,
    forbid: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let result = search::extremal_number_bipartite(a, b, parse_forbidden(forbid)?)
        .map_err(value_error)?;
    search_dict(py, &result)
}

fn sweep_entry_dict<'py>(py: Python<'py>, entry: &SweepEntry) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("graph6", &entry.graph6)?;
    dict.set_item("n", entry.n)?;
    dict.set_item("orientation", entry.orientation)?;
    dict.set_item("report", report_dict(py, &entry.report)?)?;
    Ok(dict)
}

/// Evaluates bounds against every isomorphism class with at most `n_max`
/// vertices; `bound_ids=None` means the full catalog.
#[pyfunction]
#[pyo3(signature = (n_max, bound_ids = None))]
fn sweep_bounds<'py>(
    py: Python<'py>,
    n_max: usize,
    bound_ids: Option<Vec<String>>,
) -> PyResult<Bound<'py, PyDict>> {
    let ids: Vec<BoundId> = match bound_ids {
        None => BoundId::all(),
        Some(tokens) => tokens
            .iter()
            .map(|t| t.parse().map_err(value_error))
            .collect::<PyResult<_>>()?,
    };
    let report = search::sweep_bounds(n_max, &ids).map_err(value_error)?;
    let dict = PyDict::new(py);
    dict.set_item("n_max", report.n_max)?;
    dict.set_item(
        "bound_ids",
        report
            .bound_ids
            .iter()
            .map(BoundId::to_string)
            .collect::<Vec<_>>(),
    )?;
    dict.set_item("graphs_checked", report.graphs_checked)?;
    let violations = PyList::empty(py);
    for entry in &report.violations {
        violations.append(sweep_entry_dict(py, entry)?)?;
    }
    dict.set_item("violations", violations)?;
    let tight = PyList::empty(py);
    for entry in &report.tight {
        tight.append(sweep_entry_dict(py, entry)?)?;
    }
    dict.set_item("tight", tight)?;
    Ok(dict)
}

// ============================================================
// module
// ============================================================

#[pymodule]
fn turanlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(walk_count, m)?)?;
    m.add_function(wrap_pyfunction!(path3_count, m)?)?;
    m.add_function(wrap_pyfunction!(c4_count, m)?)?;
    m.add_function(wrap_pyfunction!(c6_count, m)?)?;
    m.add_function(wrap_pyfunction!(codegree, m)?)?;
    m.add_function(wrap_pyfunction!(girth, m)?)?;
    m.add_function(wrap_pyfunction!(contains_c6, m)?)?;
    m.add_function(wrap_pyfunction!(find_c6, m)?)?;
    m.add_function(wrap_pyfunction!(contains_cube, m)?)?;
    m.add_function(wrap_pyfunction!(contains_cube_diag, m)?)?;
    m.add_function(wrap_pyfunction!(hexagon_between, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bound_ids, m)?)?;
    m.add_function(wrap_pyfunction!(certified_bound_ids, m)?)?;
    m.add_function(wrap_pyfunction!(erdos_bipartite_subgraph, m)?)?;
    m.add_function(wrap_pyfunction!(gyori_c4free_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_number, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_number_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_bounds, m)?)?;
    Ok(())
}
