//! Python bindings: a `Graph` class plus the threshold, certification, and
//! sharpness entry points. Report-shaped results come back as JSON strings
//! so Python callers can `json.loads` them.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qextend::extendability::ExtendabilityConfig;
use qextend::graph::{build_family as core_build_family, Graph as CoreGraph, VertexSet};
use qextend::matching::{has_one_factor, maximum_matching};
use qextend::spectral::{adjacency_spectral_radius, closed_form_split_join, q_spectral_radius};
use qextend::theorem;

fn value_error<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected simple graph on labeled vertices 0..n.
#[pyclass(frozen)]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    /// The complete graph K_n.
    #[staticmethod]
    fn complete(n: usize) -> Self {
        Graph {
            inner: CoreGraph::complete(n),
        }
    }

    /// The edgeless graph on n vertices.
    #[staticmethod]
    fn empty(n: usize) -> Self {
        Graph {
            inner: CoreGraph::empty(n),
        }
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::from_edges(n, &edges).map_err(value_error)?,
        })
    }

    /// Parse one graph6 line.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::from_graph6(text).map_err(value_error)?,
        })
    }

    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn join(&self, other: &Graph) -> Graph {
        Graph {
            inner: self.inner.join(&other.inner),
        }
    }

    fn disjoint_union(&self, other: &Graph) -> Graph {
        Graph {
            inner: self.inner.disjoint_union(&other.inner),
        }
    }

    fn complement(&self) -> Graph {
        Graph {
            inner: self.inner.complement(),
        }
    }

    fn is_connected(&self) -> PyResult<bool> {
        self.inner.is_connected().map_err(value_error)
    }

    /// Connected components of G - removed, ordered by smallest member.
    #[pyo3(signature = (removed = Vec::new()))]
    fn components(&self, removed: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
        let set = self.vertex_set(&removed)?;
        Ok(self
            .inner
            .components(&set)
            .map_err(value_error)?
            .into_iter()
            .map(|c| c.to_sorted_vec())
            .collect())
    }

    /// o(G - S): odd components after deleting the given vertices.
    #[pyo3(signature = (removed = Vec::new()))]
    fn odd_component_count(&self, removed: Vec<usize>) -> PyResult<usize> {
        let set = self.vertex_set(&removed)?;
        self.inner.odd_component_count(&set).map_err(value_error)
    }

    /// Signless Laplacian spectral radius q(G).
    fn q(&self) -> PyResult<f64> {
        Ok(q_spectral_radius(&self.inner).map_err(value_error)?.value)
    }

    /// (value, residual, iterations) of the q(G) eigensolve.
    fn q_full(&self) -> PyResult<(f64, f64, u64)> {
        let r = q_spectral_radius(&self.inner).map_err(value_error)?;
        Ok((r.value, r.residual, r.iterations))
    }

    /// Adjacency spectral radius rho(G).
    fn adjacency_spectral_radius(&self) -> PyResult<f64> {
        Ok(adjacency_spectral_radius(&self.inner)
            .map_err(value_error)?
            .value)
    }

    fn has_one_factor(&self) -> bool {
        has_one_factor(&self.inner)
    }

    /// A maximum matching as a list of (u, v) pairs.
    fn maximum_matching(&self) -> Vec<(usize, usize)> {
        maximum_matching(&self.inner).edges().to_vec()
    }

    /// Exact k-extendability decision (a graph without a 1-factor is not
    /// k-extendable for any k).
    fn is_k_extendable(&self, k: usize) -> PyResult<bool> {
        theorem::is_k_extendable_exact(&self.inner, k, &ExtendabilityConfig::default())
            .map_err(value_error)
    }

    /// The canonical violating set for k >= 1, as a JSON string, or None.
    fn deficiency_witness_json(&self, k: usize) -> PyResult<Option<String>> {
        let witness = qextend::extendability::deficiency_witness(&self.inner, k)
            .map_err(value_error)?;
        Ok(witness.map(|w| serde_json::to_string(&w).expect("witness serializes")))
    }

    /// Threshold certificate for this graph at k, as a JSON string.
    fn certify_json(&self, k: usize) -> String {
        serde_json::to_string(&theorem::certify(&self.inner, k)).expect("certificate serializes")
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

impl Graph {
    fn vertex_set(&self, vertices: &[usize]) -> PyResult<VertexSet> {
        let n = self.inner.vertex_count();
        let mut set = VertexSet::empty(n);
        for &v in vertices {
            if v >= n {
                return Err(PyValueError::new_err(format!("vertex {v} out of range")));
            }
            set.insert(v);
        }
        Ok(set)
    }
}

/// K_s joined with a union of cliques of the given sizes.
#[pyfunction]
fn build_family(s: usize, clique_sizes: Vec<usize>) -> PyResult<Graph> {
    if clique_sizes.contains(&0) {
        return Err(PyValueError::new_err("clique sizes must be >= 1"));
    }
    Ok(Graph {
        inner: core_build_family(s, &clique_sizes).graph,
    })
}

/// The general-case threshold theta(k, n).
#[pyfunction]
fn theta(k: usize, n: usize) -> PyResult<f64> {
    theorem::theta(k, n).map_err(value_error)
}

/// The dispatched threshold value for any even n >= 2k + 4.
#[pyfunction]
fn threshold_value(k: usize, n: usize) -> PyResult<f64> {
    Ok(theorem::threshold(k, n).map_err(value_error)?.value)
}

/// Full threshold record (k, n, case, polynomial, value) as JSON.
#[pyfunction]
fn threshold_json(k: usize, n: usize) -> PyResult<String> {
    let spec = theorem::threshold(k, n).map_err(value_error)?;
    Ok(serde_json::to_string(&spec).expect("threshold serializes"))
}

/// The excluded graph K_{2k} v (K_{n-2k-1} u K_1).
#[pyfunction]
fn exception_graph(k: usize, n: usize) -> PyResult<Graph> {
    Ok(Graph {
        inner: theorem::exception_graph(k, n).map_err(value_error)?.graph,
    })
}

/// The extremal graph attaining theta(k, n).
#[pyfunction]
fn extremal_graph(k: usize, n: usize) -> PyResult<Graph> {
    Ok(Graph {
        inner: theorem::extremal_graph(k, n).map_err(value_error)?.graph,
    })
}

/// Structural test for the excluded graph.
#[pyfunction]
fn is_exception(g: &Graph, k: usize) -> bool {
    theorem::is_exception(&g.inner, k)
}

/// Sharpness verification report for (k, n), as JSON.
#[pyfunction]
fn verify_sharpness_json(k: usize, n: usize) -> PyResult<String> {
    let mut cfg = theorem::SharpnessConfig::default();
    cfg.exact.subset_scan_max_n = cfg.exact.subset_scan_max_n.max(n);
    let report = theorem::verify_sharpness_with(k, n, &cfg).map_err(value_error)?;
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

/// q(K_s v (n - s) K_1) in closed form.
#[pyfunction]
fn split_join_q(s: usize, n: usize) -> PyResult<f64> {
    if s < 1 || s > n.saturating_sub(1) {
        return Err(PyValueError::new_err("requires 1 <= s <= n - 1"));
    }
    Ok(closed_form_split_join(s, n))
}

#[pymodule]
fn qextend_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(build_family, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_value, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_json, m)?)?;
    m.add_function(wrap_pyfunction!(exception_graph, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_exception, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sharpness_json, m)?)?;
    m.add_function(wrap_pyfunction!(split_join_q, m)?)?;
    Ok(())
}
