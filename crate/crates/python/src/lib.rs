//! Python bindings: hypergraphs, the two fractional isomorphism deciders,
//! witness pairs, equitable partitions, and the fractional invariants.
//!
//! Rationals cross the boundary as `fractions.Fraction`, so Python sees the
//! same exact values the library computes; an infinite invariant comes back
//! as `math.inf`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fractiso::invariants::{self, InvariantValue};
use fractiso::iso::{self, IsoMethod, IsoWitness};
use fractiso::{generators, io, partition};
use fractiso::{Error, Rational, RationalMatrix, DEFAULT_ENUM_LIMIT, DEFAULT_LP_ISO_LIMIT};

fn to_py_err(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// `fractions.Fraction` carrying the exact value of `r`.
fn fraction(py: Python<'_>, r: &Rational) -> PyResult<Py<PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    Ok(cls.call1((r.to_string(),))?.unbind())
}

fn value_to_py(py: Python<'_>, value: &InvariantValue) -> PyResult<Py<PyAny>> {
    match value.finite() {
        Some(r) => fraction(py, r),
        None => Ok(f64::INFINITY.into_pyobject(py)?.into_any().unbind()),
    }
}

fn matrix_to_py(py: Python<'_>, m: &RationalMatrix) -> PyResult<Vec<Vec<Py<PyAny>>>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| fraction(py, &m[(i, j)])).collect())
        .collect()
}

/// A hypergraph on vertices `0..vertex_count` with an ordered list of
/// hyperedges.
#[pyclass(eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Hypergraph {
    inner: fractiso::Hypergraph,
}

#[pymethods]
impl Hypergraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = fractiso::Hypergraph::new(vertex_count, edges).map_err(to_py_err)?;
        Ok(Hypergraph { inner })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    /// The degree multiset rendered as text, like `{2, 2, 3}`.
    fn degree_sequence(&self) -> String {
        self.inner.degree_sequence().to_string()
    }

    fn is_graph(&self) -> bool {
        self.inner.is_graph()
    }

    fn dual(&self) -> PyResult<Hypergraph> {
        Ok(Hypergraph {
            inner: self.inner.dual().map_err(to_py_err)?,
        })
    }

    fn two_section(&self) -> Hypergraph {
        Hypergraph {
            inner: self.inner.two_section(),
        }
    }

    fn bipartite_representation(&self) -> Hypergraph {
        Hypergraph {
            inner: self.inner.bipartite_representation(),
        }
    }

    /// The plain-text file format.
    fn emit(&self) -> String {
        io::emit_hypergraph(&self.inner)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Hypergraph> {
        Ok(Hypergraph {
            inner: io::parse_hypergraph(text).map_err(to_py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(vertex_count={}, edge_count={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// A doubly stochastic witness pair for a positive isomorphism verdict.
#[pyclass]
struct Witness {
    inner: IsoWitness,
}

#[pymethods]
impl Witness {
    /// The vertex coupling as a list of `Fraction` rows.
    fn vertex_coupling(&self, py: Python<'_>) -> PyResult<Vec<Vec<Py<PyAny>>>> {
        matrix_to_py(py, &self.inner.vertex_coupling)
    }

    /// The hyperedge coupling as a list of `Fraction` rows.
    fn edge_coupling(&self, py: Python<'_>) -> PyResult<Vec<Vec<Py<PyAny>>>> {
        matrix_to_py(py, &self.inner.edge_coupling)
    }

    fn to_json(&self) -> String {
        io::emit_witness(&self.inner)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Witness> {
        Ok(Witness {
            inner: io::parse_witness(text).map_err(to_py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Witness(vertex_coupling={}x{}, edge_coupling={}x{})",
            self.inner.vertex_coupling.rows(),
            self.inner.vertex_coupling.cols(),
            self.inner.edge_coupling.rows(),
            self.inner.edge_coupling.cols()
        )
    }
}

/// The answer of a decision run.
#[pyclass]
struct IsoVerdict {
    #[pyo3(get)]
    isomorphic: bool,
    method: IsoMethod,
    witness: Option<IsoWitness>,
}

#[pymethods]
impl IsoVerdict {
    #[getter]
    fn method(&self) -> &'static str {
        match self.method {
            IsoMethod::Partition => "partition",
            IsoMethod::Lp => "lp",
            IsoMethod::Both => "both",
        }
    }

    #[getter]
    fn witness(&self) -> Option<Witness> {
        self.witness.as_ref().map(|w| Witness { inner: w.clone() })
    }

    fn __repr__(&self) -> String {
        format!(
            "IsoVerdict(isomorphic={}, method='{}')",
            if self.isomorphic { "True" } else { "False" },
            IsoVerdict::method(self)
        )
    }
}

/// The coarsest equitable partition of one hypergraph.
#[pyclass]
struct Partition {
    #[pyo3(get)]
    vertex_classes: Vec<Vec<usize>>,
    #[pyo3(get)]
    edge_classes: Vec<Vec<usize>>,
    text: String,
}

#[pymethods]
impl Partition {
    fn __str__(&self) -> &str {
        &self.text
    }

    fn __repr__(&self) -> String {
        format!(
            "Partition(vertex_classes={}, edge_classes={})",
            self.vertex_classes.len(),
            self.edge_classes.len()
        )
    }
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<Hypergraph> {
    Ok(Hypergraph {
        inner: generators::cycle(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn complete(n: usize) -> PyResult<Hypergraph> {
    Ok(Hypergraph {
        inner: generators::complete(n).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gem() -> Hypergraph {
    Hypergraph {
        inner: generators::gem(),
    }
}

#[pyfunction]
fn fixture_h4u() -> Hypergraph {
    Hypergraph {
        inner: generators::fixture_h4u(),
    }
}

#[pyfunction]
fn fixture_g4u() -> Hypergraph {
    Hypergraph {
        inner: generators::fixture_g4u(),
    }
}

#[pyfunction]
fn disjoint_union(a: &Hypergraph, b: &Hypergraph) -> Hypergraph {
    Hypergraph {
        inner: generators::disjoint_union(&a.inner, &b.inner),
    }
}

#[pyfunction]
#[pyo3(signature = (n, r, seed=0))]
fn random_regular(n: usize, r: usize, seed: u64) -> PyResult<Hypergraph> {
    Ok(Hypergraph {
        inner: generators::random_regular(n, r, seed).map_err(to_py_err)?,
    })
}

fn parse_method(name: &str) -> PyResult<IsoMethod> {
    match name {
        "partition" => Ok(IsoMethod::Partition),
        "lp" => Ok(IsoMethod::Lp),
        "both" => Ok(IsoMethod::Both),
        other => Err(PyValueError::new_err(format!(
            "unknown method {other:?}; expected 'partition', 'lp', or 'both'"
        ))),
    }
}

/// Decides whether `g` and `h` are fractionally isomorphic.
#[pyfunction]
#[pyo3(signature = (g, h, method="both", limit=DEFAULT_LP_ISO_LIMIT))]
fn decide(g: &Hypergraph, h: &Hypergraph, method: &str, limit: usize) -> PyResult<IsoVerdict> {
    let verdict = iso::decide(&g.inner, &h.inner, parse_method(method)?, limit).map_err(to_py_err)?;
    Ok(IsoVerdict {
        isomorphic: verdict.isomorphic,
        method: verdict.method,
        witness: verdict.witness,
    })
}

/// True when the witness pair satisfies all four defining conditions for
/// the ordered pair `(g, h)`.
#[pyfunction]
fn verify_witness(g: &Hypergraph, h: &Hypergraph, witness: &Witness) -> PyResult<bool> {
    Ok(iso::verify_witness(&g.inner, &h.inner, &witness.inner)
        .map_err(to_py_err)?
        .ok())
}

#[pyfunction]
fn coarsest_partition(h: &Hypergraph) -> PyResult<Partition> {
    let part = partition::coarsest_partition(&h.inner);
    let params = partition::parameters(&h.inner, &part).map_err(to_py_err)?;
    let text = io::emit_partition(&part, Some(&params));
    Ok(Partition {
        vertex_classes: part.vertex_classes,
        edge_classes: part.edge_classes,
        text,
    })
}

#[pyfunction]
fn covering_f(py: Python<'_>, h: &Hypergraph) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::covering_f(&h.inner))
}

#[pyfunction]
fn packing_f(py: Python<'_>, h: &Hypergraph) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::packing_f(&h.inner))
}

#[pyfunction]
fn matching_f(py: Python<'_>, h: &Hypergraph) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::matching_f(&h.inner).map_err(to_py_err)?)
}

#[pyfunction]
fn transversal_f(py: Python<'_>, h: &Hypergraph) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::transversal_f(&h.inner).map_err(to_py_err)?)
}

#[pyfunction]
fn independence_f(py: Python<'_>, g: &Hypergraph) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::independence_f(&g.inner).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (g, limit=DEFAULT_ENUM_LIMIT))]
fn chromatic_f(py: Python<'_>, g: &Hypergraph, limit: usize) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::chromatic_f(&g.inner, limit).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (g, limit=DEFAULT_ENUM_LIMIT))]
fn clique_f(py: Python<'_>, g: &Hypergraph, limit: usize) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::clique_f(&g.inner, limit).map_err(to_py_err)?)
}

#[pyfunction]
#[pyo3(signature = (g, limit=DEFAULT_ENUM_LIMIT))]
fn clique_independence_f(py: Python<'_>, g: &Hypergraph, limit: usize) -> PyResult<Py<PyAny>> {
    value_to_py(
        py,
        &invariants::clique_independence_f(&g.inner, limit).map_err(to_py_err)?,
    )
}

#[pyfunction]
#[pyo3(signature = (g, limit=DEFAULT_ENUM_LIMIT))]
fn clique_cover_f(py: Python<'_>, g: &Hypergraph, limit: usize) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::clique_cover_f(&g.inner, limit).map_err(to_py_err)?)
}

#[pyfunction]
fn domination_f(py: Python<'_>, g: &Hypergraph) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::domination_f(&g.inner).map_err(to_py_err)?)
}

#[pyfunction]
fn total_domination_f(py: Python<'_>, g: &Hypergraph) -> PyResult<Py<PyAny>> {
    value_to_py(py, &invariants::total_domination_f(&g.inner).map_err(to_py_err)?)
}

/// Every parameter of `h` as `(symbol, value)` pairs; `value` is None where
/// the parameter does not apply.
#[pyfunction]
#[pyo3(signature = (h, limit=DEFAULT_ENUM_LIMIT))]
fn invariant_report(
    py: Python<'_>,
    h: &Hypergraph,
    limit: usize,
) -> PyResult<Vec<(String, Option<Py<PyAny>>)>> {
    invariants::invariant_report(&h.inner, limit)
        .into_iter()
        .map(|entry| {
            let value = match &entry.value {
                Some(v) => Some(value_to_py(py, v)?),
                None => None,
            };
            Ok((entry.symbol.to_string(), value))
        })
        .collect()
}

#[pymodule]
fn fractiso_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Hypergraph>()?;
    m.add_class::<Witness>()?;
    m.add_class::<IsoVerdict>()?;
    m.add_class::<Partition>()?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(gem, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_h4u, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_g4u, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_union, m)?)?;
    m.add_function(wrap_pyfunction!(random_regular, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    m.add_function(wrap_pyfunction!(coarsest_partition, m)?)?;
    m.add_function(wrap_pyfunction!(covering_f, m)?)?;
    m.add_function(wrap_pyfunction!(packing_f, m)?)?;
    m.add_function(wrap_pyfunction!(matching_f, m)?)?;
    m.add_function(wrap_pyfunction!(transversal_f, m)?)?;
    m.add_function(wrap_pyfunction!(independence_f, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_f, m)?)?;
    m.add_function(wrap_pyfunction!(clique_f, m)?)?;
    m.add_function(wrap_pyfunction!(clique_independence_f, m)?)?;
    m.add_function(wrap_pyfunction!(clique_cover_f, m)?)?;
    m.add_function(wrap_pyfunction!(domination_f, m)?)?;
    m.add_function(wrap_pyfunction!(total_domination_f, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_report, m)?)?;
    Ok(())
}
