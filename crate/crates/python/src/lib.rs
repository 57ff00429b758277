//! Python bindings.
//!
//! Source/sink choices are passed as `(kind, sources, sinks, k)` where `kind`
//! is one of `"unpaired-mtm"`, `"paired-mtm"`, `"one-to-many"`,
//! `"one-to-one"` and `k` is only needed for one-to-one.

use dipathcover::extremal::{self, Family};
use dipathcover::{
    self as core, io, ConstructError, Coverability, CoverKind, CoverSpec, CoverVariant,
    PathCover, SamplingPolicy,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Digraph", module = "pydipathcover", frozen, skip_from_py_object)]
struct PyDigraph {
    inner: core::Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = core::Digraph::from_arcs(n, arcs).map_err(value_err)?;
        Ok(PyDigraph { inner })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyDigraph { inner: core::Digraph::complete(n) }
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> Self {
        PyDigraph { inner: core::Digraph::complete_bipartite(a, b) }
    }

    #[staticmethod]
    fn glued_cliques(a: usize, b: usize, overlap: usize) -> PyResult<Self> {
        let inner = core::Digraph::glued_cliques(a, b, overlap).map_err(value_err)?;
        Ok(PyDigraph { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyDigraph { inner: io::digraph_from_json(text).map_err(value_err)? })
    }

    fn to_json(&self) -> String {
        io::digraph_to_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        io::to_dot(&self.inner, None)
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().collect()
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.inner.has_arc(u, v)
    }

    fn out_degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.out_degree(v))
    }

    fn in_degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.in_degree(v))
    }

    fn min_semi_degree(&self) -> usize {
        self.inner.min_semi_degree()
    }

    /// Least `d+(x) + d-(y)` over non-arcs `xy`; `None` for a complete
    /// digraph.
    fn ore_min(&self) -> Option<usize> {
        match self.inner.ore_min() {
            core::OreMin::Finite(v) => Some(v),
            core::OreMin::Unbounded => None,
        }
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.order(), self.inner.arc_count())
    }
}

impl PyDigraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(())
    }
}

fn spec(kind: &str, sources: Vec<usize>, sinks: Vec<usize>, k: Option<usize>) -> PyResult<CoverSpec> {
    let variant: CoverVariant = kind.parse().map_err(|_| value_err(format!("unknown kind {kind:?}")))?;
    let k = match variant {
        CoverVariant::OneToOne => k.ok_or_else(|| value_err("one-to-one needs k"))?,
        _ => sinks.len(),
    };
    if !variant.is_many_to_many() && sources.len() != 1 {
        return Err(value_err(format!("{variant} takes exactly one source")));
    }
    Ok(CoverSpec { kind: CoverKind::new(variant, k), sources, sinks })
}

fn paths_of(cover: &PathCover) -> Vec<Vec<usize>> {
    cover.paths.iter().map(|p| p.to_vec()).collect()
}

/// Returns `None` if `paths` is a valid cover, otherwise the rejection
/// reason.
#[pyfunction]
#[pyo3(signature = (d, kind, sources, sinks, paths, k=None))]
fn verify_cover(
    d: &PyDigraph,
    kind: &str,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    paths: Vec<Vec<usize>>,
    k: Option<usize>,
) -> PyResult<Option<(String, String)>> {
    let spec = spec(kind, sources, sinks, k)?;
    Ok(core::verify_cover(&d.inner, &spec, &PathCover::from_vecs(paths))
        .err()
        .map(|r| (format!("{:?}", r.code()), r.to_string())))
}

/// A cover found by exhaustive search, or `None` if none exists.
#[pyfunction]
#[pyo3(signature = (d, kind, sources, sinks, k=None))]
fn find_cover_exact(
    d: &PyDigraph,
    kind: &str,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    k: Option<usize>,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let spec = spec(kind, sources, sinks, k)?;
    let found = core::find_cover_exact(&d.inner, &spec).map_err(value_err)?;
    Ok(found.as_ref().map(paths_of))
}

/// A cover built by the degree-based construction for the kind. Raises
/// `ValueError` when the digraph does not meet the degree condition.
#[pyfunction]
#[pyo3(signature = (d, kind, sources, sinks, k=None))]
fn construct_cover(
    d: &PyDigraph,
    kind: &str,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    k: Option<usize>,
) -> PyResult<Vec<Vec<usize>>> {
    let spec = spec(kind, sources, sinks, k)?;
    match core::construct_cover(&d.inner, &spec) {
        Ok(c) => Ok(paths_of(&c.cover)),
        Err(ConstructError::Precondition(p)) => Err(value_err(p)),
        Err(e) => Err(PyRuntimeError::new_err(e.to_string())),
    }
}

/// `("proven-true", checked)`, `("sampled-true", checked)` or
/// `("proven-false", (kind, sources, sinks, k))`.
#[pyfunction]
#[pyo3(signature = (d, kind, k, seed=0))]
fn is_k_coverable(py: Python<'_>, d: &PyDigraph, kind: &str, k: usize, seed: u64) -> PyResult<(String, Py<PyAny>)> {
    let variant: CoverVariant = kind.parse().map_err(|_| value_err(format!("unknown kind {kind:?}")))?;
    let policy = SamplingPolicy { seed, ..SamplingPolicy::default() };
    let verdict =
        core::is_k_coverable(&d.inner, CoverKind::new(variant, k), &policy).map_err(value_err)?;
    Ok(match verdict {
        Coverability::ProvenTrue { checked } => ("proven-true".into(), checked.into_pyobject(py)?.into_any().unbind()),
        Coverability::SampledTrue { checked, .. } => {
            ("sampled-true".into(), checked.into_pyobject(py)?.into_any().unbind())
        }
        Coverability::ProvenFalse { witness } => {
            let w = (witness.variant().name(), witness.sources, witness.sinks, witness.kind.k);
            ("proven-false".into(), w.into_pyobject(py)?.into_any().unbind())
        }
    })
}

/// Sharpness witness: `(digraph, (kind, sources, sinks, k))`. `param` is
/// `k`, or `m` for the `paired2-figure1` family.
#[pyfunction]
fn extremal_witness(family: &str, n: usize, param: usize) -> PyResult<(PyDigraph, (String, Vec<usize>, Vec<usize>, usize))> {
    let family: Family = family.parse().map_err(|_| value_err(format!("unknown family {family:?}")))?;
    let w = extremal::generate(family, n, param).map_err(value_err)?;
    let spec = (w.spec.variant().name().to_string(), w.spec.sources.clone(), w.spec.sinks.clone(), w.spec.k());
    Ok((PyDigraph { inner: w.digraph }, spec))
}

#[pyfunction]
fn families() -> Vec<&'static str> {
    Family::ALL.iter().map(|f| f.name()).collect()
}

#[pymodule]
fn pydipathcover(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(verify_cover, m)?)?;
    m.add_function(wrap_pyfunction!(find_cover_exact, m)?)?;
    m.add_function(wrap_pyfunction!(construct_cover, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_coverable, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_witness, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    Ok(())
}
