//! Python bindings: posets, down-set counting and the Dedekind-number methods.

use ::downsets as core;
use core::engine::{self, Count};
use core::{Error, PointSet};
use pyo3::exceptions::{PyIndexError, PyNotImplementedError, PyOverflowError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Capacity(_) => PyOverflowError::new_err(msg),
        Error::Unsupported(_) => PyNotImplementedError::new_err(msg),
        Error::Index { .. } => PyIndexError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

fn set_of(points: &[usize], n: usize) -> PyResult<PointSet> {
    let mut s = PointSet::EMPTY;
    for &i in points {
        if i >= n {
            return Err(to_py(Error::Index { index: i, len: n }));
        }
        s = s.with(i);
    }
    Ok(s)
}

fn list_of(s: PointSet) -> Vec<usize> {
    s.iter().collect()
}

/// A finite poset on points `0..n`.
#[pyclass(name = "Poset", module = "downsets", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoset {
    inner: core::Poset,
}

impl From<core::Poset> for PyPoset {
    fn from(inner: core::Poset) -> PyPoset {
        PyPoset { inner }
    }
}

#[pymethods]
impl PyPoset {
    /// Poset generated by the relations `low < high` in `covers`.
    #[new]
    #[pyo3(signature = (n, covers = Vec::new()))]
    fn new(n: usize, covers: Vec<(usize, usize)>) -> PyResult<PyPoset> {
        core::Poset::from_covers(n, &covers)
            .map(Into::into)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<PyPoset> {
        core::format::parse_poset(text)
            .map(Into::into)
            .map_err(to_py)
    }

    #[staticmethod]
    fn chain(n: usize) -> PyResult<PyPoset> {
        core::Poset::chain(n).map(Into::into).map_err(to_py)
    }

    #[staticmethod]
    fn antichain(n: usize) -> PyResult<PyPoset> {
        core::Poset::antichain(n).map(Into::into).map_err(to_py)
    }

    /// `B(n)`, optionally trimmed: "full", "lower", "upper" or "both".
    #[staticmethod]
    #[pyo3(signature = (n, trim = "full"))]
    fn boolean(n: usize, trim: &str) -> PyResult<PyPoset> {
        let which = match trim {
            "full" => core::Trim::Full,
            "lower" => core::Trim::Lower,
            "upper" => core::Trim::Upper,
            "both" => core::Trim::Both,
            other => return Err(PyValueError::new_err(format!("unknown trim `{other}`"))),
        };
        core::boolean(n)
            .and_then(|ctx| ctx.sub_poset(which))
            .map(Into::into)
            .map_err(to_py)
    }

    fn to_text(&self) -> String {
        core::format::write_poset(&self.inner)
    }

    fn to_dot(&self) -> String {
        core::format::to_dot(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Poset(n={}, covers={})",
            self.inner.len(),
            self.inner.covers().len()
        )
    }

    fn leq(&self, i: usize, j: usize) -> PyResult<bool> {
        let n = self.inner.len();
        if i >= n || j >= n {
            return Err(to_py(Error::Index {
                index: i.max(j),
                len: n,
            }));
        }
        Ok(self.inner.leq(i, j))
    }

    fn covers(&self) -> Vec<(usize, usize)> {
        self.inner.covers()
    }

    fn label(&self, i: usize) -> Option<String> {
        self.inner.label(i).map(str::to_string)
    }

    fn minimal(&self) -> Vec<usize> {
        list_of(self.inner.minimal(self.inner.carrier()))
    }

    fn maximal(&self) -> Vec<usize> {
        list_of(self.inner.maximal(self.inner.carrier()))
    }

    fn dual(&self) -> PyPoset {
        self.inner.dual().into()
    }

    fn product(&self, other: &PyPoset) -> PyResult<PyPoset> {
        self.inner
            .product(&other.inner)
            .map(Into::into)
            .map_err(to_py)
    }

    fn direct_sum(&self, other: &PyPoset) -> PyResult<PyPoset> {
        self.inner
            .direct_sum(&other.inner)
            .map(Into::into)
            .map_err(to_py)
    }

    /// Sub-poset on `points`, renumbered in ascending order.
    fn induced(&self, points: Vec<usize>) -> PyResult<PyPoset> {
        let keep = set_of(&points, self.inner.len())?;
        Ok(self.inner.induced(keep).into())
    }

    fn is_downset(&self, points: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_downset(set_of(&points, self.inner.len())?))
    }

    /// `↑(M ∖ N) ∪ ↓N` for a down-set `N` of the sub-poset on `M`.
    fn updown(&self, m: Vec<usize>, n: Vec<usize>) -> PyResult<Vec<usize>> {
        let len = self.inner.len();
        self.inner
            .updown(set_of(&m, len)?, set_of(&n, len)?)
            .map(list_of)
            .map_err(to_py)
    }

    /// Number of down-sets.
    fn count(&self) -> PyResult<Count> {
        engine::try_count_downsets(&self.inner).map_err(to_py)
    }

    fn count_via_decomposition(&self, pivot: Vec<usize>) -> PyResult<Count> {
        let m = set_of(&pivot, self.inner.len())?;
        engine::count_via_decomposition(&self.inner, m).map_err(to_py)
    }

    /// All down-sets as sorted point lists, refusing more than `limit`.
    #[pyo3(signature = (limit = 1 << 20))]
    fn downsets(&self, limit: usize) -> PyResult<Vec<Vec<usize>>> {
        let family = engine::enumerate_downsets_limited(&self.inner, limit).map_err(to_py)?;
        Ok(family.members().iter().map(|&d| list_of(d)).collect())
    }

    /// `(N, residual points, residual count)` for each down-set `N` of the
    /// sub-poset on `pivot`.
    fn decompose(&self, pivot: Vec<usize>) -> PyResult<Vec<(Vec<usize>, Vec<usize>, Count)>> {
        let m = set_of(&pivot, self.inner.len())?;
        let terms = engine::decompose_sets(&self.inner, m).map_err(to_py)?;
        Ok(terms
            .into_iter()
            .map(|(n, residual)| {
                (
                    list_of(n),
                    list_of(residual),
                    engine::count_within(&self.inner, residual),
                )
            })
            .collect())
    }

    fn canonical_form<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, pyo3::types::PyBytes>> {
        let form = core::iso::canonical_form(&self.inner).map_err(to_py)?;
        Ok(pyo3::types::PyBytes::new(py, &form.0))
    }

    fn is_isomorphic(&self, other: &PyPoset) -> PyResult<bool> {
        core::iso::are_isomorphic(&self.inner, &other.inner).map_err(to_py)
    }

    /// Type code `u-c1c2c3` of a height-two poset.
    fn type_code(&self) -> PyResult<String> {
        core::iso::type_code(&self.inner).map_err(to_py)
    }
}

#[pyfunction]
fn count_downsets(poset: &PyPoset) -> PyResult<Count> {
    poset.count()
}

/// `b(n)` by one of "theorem2", "standard", "nu", "gamma", "mu", "lemma2", "iso".
#[pyfunction]
#[pyo3(signature = (n, method = "theorem2"))]
fn dedekind(py: Python<'_>, n: usize, method: &str) -> PyResult<Count> {
    dedekind_report(py, n, method).map(|r| r.0)
}

/// `(b(n), b⁻⁻(n) or None, evaluations or None)`.
#[pyfunction]
#[pyo3(signature = (n, method = "theorem2"))]
fn dedekind_report(
    py: Python<'_>,
    n: usize,
    method: &str,
) -> PyResult<(Count, Option<Count>, Option<u64>)> {
    let method: core::dedekind::Method = method.parse().map_err(to_py)?;
    let run = py
        .detach(|| core::dedekind::dedekind(n, method))
        .map_err(to_py)?;
    let report = run.report.as_ref();
    Ok((
        run.value,
        report.map(|r| r.value),
        report.map(|r| r.evaluations),
    ))
}

/// A coefficient table ("nu", "gamma", "mu", "iso") as "text", "csv" or "json".
#[pyfunction]
#[pyo3(signature = (which, format = "csv"))]
fn table(py: Python<'_>, which: &str, format: &str) -> PyResult<String> {
    let kind: core::tables::TableKind = which.parse().map_err(to_py)?;
    let format: core::tables::TableFormat = format.parse().map_err(to_py)?;
    py.detach(|| core::tables::compute_table(kind).and_then(|t| core::tables::render(&t, format)))
        .map_err(to_py)
}

/// Runs the self-checks; returns `(all passed, ledger)`.
#[pyfunction]
#[pyo3(signature = (strict = false))]
fn verify(py: Python<'_>, strict: bool) -> (bool, String) {
    py.detach(|| {
        let opts = core::verify::VerifyOptions {
            strict,
            ..Default::default()
        };
        let report = core::verify::run(&core::verify::Expectations::default(), &opts);
        (report.passed(), report.ledger())
    })
}

#[pymodule(name = "downsets")]
mod module {
    #[pymodule_export]
    use super::{count_downsets, dedekind, dedekind_report, table, verify, PyPoset};
}
