//! Python bindings. Elements are dicts from basis names to coefficients
//! (`int` or `"p/q"` strings); reports come back as plain dicts.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;
use vinberg::centralizers::{centralizer, centralizer_report, graded_centralizer_dims, Subalgebra};
use vinberg::graded::{graded_from_labels, KacLabels};
use vinberg::jordan::{jordan_class_data, jordan_decompose, rank_of_grading, SamplingConfig};
use vinberg::kernel::Rational;
use vinberg::lie::Element;
use vinberg::slices::{graded_sl2_triple, verify_slice_induction};
use vinberg::tables::{bundled_fixtures, verify_rows};
use vinberg::trivector as tri;
use vinberg::trivector::Trivector;

create_exception!(vinberg_py, VinbergError, PyException);

fn err(e: vinberg::Error) -> PyErr {
    use vinberg::Error::*;
    match e {
        Parse(_) | UnsupportedType(_) | InvalidLabels(_) | AlgebraMismatch(..) | Dimension(_) | NotHomogeneous(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => VinbergError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| VinbergError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (s,))
}

#[derive(FromPyObject)]
enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn rational(&self) -> PyResult<Rational> {
        match self {
            Coeff::Int(n) => Ok(Rational::from_i64(*n)),
            Coeff::Text(s) => s.parse().map_err(err),
        }
    }
}

fn sampling(seed: u64, trials: usize, coeff_bound: i64) -> SamplingConfig {
    SamplingConfig { seed, trials, coeff_bound }
}

/// A Lie algebra with a Z/m-grading.
#[pyclass(name = "GradedAlgebra", frozen, module = "vinberg_py")]
pub struct PyGradedAlgebra {
    inner: vinberg::graded::GradedAlgebra,
}

impl PyGradedAlgebra {
    fn vector(&self, x: BTreeMap<String, Coeff>) -> PyResult<Vec<Rational>> {
        let alg = &self.inner.algebra;
        let mut v = vec![Rational::zero(); alg.dim()];
        for (name, c) in x {
            let i = alg.index_of(&name).ok_or_else(|| PyValueError::new_err(format!("unknown basis element '{name}'")))?;
            v[i] += &c.rational()?;
        }
        Ok(v)
    }

    fn element(&self, v: &[Rational]) -> BTreeMap<String, String> {
        let alg = &self.inner.algebra;
        Element::from_dense(alg, v).coeffs.iter().map(|(i, c)| (alg.name(*i).to_string(), c.to_string())).collect()
    }
}

#[pymethods]
impl PyGradedAlgebra {
    /// From Kac labels such as `"G2: s=[1,0,1]"`.
    #[staticmethod]
    fn from_labels(labels: &str) -> PyResult<Self> {
        let l: KacLabels = labels.parse().map_err(err)?;
        Ok(PyGradedAlgebra { inner: graded_from_labels(&l).map_err(err)? })
    }

    /// The 248-dimensional model `sl9 + Λ³ + Λ³*` with m = 3.
    #[staticmethod]
    fn e8_trivector() -> Self {
        PyGradedAlgebra { inner: tri::e8_model().graded.clone() }
    }

    #[getter]
    fn id(&self) -> String {
        self.inner.algebra.id().to_string()
    }

    #[getter]
    fn labels(&self) -> Option<String> {
        self.inner.labels.as_ref().map(ToString::to_string)
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn graded_dims(&self) -> Vec<usize> {
        self.inner.graded_dims()
    }

    fn basis_names(&self) -> Vec<String> {
        self.inner.algebra.names().to_vec()
    }

    /// Names of the basis vectors of degree `l`.
    fn block(&self, l: usize) -> PyResult<Vec<String>> {
        if l >= self.inner.m {
            return Err(PyValueError::new_err(format!("degree {l} out of range for m = {}", self.inner.m)));
        }
        Ok(self.inner.block(l).iter().map(|&i| self.inner.algebra.name(i).to_string()).collect())
    }

    fn bracket(&self, x: BTreeMap<String, Coeff>, y: BTreeMap<String, Coeff>) -> PyResult<BTreeMap<String, String>> {
        let (x, y) = (self.vector(x)?, self.vector(y)?);
        Ok(self.element(&self.inner.algebra.bracket(&x, &y)))
    }

    #[pyo3(signature = (seed=0, trials=5, coeff_bound=1000))]
    fn rank(&self, py: Python<'_>, seed: u64, trials: usize, coeff_bound: i64) -> PyResult<usize> {
        let cfg = sampling(seed, trials, coeff_bound);
        py.detach(|| rank_of_grading(&self.inner, &cfg)).map(|r| r.rank).map_err(err)
    }

    #[pyo3(signature = (seed=0, trials=5, coeff_bound=1000))]
    fn nilcone_dim(&self, py: Python<'_>, seed: u64, trials: usize, coeff_bound: i64) -> PyResult<usize> {
        Ok(self.inner.block(1).len() - self.rank(py, seed, trials, coeff_bound)?)
    }

    fn centralizer_dims(&self, x: BTreeMap<String, Coeff>) -> PyResult<Vec<usize>> {
        graded_centralizer_dims(&self.inner, &self.vector(x)?).map_err(err)
    }

    fn centralizer_report<'py>(&self, py: Python<'py>, x: BTreeMap<String, Coeff>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &centralizer_report(&self.inner, &self.vector(x)?))
    }

    /// `(x_s, x_n)`.
    fn jordan_decomposition(&self, x: BTreeMap<String, Coeff>) -> PyResult<(BTreeMap<String, String>, BTreeMap<String, String>)> {
        let p = jordan_decompose(&self.inner, &self.vector(x)?).map_err(err)?;
        Ok((self.element(&p.x_s), self.element(&p.x_n)))
    }

    fn jordan_class_dim(&self, x: BTreeMap<String, Coeff>) -> PyResult<usize> {
        jordan_class_data(&self.inner, &self.vector(x)?).map(|d| d.dim_class).map_err(err)
    }

    /// Graded triple through `e`, inside the centralizer of `within`'s semisimple part.
    #[pyo3(signature = (e, within=None))]
    fn sl2_triple<'py>(
        &self,
        py: Python<'py>,
        e: BTreeMap<String, Coeff>,
        within: Option<BTreeMap<String, Coeff>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let g = &self.inner;
        let m = match within {
            Some(y) => centralizer(g, &jordan_decompose(g, &self.vector(y)?).map_err(err)?.x_s),
            None => Subalgebra::full(g),
        };
        let t = graded_sl2_triple(g, &m, &self.vector(e)?).map_err(err)?;
        let out = serde_json::json!({
            "e": self.element(&t.e),
            "h": self.element(&t.h),
            "f": self.element(&t.f),
            "m_dim": t.m.dim(),
            "slice_dim": t.slice_basis.len(),
            "relations_hold": t.relations_hold(g),
            "transversal": t.transversal(g),
        });
        to_py(py, &out)
    }

    fn slice_induction<'py>(&self, py: Python<'py>, x: BTreeMap<String, Coeff>, y: BTreeMap<String, Coeff>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &verify_slice_induction(&self.inner, &self.vector(x)?, &self.vector(y)?).map_err(err)?)
    }

    fn __repr__(&self) -> String {
        match &self.inner.labels {
            Some(l) => format!("GradedAlgebra({l})"),
            None => format!("GradedAlgebra({}, m={})", self.inner.algebra.id(), self.inner.m),
        }
    }
}

/// A degree-one (or with `dual`, degree-two) element of the trivector model
/// from `[(i, j, k, coeff), ...]`.
#[pyfunction]
#[pyo3(signature = (terms, dual=false))]
fn trivector(terms: Vec<(u8, u8, u8, Coeff)>, dual: bool) -> PyResult<BTreeMap<String, String>> {
    let t = terms.iter().map(|(i, j, k, c)| Ok(([*i, *j, *k], c.rational()?))).collect::<PyResult<Vec<_>>>()?;
    let t = Trivector::from_terms(&t).map_err(err)?;
    let model = PyGradedAlgebra::e8_trivector();
    Ok(model.element(&t.to_vector::<Rational>(dual)))
}

#[pyfunction]
fn solve_modes<'py>(py: Python<'py>, n: Vec<i64>, m: usize) -> PyResult<Bound<'py, PyAny>> {
    let inst = vinberg::modes::solve_modes(&n, m).map_err(err)?;
    to_py(py, &vinberg::modes::ModeReport::from(&inst))
}

/// Checks the bundled table rows; `budget="small"` skips type E.
#[pyfunction]
#[pyo3(signature = (budget="small", filter=None, workers=4))]
fn verify_tables<'py>(py: Python<'py>, budget: &str, filter: Option<&str>, workers: usize) -> PyResult<Bound<'py, PyAny>> {
    let full = match budget {
        "small" => false,
        "full" => true,
        _ => return Err(PyValueError::new_err("budget must be 'small' or 'full'")),
    };
    let rows: Vec<_> =
        bundled_fixtures().into_iter().filter(|r| (full || !r.is_large()) && filter.is_none_or(|f| r.labels.contains(f))).collect();
    let out = py.detach(|| verify_rows(&rows, &SamplingConfig::default(), workers));
    to_py(py, &out)
}

#[pyfunction]
fn e8_class_dims<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &tri::example_class_dims().map_err(err)?)
}

#[pyfunction]
fn e8_family_iii<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &tri::family_iii_centralizer())
}

/// Variant 1, 2 or 3.
#[pyfunction]
fn e8_slice_example<'py>(py: Python<'py>, variant: u8) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &tri::e8_slice_example(variant).map_err(err)?)
}

#[pyfunction]
fn e8_glueing<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &tri::glueing_invariants().map_err(err)?)
}

#[pyfunction]
fn e8_adapted_cartan<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &tri::e8_adapted_cartan())
}

#[pymodule]
pub fn vinberg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGradedAlgebra>()?;
    m.add("VinbergError", m.py().get_type::<VinbergError>())?;
    m.add_function(wrap_pyfunction!(trivector, m)?)?;
    m.add_function(wrap_pyfunction!(solve_modes, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    m.add_function(wrap_pyfunction!(e8_class_dims, m)?)?;
    m.add_function(wrap_pyfunction!(e8_family_iii, m)?)?;
    m.add_function(wrap_pyfunction!(e8_slice_example, m)?)?;
    m.add_function(wrap_pyfunction!(e8_glueing, m)?)?;
    m.add_function(wrap_pyfunction!(e8_adapted_cartan, m)?)?;
    Ok(())
}
