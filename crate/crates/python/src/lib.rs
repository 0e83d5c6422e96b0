use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use pseudofn::groupalg::{self, FiniteGroup, GroupAlgebraElement};
use pseudofn::laurent::{self, LaurentElement, TruncationWindow};
use pseudofn::pnorm::PowerConfig;
use pseudofn::{CertifiedInterval, Complex64, ComplexMatrix, PExponent};

fn value_error(e: pseudofn::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts a number or a string such as `"4/3"` or `"inf"`.
fn exponent(p: &Bound<'_, PyAny>) -> PyResult<PExponent> {
    if let Ok(s) = p.extract::<String>() {
        return s.parse().map_err(value_error);
    }
    PExponent::new(p.extract::<f64>()?).map_err(value_error)
}

fn matrix(rows: Vec<Vec<Complex64>>) -> PyResult<ComplexMatrix> {
    ComplexMatrix::from_rows(rows).map_err(value_error)
}

#[pyclass(name = "CertifiedInterval", frozen, from_py_object)]
#[derive(Clone)]
struct PyInterval {
    inner: CertifiedInterval,
}

#[pymethods]
impl PyInterval {
    #[getter]
    fn lower(&self) -> f64 {
        self.inner.lower
    }

    #[getter]
    fn upper(&self) -> f64 {
        self.inner.upper
    }

    #[getter]
    fn witness(&self) -> Vec<Complex64> {
        self.inner.witness.clone()
    }

    #[getter]
    fn p(&self) -> f64 {
        self.inner.p.value()
    }

    #[getter]
    fn converged(&self) -> bool {
        self.inner.converged
    }

    fn width(&self) -> f64 {
        self.inner.width()
    }

    #[pyo3(signature = (value, tol = 0.0))]
    fn contains(&self, value: f64, tol: f64) -> bool {
        self.inner.contains(value, tol)
    }

    #[pyo3(signature = (other, tol = 0.0))]
    fn overlaps(&self, other: &PyInterval, tol: f64) -> bool {
        self.inner.overlaps(&other.inner, tol)
    }

    fn __repr__(&self) -> String {
        format!(
            "CertifiedInterval(p={}, lower={}, upper={}, converged={})",
            self.inner.p, self.inner.lower, self.inner.upper, self.inner.converged
        )
    }
}

impl From<CertifiedInterval> for PyInterval {
    fn from(inner: CertifiedInterval) -> Self {
        PyInterval { inner }
    }
}

#[pyclass(name = "FiniteGroup", frozen, from_py_object)]
#[derive(Clone)]
struct PyGroup {
    inner: Arc<FiniteGroup>,
}

#[pymethods]
impl PyGroup {
    /// Builds a group from its multiplication table, `table[a][b] = a * b`.
    #[new]
    fn new(table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyGroup {
            inner: Arc::new(FiniteGroup::from_table(table).map_err(value_error)?),
        })
    }

    #[staticmethod]
    fn cyclic(n: usize) -> Self {
        PyGroup { inner: Arc::new(FiniteGroup::cyclic(n)) }
    }

    #[staticmethod]
    fn symmetric(d: usize) -> Self {
        PyGroup { inner: Arc::new(FiniteGroup::symmetric(d)) }
    }

    #[staticmethod]
    fn klein_four() -> Self {
        PyGroup { inner: Arc::new(FiniteGroup::klein_four()) }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn identity(&self) -> usize {
        self.inner.identity()
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.table()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul(a, b)
    }

    fn inv(&self, a: usize) -> usize {
        self.inner.inv(a)
    }

    fn __repr__(&self) -> String {
        format!("FiniteGroup({}, order={})", self.inner.name(), self.inner.order())
    }
}

#[pyclass(name = "GroupAlgebraElement", frozen, from_py_object)]
#[derive(Clone)]
struct PyElement {
    inner: GroupAlgebraElement,
}

#[pymethods]
impl PyElement {
    #[new]
    fn new(group: &PyGroup, coeffs: Vec<Complex64>) -> PyResult<Self> {
        Ok(PyElement {
            inner: GroupAlgebraElement::new(group.inner.clone(), coeffs).map_err(value_error)?,
        })
    }

    #[staticmethod]
    fn delta(group: &PyGroup, s: usize) -> PyResult<Self> {
        if s >= group.inner.order() {
            return Err(PyValueError::new_err(format!("{s} is not an element of the group")));
        }
        Ok(PyElement { inner: GroupAlgebraElement::delta(group.inner.clone(), s) })
    }

    #[staticmethod]
    fn uniform(group: &PyGroup) -> Self {
        PyElement { inner: GroupAlgebraElement::uniform(group.inner.clone()) }
    }

    #[getter]
    fn coeffs(&self) -> Vec<Complex64> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn group(&self) -> PyGroup {
        PyGroup { inner: self.inner.group().clone() }
    }

    fn l1_norm(&self) -> f64 {
        self.inner.l1_norm()
    }

    fn convolve(&self, other: &PyElement) -> PyResult<Self> {
        Ok(PyElement { inner: self.inner.convolve(&other.inner).map_err(value_error)? })
    }

    fn involution(&self) -> Self {
        PyElement { inner: self.inner.involution() }
    }

    /// Matrix of left convolution on the canonical basis.
    fn regular_rep(&self) -> Vec<Vec<Complex64>> {
        groupalg::regular_rep(&self.inner).to_rows()
    }

    /// Certified bracket for the norm in `F^p_lambda(G)`.
    fn norm(&self, p: &Bound<'_, PyAny>) -> PyResult<PyInterval> {
        fp_lambda_norm(self, p)
    }

    /// Diagonal (DFT) coordinates; the group must be `Z_n`.
    fn gelfand(&self) -> PyResult<Vec<Complex64>> {
        Ok(groupalg::to_gelfand(&self.inner).map_err(value_error)?.gelfand().to_vec())
    }

    fn __repr__(&self) -> String {
        format!("GroupAlgebraElement(order={}, coeffs={:?})", self.inner.group().order(), self.inner.coeffs())
    }
}

#[pyclass(name = "LaurentElement", frozen, from_py_object)]
#[derive(Clone)]
struct PyLaurent {
    inner: LaurentElement,
}

#[pymethods]
impl PyLaurent {
    /// `terms` is a list of `(offset, coefficient)` pairs.
    #[new]
    fn new(terms: Vec<(i64, Complex64)>) -> PyResult<Self> {
        Ok(PyLaurent { inner: LaurentElement::new(terms).map_err(value_error)? })
    }

    fn terms(&self) -> Vec<(i64, Complex64)> {
        self.inner.terms().collect()
    }

    fn radius(&self) -> u64 {
        self.inner.radius()
    }

    fn l1_norm(&self) -> f64 {
        self.inner.l1_norm()
    }

    /// Certified bracket for the norm on `l^p(Z)` using the window `[-L, L]`.
    fn norm(&self, p: &Bound<'_, PyAny>, window: usize) -> PyResult<PyInterval> {
        let w = TruncationWindow::new(window).map_err(value_error)?;
        Ok(laurent::fpz_norm(&self.inner, exponent(p)?, w).map_err(value_error)?.into())
    }

    /// Fiber sums along `Z -> Z_m`.
    fn push(&self, m: usize) -> PyResult<PyElement> {
        Ok(PyElement { inner: self.inner.push_to_cyclic(m).map_err(value_error)? })
    }

    fn __repr__(&self) -> String {
        format!("LaurentElement({:?})", self.inner.terms().collect::<Vec<_>>())
    }
}

/// Certified bracket for the induced `p`-norm of a matrix given as rows.
#[pyfunction]
#[pyo3(signature = (rows, p, seed = 0, tol = 1e-12))]
fn pnorm(rows: Vec<Vec<Complex64>>, p: &Bound<'_, PyAny>, seed: u64, tol: f64) -> PyResult<PyInterval> {
    let a = matrix(rows)?;
    let config = PowerConfig::default().with_seed(seed).with_tol(tol);
    Ok(pseudofn::pnorm::pnorm_with(&a, exponent(p)?, &config).map_err(value_error)?.into())
}

/// Riesz-Thorin bound from the norms `n0` at `p0` and `n1` at `p1`.
#[pyfunction]
fn riesz_thorin(
    p: &Bound<'_, PyAny>,
    p0: &Bound<'_, PyAny>,
    n0: f64,
    p1: &Bound<'_, PyAny>,
    n1: f64,
) -> PyResult<f64> {
    pseudofn::pnorm::riesz_thorin(exponent(p)?, (exponent(p0)?, n0), (exponent(p1)?, n1)).map_err(value_error)
}

#[pyfunction]
fn fp_lambda_norm(f: &PyElement, p: &Bound<'_, PyAny>) -> PyResult<PyInterval> {
    Ok(groupalg::fp_lambda_norm(&f.inner, exponent(p)?).map_err(value_error)?.into())
}

/// Norm of the `Z_n` element with the given Gelfand coordinates.
#[pyfunction]
fn circulant_norm(gelfand: Vec<Complex64>, p: &Bound<'_, PyAny>) -> PyResult<PyInterval> {
    let xi = groupalg::CirculantElement::new(gelfand).map_err(value_error)?;
    Ok(groupalg::circulant_norm(&xi, exponent(p)?).map_err(value_error)?.into())
}

#[pyfunction]
fn dft_matrix(n: usize) -> Vec<Vec<Complex64>> {
    groupalg::dft_matrix(n).to_rows()
}

#[pyfunction]
fn folner_average(k: usize, m: u32) -> PyResult<PyLaurent> {
    Ok(PyLaurent { inner: laurent::folner_average(k, m).map_err(value_error)? })
}

#[pyfunction]
fn folner_lift(f: &PyElement, k: usize) -> PyResult<PyLaurent> {
    Ok(PyLaurent { inner: laurent::folner_lift(&f.inner, k).map_err(value_error)? })
}

/// Exact `l^1` norm of the theta operator as `(numerator, denominator)`.
#[pyfunction]
fn theta_l1(k: usize, m: u32, s: u32) -> PyResult<(i64, i64)> {
    let r = laurent::theta_l1(k, m, s).map_err(value_error)?;
    Ok((*r.numer(), *r.denom()))
}

#[pyfunction]
fn theta_p_bound(k: usize, m: u32, p: &Bound<'_, PyAny>) -> PyResult<f64> {
    laurent::theta_p_bound(k, m, exponent(p)?).map_err(value_error)
}

/// Target norm on `Z_m`, section lower bound of the lift and a priori bound.
#[pyfunction]
#[pyo3(signature = (f, p, k, window = None, seed = 0))]
fn quotient_gap<'py>(
    py: Python<'py>,
    f: &PyElement,
    p: &Bound<'py, PyAny>,
    k: usize,
    window: Option<usize>,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let g = laurent::quotient_gap(&f.inner, exponent(p)?, k, window, seed).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("m", g.m)?;
    out.set_item("p", g.p.value())?;
    out.set_item("k", g.k)?;
    out.set_item("L", g.window)?;
    out.set_item("target", PyInterval::from(g.target.clone()))?;
    out.set_item("lift_lower", g.lift_lower)?;
    out.set_item("lift_upper_apriori", g.lift_upper_apriori)?;
    out.set_item("gap_bound", g.gap_bound())?;
    out.set_item("sandwich", g.sandwich_holds(1e-6))?;
    Ok(out)
}

#[pymodule]
fn pseudofn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInterval>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyElement>()?;
    m.add_class::<PyLaurent>()?;
    m.add_function(wrap_pyfunction!(pnorm, m)?)?;
    m.add_function(wrap_pyfunction!(riesz_thorin, m)?)?;
    m.add_function(wrap_pyfunction!(fp_lambda_norm, m)?)?;
    m.add_function(wrap_pyfunction!(circulant_norm, m)?)?;
    m.add_function(wrap_pyfunction!(dft_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(folner_average, m)?)?;
    m.add_function(wrap_pyfunction!(folner_lift, m)?)?;
    m.add_function(wrap_pyfunction!(theta_l1, m)?)?;
    m.add_function(wrap_pyfunction!(theta_p_bound, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_gap, m)?)?;
    Ok(())
}
