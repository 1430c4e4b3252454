//! Python bindings. Elements come back as lists of `(monomial, coefficient)` string pairs,
//! coefficients rendered as polynomials in `x` unless a value for `x` is given.

use dissection::diagram::{count, enumerate as enumerate_diagrams};
use dissection::dual::{lie_bracket, prelie_circ};
use dissection::hopf::{antipode_diagram, coproduct_diagram};
use dissection::poly::parse_rational;
use dissection::primitives::{cofree_reference, primitive_dimension};
use dissection::{DissectionDiagram, DualElement, Forest, LinComb, Rational};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_x(x: Option<&str>) -> PyResult<Option<Rational>> {
    x.map(parse_rational).transpose().map_err(value_error)
}

/// Terms of a combination as `(key, coefficient)` strings, after evaluating at `x` if given.
pub fn terms<K: Ord + Clone + ToString>(a: &LinComb<K>, x: &Option<Rational>) -> Vec<(String, String)> {
    let a = match x {
        Some(v) => a.specialize(v),
        None => a.clone(),
    };
    a.iter().map(|(k, c)| (k.to_string(), c.to_string())).collect()
}

/// A dissection diagram, written like `D{3: 0-1,0-2,2-3}`.
#[pyclass(name = "Diagram", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyDiagram(DissectionDiagram);

#[pymethods]
impl PyDiagram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyDiagram).map_err(value_error)
    }

    #[staticmethod]
    fn from_chords(degree: usize, chords: Vec<(usize, usize)>) -> PyResult<Self> {
        let chords = chords.into_iter().map(|(a, b)| dissection::Chord::new(a, b)).collect();
        DissectionDiagram::from_chords(degree, chords).map(PyDiagram).map_err(value_error)
    }

    #[staticmethod]
    fn corolla(n: usize) -> Self {
        PyDiagram(DissectionDiagram::corolla(n))
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        PyDiagram(DissectionDiagram::ladder(n))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn chords(&self) -> Vec<(usize, usize)> {
        self.0.chords().iter().map(|c| (c.low, c.high)).collect()
    }

    /// `[(left, right, coefficient), ...]`
    #[pyo3(signature = (x = None))]
    fn coproduct(&self, x: Option<&str>) -> PyResult<Vec<(String, String, String)>> {
        let x = parse_x(x)?;
        let t = coproduct_diagram(&self.0);
        let t = match &x {
            Some(v) => t.specialize(v),
            None => (*t).clone(),
        };
        Ok(t.iter().map(|((l, r), c)| (l.to_string(), r.to_string(), c.to_string())).collect())
    }

    #[pyo3(signature = (x = None))]
    fn antipode(&self, x: Option<&str>) -> PyResult<Vec<(String, String)>> {
        Ok(terms(&antipode_diagram(&self.0), &parse_x(x)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Diagram(\"{}\")", self.0)
    }
}

#[pyfunction]
fn enumerate(n: usize) -> Vec<PyDiagram> {
    enumerate_diagrams(n).iter().cloned().map(PyDiagram).collect()
}

#[pyfunction]
fn diagram_count(n: usize) -> String {
    count(n).to_string()
}

/// `Z_A ∘ Z_B` in the dual, as `(diagram, coefficient)` pairs.
#[pyfunction]
#[pyo3(signature = (a, b, x = None))]
fn prelie(a: &PyDiagram, b: &PyDiagram, x: Option<&str>) -> PyResult<Vec<(String, String)>> {
    Ok(terms(&prelie_circ(&a.0, &b.0), &parse_x(x)?))
}

#[pyfunction]
#[pyo3(signature = (a, b, x = None))]
fn bracket(a: &PyDiagram, b: &PyDiagram, x: Option<&str>) -> PyResult<Vec<(String, String)>> {
    let r = lie_bracket(&DualElement::diagram(&a.0), &DualElement::diagram(&b.0));
    Ok(terms(&r.0, &parse_x(x)?))
}

/// Image of a forest such as `[[][]]` in the dual, as `(monomial, coefficient)` pairs.
#[pyfunction]
#[pyo3(signature = (forest, x = None))]
fn phi(forest: &str, x: Option<&str>) -> PyResult<Vec<(String, String)>> {
    let f: Forest = forest.parse().map_err(value_error)?;
    Ok(terms(&dissection::morphism::phi(&f).0, &parse_x(x)?))
}

#[pyfunction]
fn primitive_dim(n: usize, x: &str) -> PyResult<usize> {
    if n == 0 || n > 5 {
        return Err(PyValueError::new_err("degree must be between 1 and 5"));
    }
    Ok(primitive_dimension(n, &parse_rational(x).map_err(value_error)?))
}

#[pyfunction]
fn cofree_dim(n: usize) -> String {
    cofree_reference(n).to_string()
}

#[pymodule]
fn dissection_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(diagram_count, m)?)?;
    m.add_function(wrap_pyfunction!(prelie, m)?)?;
    m.add_function(wrap_pyfunction!(bracket, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(primitive_dim, m)?)?;
    m.add_function(wrap_pyfunction!(cofree_dim, m)?)?;
    Ok(())
}
