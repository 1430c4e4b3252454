//! JSON form of elements. A term lists the factors of its monomial and the coefficients
//! `c_0, …, c_d` of its polynomial as `[numerator, denominator]` string pairs:
//!
//! ```json
//! {"terms":[{"monomial":["D{1: 0-1}"],"poly":[["1","1"],["1","1"]]}]}
//! ```
//!
//! Dual elements add `"basis":"dual"`; tensors use `"left"` and `"right"` in place of
//! `"monomial"`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{DiagramError, DiagramMonomial, DissectionDiagram};
use crate::dual::DualElement;
use crate::hopf::{AlgebraElement, TensorElement};
use crate::lincomb::LinComb;
use crate::poly::{Poly, Rational};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("bad coefficient {0:?}")]
    Number(String),
    #[error("expected basis {expected:?}, found {found:?}")]
    Basis { expected: Option<&'static str>, found: Option<String> },
}

type PolyJson = Vec<[String; 2]>;

#[derive(Serialize, Deserialize)]
struct Term {
    monomial: Vec<String>,
    poly: PolyJson,
}

#[derive(Serialize, Deserialize)]
struct Element {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<String>,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct TensorTerm {
    left: Vec<String>,
    right: Vec<String>,
    poly: PolyJson,
}

#[derive(Serialize, Deserialize)]
struct Tensor {
    terms: Vec<TensorTerm>,
}

fn poly_out(p: &Poly) -> PolyJson {
    p.coeffs().iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect()
}

fn poly_in(v: &PolyJson) -> Result<Poly, JsonError> {
    let int = |s: &String| s.parse::<BigInt>().map_err(|_| JsonError::Number(s.clone()));
    let mut coeffs = Vec::with_capacity(v.len());
    for [n, d] in v {
        let d = int(d)?;
        if d == BigInt::from(0) {
            return Err(JsonError::Number(format!("{n}/{d}")));
        }
        coeffs.push(Rational::new(int(n)?, d));
    }
    Ok(Poly::from_coeffs(coeffs))
}

fn monomial_out(m: &DiagramMonomial) -> Vec<String> {
    m.factors().iter().map(DissectionDiagram::to_string).collect()
}

fn monomial_in(v: &[String]) -> Result<DiagramMonomial, JsonError> {
    let factors: Result<Vec<DissectionDiagram>, _> = v.iter().map(|s| s.parse()).collect();
    Ok(DiagramMonomial::new(factors?))
}

fn element_out(a: &LinComb<DiagramMonomial>, basis: Option<&str>) -> String {
    let e = Element {
        basis: basis.map(str::to_string),
        terms: a.iter().map(|(m, c)| Term { monomial: monomial_out(m), poly: poly_out(c) }).collect(),
    };
    serde_json::to_string(&e).expect("plain data serializes")
}

fn element_in(s: &str, basis: Option<&'static str>) -> Result<LinComb<DiagramMonomial>, JsonError> {
    let e: Element = serde_json::from_str(s)?;
    if e.basis.as_deref() != basis {
        return Err(JsonError::Basis { expected: basis, found: e.basis });
    }
    let mut out = LinComb::zero();
    for t in &e.terms {
        out.add_term(monomial_in(&t.monomial)?, poly_in(&t.poly)?);
    }
    Ok(out)
}

pub fn algebra_to_json(a: &AlgebraElement) -> String {
    element_out(a, None)
}

pub fn algebra_from_json(s: &str) -> Result<AlgebraElement, JsonError> {
    element_in(s, None)
}

pub fn dual_to_json(a: &DualElement) -> String {
    element_out(&a.0, Some("dual"))
}

pub fn dual_from_json(s: &str) -> Result<DualElement, JsonError> {
    Ok(DualElement(element_in(s, Some("dual"))?))
}

pub fn tensor_to_json(t: &TensorElement) -> String {
    let e = Tensor {
        terms: t
            .iter()
            .map(|((l, r), c)| TensorTerm { left: monomial_out(l), right: monomial_out(r), poly: poly_out(c) })
            .collect(),
    };
    serde_json::to_string(&e).expect("plain data serializes")
}

pub fn tensor_from_json(s: &str) -> Result<TensorElement, JsonError> {
    let e: Tensor = serde_json::from_str(s)?;
    let mut out = LinComb::zero();
    for t in &e.terms {
        out.add_term((monomial_in(&t.left)?, monomial_in(&t.right)?), poly_in(&t.poly)?);
    }
    Ok(out)
}
