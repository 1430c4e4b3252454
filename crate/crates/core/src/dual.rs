//! The graded dual on the basis `Z_U` dual to diagram monomials, its product and the
//! pre-Lie product on the span of single diagrams.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;

use crate::diagram::{enumerate, DiagramMonomial, DissectionDiagram};
use crate::hopf::{coproduct_monomial, AlgebraElement};
use crate::lincomb::LinComb;
use crate::poly::Poly;
use crate::prelie::{PreLie, SymElement};
use crate::primitives::monomial_basis;

/// Element of the dual, in the basis `Z_U` with `Z_U(V) = δ_{U,V}` on canonical monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualElement(pub LinComb<DiagramMonomial>);

impl DualElement {
    pub fn zero() -> Self {
        DualElement(LinComb::zero())
    }

    /// `Z_1`, the counit.
    pub fn unit() -> Self {
        Self::basis(DiagramMonomial::unit())
    }

    pub fn basis(u: DiagramMonomial) -> Self {
        DualElement(LinComb::basis(u))
    }

    pub fn diagram(d: &DissectionDiagram) -> Self {
        Self::basis(DiagramMonomial::single(d.clone()))
    }

    pub fn from_linear(a: &LinComb<DissectionDiagram>) -> Self {
        DualElement(a.iter().map(|(d, c)| (DiagramMonomial::single(d.clone()), c.clone())).collect())
    }

    /// Part supported on single diagrams.
    pub fn linear_part(&self) -> LinComb<DissectionDiagram> {
        self.0.iter().filter_map(|(u, c)| u.as_single().map(|d| (d.clone(), c.clone()))).collect()
    }

    pub fn coeff(&self, u: &DiagramMonomial) -> Poly {
        self.0.coeff(u)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        for (i, (u, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == Poly::one() {
                write!(f, "Z[{u}]")?;
            } else {
                write!(f, "({c}) Z[{u}]")?;
            }
        }
        Ok(())
    }
}

pub fn pairing(a: &DualElement, b: &AlgebraElement) -> Poly {
    let mut out = Poly::zero();
    for (u, c) in &a.0 {
        if let Some(v) = b.get(u) {
            out += c * v;
        }
    }
    out
}

/// Structure constants in degree `n`: `(D1, D2) ↦ Σ_D c(D1, D2; D) D`.
pub fn circ_table(n: usize) -> Arc<HashMap<(DissectionDiagram, DissectionDiagram), LinComb<DissectionDiagram>>> {
    type Table = HashMap<(DissectionDiagram, DissectionDiagram), LinComb<DissectionDiagram>>;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let mut table: Table = HashMap::new();
    for d in enumerate(n).iter() {
        for mask in 1..d.full_mask() {
            let q = d.contract_mask(mask);
            let Some(q) = q.as_single() else { continue };
            let (r, k) = d.restrict_mask(mask);
            table.entry((q.clone(), r)).or_default().add_term(d.clone(), Poly::x_pow(k));
        }
    }
    let table = Arc::new(table);
    cache.lock().unwrap().insert(n, table.clone());
    table
}

/// `c(D1, D2; D)`: the sum of `x^{k_C(D)}` over chord subsets `C` of `D` whose contraction
/// is the single diagram `D1` and whose restriction is `D2`.
pub fn c_coefficient(d1: &DissectionDiagram, d2: &DissectionDiagram, d: &DissectionDiagram) -> Option<Poly> {
    if d.degree() != d1.degree() + d2.degree() {
        return None;
    }
    if d1.is_empty() || d2.is_empty() {
        return Some(Poly::zero());
    }
    Some(prelie_circ(d1, d2).coeff(d))
}

/// `Z_{D1} ∘ Z_{D2} = Σ_D c(D1, D2; D) Z_D`
pub fn prelie_circ(d1: &DissectionDiagram, d2: &DissectionDiagram) -> LinComb<DissectionDiagram> {
    circ_table(d1.degree() + d2.degree()).get(&(d1.clone(), d2.clone())).cloned().unwrap_or_default()
}

pub fn prelie_circ_diagrams(a: &DualElement, b: &DualElement) -> DualElement {
    DualElement::from_linear(&crate::prelie::circ_linear(&DiagramPreLie, &a.linear_part(), &b.linear_part()))
}

pub fn lie_bracket(a: &DualElement, b: &DualElement) -> DualElement {
    DualElement::from_linear(&crate::prelie::bracket(&DiagramPreLie, &a.linear_part(), &b.linear_part()))
}

/// The pre-Lie algebra of single-diagram dual elements.
#[derive(Clone, Copy, Debug, Default)]
pub struct DiagramPreLie;

impl PreLie for DiagramPreLie {
    type Basis = DissectionDiagram;

    fn circ(&self, a: &DissectionDiagram, b: &DissectionDiagram) -> LinComb<DissectionDiagram> {
        prelie_circ(a, b)
    }

    fn degree(&self, b: &DissectionDiagram) -> usize {
        b.degree()
    }
}

/// Product of the dual: `(Z_a Z_b)(M) = (Z_a ⊗ Z_b)(Δ M)`.
pub fn dual_product(a: &DualElement, b: &DualElement) -> DualElement {
    let mut degrees: Vec<usize> = Vec::new();
    for u in a.0.keys() {
        for v in b.0.keys() {
            degrees.push(u.degree() + v.degree());
        }
    }
    degrees.sort();
    degrees.dedup();
    let mut out = LinComb::zero();
    for n in degrees {
        for m in &monomial_basis(n).monomials {
            let mut c = Poly::zero();
            for ((l, r), w) in &coproduct_monomial(m) {
                if let (Some(ca), Some(cb)) = (a.0.get(l), b.0.get(r)) {
                    c += &(ca * cb) * w;
                }
            }
            out.add_term(m.clone(), c);
        }
    }
    DualElement(out)
}

/// A symmetric-algebra monomial `Π Z_{D_i}^{m_i}` equals `Π m_i! · Z_U` in the dual.
pub fn sym_to_dual(a: &SymElement<DissectionDiagram>) -> DualElement {
    DualElement(
        a.iter()
            .map(|(m, c)| {
                let u = DiagramMonomial::new(m.iter().cloned());
                let f = Poly::constant(BigRational::from_integer(u.symmetry_factor()));
                (u, c * &f)
            })
            .collect(),
    )
}

pub fn dual_to_sym(a: &DualElement) -> SymElement<DissectionDiagram> {
    a.0.iter()
        .map(|(u, c)| {
            let f = BigRational::from_integer(u.symmetry_factor());
            (u.factors().to_vec(), c.scale(&(BigRational::from_integer(1.into()) / f)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_constants() {
        let x1 = DissectionDiagram::corolla(1);
        let l: DissectionDiagram = "D{2: 0-1,1-2}".parse().unwrap();
        assert_eq!(c_coefficient(&x1, &x1, &l), Some(Poly::from_ints(&[1, 1])));
        assert_eq!(c_coefficient(&x1, &x1, &DissectionDiagram::corolla(2)), Some(Poly::from_int(2)));
        assert_eq!(c_coefficient(&x1, &x1, &DissectionDiagram::ladder(2)), Some(Poly::from_int(2)));
        assert_eq!(c_coefficient(&x1, &x1, &DissectionDiagram::corolla(3)), None);
    }
}
