//! Graded pieces, primitive-space dimensions and explicit primitive elements.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::diagram::{enumerate, DiagramMonomial, DissectionDiagram};
use crate::hopf::{coproduct, coproduct_monomial, AlgebraElement, TensorElement};
use crate::linalg::SparseExactMatrix;
use crate::poly::{Poly, Rational};

/// All monomials of a fixed total degree, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: usize,
    pub monomials: Vec<DiagramMonomial>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &DiagramMonomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }
}

pub fn monomial_basis(n: usize) -> Arc<GradedBasis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GradedBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return b.clone();
    }
    let gens: Vec<DissectionDiagram> = (1..=n).flat_map(|k| enumerate(k).iter().cloned().collect::<Vec<_>>()).collect();
    fn go(gens: &[DissectionDiagram], from: usize, left: usize, cur: &mut Vec<DissectionDiagram>, out: &mut Vec<DiagramMonomial>) {
        if left == 0 {
            out.push(DiagramMonomial::new(cur.iter().cloned()));
            return;
        }
        for i in from..gens.len() {
            let k = gens[i].degree();
            if k > left {
                break;
            }
            cur.push(gens[i].clone());
            go(gens, i, left - k, cur, out);
            cur.pop();
        }
    }
    let mut monomials = Vec::new();
    go(&gens, 0, n, &mut Vec::new(), &mut monomials);
    monomials.sort();
    let b = Arc::new(GradedBasis { degree: n, monomials });
    cache.lock().unwrap().insert(n, b.clone());
    b
}

/// Parts of an element by monomial length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projections {
    pub linear: AlgebraElement,
    pub quadratic: AlgebraElement,
    pub cubic: AlgebraElement,
    pub rest: AlgebraElement,
}

pub fn projections(a: &AlgebraElement) -> Projections {
    let part = |f: &dyn Fn(usize) -> bool| a.iter().filter(|(m, _)| f(m.len())).map(|(m, c)| (m.clone(), c.clone())).collect();
    Projections {
        linear: part(&|l| l == 1),
        quadratic: part(&|l| l == 2),
        cubic: part(&|l| l == 3),
        rest: part(&|l| l == 0 || l > 3),
    }
}

/// Components of the coproduct selected by the lengths of the two legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductParts {
    /// length 1 ⊗ length 1
    pub linear: TensorElement,
    pub linear_op: TensorElement,
    /// length 2 ⊗ length 1
    pub quadratic: TensorElement,
    pub quadratic_op: TensorElement,
}

pub fn coproduct_parts(a: &AlgebraElement) -> CoproductParts {
    let delta = coproduct(a);
    let flipped: TensorElement = delta.iter().map(|((l, r), c)| ((r.clone(), l.clone()), c.clone())).collect();
    let select = |t: &TensorElement, ll: usize, rl: usize| -> TensorElement {
        t.iter().filter(|((l, r), _)| l.len() == ll && r.len() == rl).map(|(k, c)| (k.clone(), c.clone())).collect()
    };
    CoproductParts {
        linear: select(&delta, 1, 1),
        linear_op: select(&flipped, 1, 1),
        quadratic: select(&delta, 2, 1),
        quadratic_op: select(&flipped, 2, 1),
    }
}

/// Multiply the two legs of a tensor.
pub fn multiply_legs(t: &TensorElement) -> AlgebraElement {
    t.iter().map(|((l, r), c)| (l.mul(r), c.clone())).collect()
}

/// `Δ(a) = a ⊗ 1 + 1 ⊗ a`, checked symbolically.
pub fn is_primitive(a: &AlgebraElement) -> bool {
    a.coeff(&DiagramMonomial::unit()).is_zero() && crate::hopf::reduced_coproduct(a).is_zero()
}

/// Row labels of the reduced coproduct matrix in degree `n`: pairs of monomials of
/// degrees `(p, n - p)`, `1 ≤ p < n`, ordered lexicographically.
pub fn reduced_coproduct_rows(n: usize) -> Vec<(DiagramMonomial, DiagramMonomial)> {
    let mut rows = Vec::new();
    for p in 1..n {
        let (bl, br) = (monomial_basis(p), monomial_basis(n - p));
        for l in &bl.monomials {
            for r in &br.monomials {
                rows.push((l.clone(), r.clone()));
            }
        }
    }
    rows.sort();
    rows
}

/// `(row, column, coefficient)` triples of a matrix with polynomial entries.
pub type SymbolicEntries = Arc<Vec<(usize, usize, Poly)>>;

/// Reduced coproduct of each basis monomial of degree `n`, symbolic in `x`.
pub fn reduced_coproduct_symbolic(n: usize) -> SymbolicEntries {
    static CACHE: OnceLock<Mutex<HashMap<usize, SymbolicEntries>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let basis = monomial_basis(n);
    let rows = reduced_coproduct_rows(n);
    let index: HashMap<&(DiagramMonomial, DiagramMonomial), usize> = rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut entries: Vec<(usize, usize, Poly)> = basis
        .monomials
        .par_iter()
        .enumerate()
        .flat_map_iter(|(col, m)| {
            coproduct_monomial(m)
                .iter()
                .filter(|((l, r), _)| !l.is_unit() && !r.is_unit())
                .map(|(k, c)| (index[k], col, c.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    entries.sort_by_key(|e| (e.0, e.1));
    let entries = Arc::new(entries);
    cache.lock().unwrap().insert(n, entries.clone());
    entries
}

/// Matrix of the reduced coproduct from the degree-`n` monomials to the pairs of
/// [`reduced_coproduct_rows`], with `x` specialized.
pub fn reduced_coproduct_matrix(n: usize, x: &Rational) -> SparseExactMatrix {
    let mut m = SparseExactMatrix::new(reduced_coproduct_rows(n).len(), monomial_basis(n).len());
    for (r, c, p) in reduced_coproduct_symbolic(n).iter() {
        m.set(*r, *c, p.eval(x));
    }
    m
}

pub fn primitive_dimension(n: usize, x: &Rational) -> usize {
    reduced_coproduct_matrix(n, x).kernel_dimension()
}

/// Coefficient of `h^n` in `1 - 1/F(h)` with `F(h) = Π_m (1 - h^m)^{-d_m}`.
pub fn cofree_reference(n: usize) -> BigInt {
    // 1/F(h) = Π_m (1 - h^m)^{d_m}, truncated at degree n.
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::one();
    for m in 1..=n {
        let d = crate::diagram::count(m);
        let mut e = BigInt::zero();
        while e < d {
            for k in (m..=n).rev() {
                let prev = series[k - m].clone();
                series[k] -= prev;
            }
            e += 1;
        }
    }
    -series[n].clone()
}

fn mono(diagrams: &[&str]) -> DiagramMonomial {
    DiagramMonomial::new(diagrams.iter().map(|s| s.parse::<DissectionDiagram>().expect("valid literal")))
}

fn element(terms: &[(&[&str], Poly)]) -> AlgebraElement {
    terms.iter().map(|(m, c)| (mono(m), c.clone())).collect()
}

const X1: &str = "D{1: 0-1}";
const X2: &str = "D{2: 0-1,0-2}";
const Y2: &str = "D{2: 0-2,1-2}";
const L2: &str = "D{2: 0-1,1-2}";

/// Three independent primitive elements of degree 2.
pub fn deg2_primitive_basis() -> Vec<AlgebraElement> {
    let p = Poly::from_ints;
    vec![
        element(&[(&[Y2], p(&[1, 1])), (&[L2], p(&[-2]))]),
        element(&[(&[Y2], p(&[1])), (&[X2], p(&[-1]))]),
        element(&[(&[Y2], p(&[1])), (&[X1, X1], p(&[-1]))]),
    ]
}

/// Nine independent primitive elements of degree 3.
pub fn deg3_primitive_basis() -> Vec<AlgebraElement> {
    let a = "D{3: 0-1,1-2,0-3}";
    let b = "D{3: 1-2,0-2,0-3}";
    let c = "D{3: 0-1,0-2,2-3}";
    let d = "D{3: 0-1,1-2,2-3}";
    let e = "D{3: 0-1,1-2,1-3}";
    let f = "D{3: 0-1,0-2,0-3}";
    let g = "D{3: 1-2,0-2,2-3}";
    let h = "D{3: 1-3,2-3,0-3}";
    let i = "D{3: 0-1,2-3,1-3}";
    let j = "D{3: 1-3,1-2,0-3}";
    let k = "D{3: 0-1,2-3,0-3}";
    let y3 = "D{3: 1-2,2-3,0-3}";
    let p = Poly::from_ints;
    let third = Rational::new(1.into(), 3.into());
    vec![
        element(&[
            (&[a], p(&[1])),
            (&[b], p(&[0, -1])),
            (&[c], p(&[0, 1])),
            (&[L2, X1], p(&[-1, -1])),
            (&[X2, X1], p(&[-1, 0, -1])),
            (&[Y2, X1], p(&[0, 1])),
            (&[X1, X1, X1], p(&[1, 0, 1])),
        ]),
        element(&[
            (&[d], p(&[1])),
            (&[b], p(&[0, 0, -1])),
            (&[e], p(&[0, 1])),
            (&[L2, X1], p(&[-1, -2, -1])),
            (&[X2, X1], p(&[0, -1, 1])),
            (&[Y2, X1], p(&[0, 0, 1])),
            (&[X1, X1, X1], p(&[1, 5, -1, 1]).scale(&third)),
        ]),
        element(&[
            (&[c], p(&[1])),
            (&[f], p(&[-1])),
            (&[L2, X1], p(&[-1])),
            (&[X2, X1], p(&[2, -1])),
            (&[X1, X1, X1], p(&[-1, 1])),
        ]),
        element(&[
            (&[g], p(&[1])),
            (&[h], p(&[-1])),
            (&[L2, X1], p(&[-1])),
            (&[X2, X1], p(&[1])),
            (&[Y2, X1], p(&[1, -1])),
            (&[X1, X1, X1], p(&[-1, 1])),
        ]),
        element(&[
            (&[i], p(&[1])),
            (&[f], p(&[-1, -1])),
            (&[g], p(&[1])),
            (&[L2, X1], p(&[-2])),
            (&[X2, X1], p(&[2, 2])),
            (&[Y2, X1], p(&[-1, -1])),
        ]),
        element(&[(&[j], p(&[1])), (&[g], p(&[-1]))]),
        element(&[
            (&[b], p(&[1])),
            (&[j], p(&[-1])),
            (&[L2, X1], p(&[1])),
            (&[X2, X1], p(&[-1])),
            (&[Y2, X1], p(&[-1, 1])),
            (&[X1, X1, X1], p(&[1, -1])),
        ]),
        element(&[(&[k], p(&[1])), (&[X2, X1], p(&[-2])), (&[Y2, X1], p(&[-1])), (&[X1, X1, X1], p(&[2]))]),
        element(&[(&[y3], p(&[1])), (&[Y2, X1], p(&[-3])), (&[X1, X1, X1], p(&[2]))]),
    ]
}

/// Rank of a family of elements of one degree after specializing `x`.
pub fn family_rank(family: &[AlgebraElement], x: &Rational) -> usize {
    let mut keys: Vec<&DiagramMonomial> = family.iter().flat_map(|v| v.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut m = SparseExactMatrix::new(family.len(), keys.len());
    for (r, v) in family.iter().enumerate() {
        for (c, k) in keys.iter().enumerate() {
            m.set(r, c, v.coeff(k).eval(x));
        }
    }
    m.rank()
}
