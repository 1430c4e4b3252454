//! The commutative Hopf algebra spanned by monomials in diagrams.
//!
//! Coefficients live in `Q[x]`; specializing `x` to a number gives the specialized
//! algebras, which is why everything here is computed symbolically.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::diagram::{contract_pieces, DiagramMonomial, DissectionDiagram, Piece};
use crate::lincomb::LinComb;
use crate::poly::{binomial, factorial, rational, Poly};

pub type AlgebraElement = LinComb<DiagramMonomial>;
pub type TensorElement = LinComb<(DiagramMonomial, DiagramMonomial)>;
pub type TripleTensor = LinComb<(DiagramMonomial, DiagramMonomial, DiagramMonomial)>;

pub fn diagram(d: &DissectionDiagram) -> AlgebraElement {
    AlgebraElement::basis(DiagramMonomial::single(d.clone()))
}

pub fn unit() -> AlgebraElement {
    AlgebraElement::basis(DiagramMonomial::unit())
}

pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (ma, ca) in a {
        for (mb, cb) in b {
            out.add_term(ma.mul(mb), ca * cb);
        }
    }
    out
}

pub fn multiply_tensors(a: &TensorElement, b: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((l1, r1), c1) in a {
        for ((l2, r2), c2) in b {
            out.add_term((l1.mul(l2), r1.mul(r2)), c1 * c2);
        }
    }
    out
}

/// Sum over chord subsets `C` of `x^{k_C} q_C(D) ⊗ r_C(D)`.
pub fn coproduct_diagram(d: &DissectionDiagram) -> Arc<TensorElement> {
    static CACHE: OnceLock<Mutex<HashMap<DissectionDiagram, Arc<TensorElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(d) {
        return t.clone();
    }
    let mut out = TensorElement::zero();
    for mask in 0..=d.full_mask() {
        let q = d.contract_mask(mask);
        let (r, k) = d.restrict_mask(mask);
        out.add_term((q, DiagramMonomial::single(r)), Poly::x_pow(k));
    }
    let out = Arc::new(out);
    cache.lock().unwrap().insert(d.clone(), out.clone());
    out
}

pub fn coproduct_monomial(m: &DiagramMonomial) -> TensorElement {
    let mut acc = TensorElement::basis((DiagramMonomial::unit(), DiagramMonomial::unit()));
    for f in m.factors() {
        acc = multiply_tensors(&acc, &coproduct_diagram(f));
    }
    acc
}

pub fn coproduct(a: &AlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in a {
        out.add_scaled(&coproduct_monomial(m), c);
    }
    out
}

/// `Δ(a) - a ⊗ 1 - 1 ⊗ a + ε(a) 1 ⊗ 1`: the part with both sides non-trivial.
pub fn reduced_coproduct(a: &AlgebraElement) -> TensorElement {
    let mut out = coproduct(a);
    out.retain(|(l, r)| !l.is_unit() && !r.is_unit());
    out
}

pub fn counit(a: &AlgebraElement) -> Poly {
    a.coeff(&DiagramMonomial::unit())
}

/// `(Δ ⊗ id) Δ`
pub fn coproduct_left_iterated(a: &AlgebraElement) -> TripleTensor {
    let mut out = TripleTensor::zero();
    for ((l, r), c) in &coproduct(a) {
        for ((ll, lr), c2) in &coproduct_monomial(l) {
            out.add_term((ll.clone(), lr.clone(), r.clone()), c * c2);
        }
    }
    out
}

/// `(id ⊗ Δ) Δ`
pub fn coproduct_right_iterated(a: &AlgebraElement) -> TripleTensor {
    let mut out = TripleTensor::zero();
    for ((l, r), c) in &coproduct(a) {
        for ((rl, rr), c2) in &coproduct_monomial(r) {
            out.add_term((l.clone(), rl.clone(), rr.clone()), c * c2);
        }
    }
    out
}

/// Antipode of a diagram from `S(D) = -Σ_{C ≠ ∅} x^{k_C} S(q_C(D)) r_C(D)`, memoized.
pub fn antipode_diagram(d: &DissectionDiagram) -> Arc<AlgebraElement> {
    static CACHE: OnceLock<Mutex<HashMap<DissectionDiagram, Arc<AlgebraElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(d) {
        return t.clone();
    }
    let mut out = AlgebraElement::zero();
    if d.is_empty() {
        out = unit();
    } else {
        for mask in 1..=d.full_mask() {
            let q = d.contract_mask(mask);
            let (r, k) = d.restrict_mask(mask);
            let term = multiply(&antipode_monomial(&q), &diagram(&r));
            out.add_scaled(&term, &-Poly::x_pow(k));
        }
    }
    let out = Arc::new(out);
    cache.lock().unwrap().insert(d.clone(), out.clone());
    out
}

pub fn antipode_monomial(m: &DiagramMonomial) -> AlgebraElement {
    let mut acc = unit();
    for f in m.factors() {
        acc = multiply(&acc, &antipode_diagram(f));
    }
    acc
}

pub fn antipode(a: &AlgebraElement) -> AlgebraElement {
    a.map_linear(antipode_monomial)
}

/// Antipode as a signed sum over ordered set partitions `(C_1, ..., C_s)` of the chords:
/// each block is restricted inside what remains after contracting the earlier blocks.
pub fn antipode_partition_oracle(d: &DissectionDiagram) -> AlgebraElement {
    fn go(pieces: Vec<Piece>) -> AlgebraElement {
        let ids: Vec<usize> = pieces.iter().flat_map(|p| p.chords.iter().map(|&(_, i)| i)).collect();
        if ids.is_empty() {
            return unit();
        }
        let mut out = AlgebraElement::zero();
        for sub in 1u64..(1 << ids.len()) {
            let chosen: Vec<usize> = (0..ids.len()).filter(|b| sub >> b & 1 == 1).map(|b| ids[b]).collect();
            let mut defect = 0;
            let mut restricted = Vec::new();
            for p in &pieces {
                let local: Vec<usize> = chosen.iter().copied().filter(|&i| p.has_id(i)).collect();
                if local.is_empty() {
                    continue;
                }
                let (r, k) = p.restrict(&local);
                defect += k;
                restricted.push(r.diagram());
            }
            let rest = go(contract_pieces(pieces.clone(), &chosen));
            let factor = AlgebraElement::basis(DiagramMonomial::new(restricted));
            out.add_scaled(&multiply(&factor, &rest), &-Poly::x_pow(defect));
        }
        out
    }
    go(vec![Piece::from_diagram(d)])
}

/// `m (S ⊗ id) Δ`
pub fn antipode_left_convolution(a: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ((l, r), c) in &coproduct(a) {
        out.add_scaled(&multiply(&antipode_monomial(l), &AlgebraElement::basis(r.clone())), c);
    }
    out
}

/// `m (id ⊗ S) Δ`
pub fn antipode_right_convolution(a: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ((l, r), c) in &coproduct(a) {
        out.add_scaled(&multiply(&AlgebraElement::basis(l.clone()), &antipode_monomial(r)), c);
    }
    out
}

pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weak compositions of `n` into exactly `parts` parts.
pub fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn corolla_product(degrees: impl IntoIterator<Item = usize>) -> DiagramMonomial {
    DiagramMonomial::new(degrees.into_iter().map(DissectionDiagram::corolla))
}

/// Closed form of `Δ(X_n)`: the right factor is `X_k` and the left factor is a product
/// of `k + 1` corollas whose degrees add up to `n - k`.
pub fn corolla_coproduct_formula(n: usize) -> TensorElement {
    let mut out = TensorElement::zero();
    for k in 0..=n {
        let right = corolla_product([k]);
        for w in weak_compositions(n - k, k + 1) {
            out.add_term((corolla_product(w), right.clone()), Poly::one());
        }
    }
    out
}

/// Closed form of `S(X_n)` as a sum over compositions `α` of `n`, each block after the
/// last contributing weak compositions of its size into one more part than the number
/// of chords to its right.
pub fn corolla_antipode_formula(n: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for alpha in compositions(n) {
        let k = alpha.len();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let mut acc = AlgebraElement::basis(corolla_product([alpha[k - 1]]));
        for j in 0..k - 1 {
            let p: usize = alpha[j + 1..].iter().sum();
            let mut block = AlgebraElement::zero();
            for w in weak_compositions(alpha[j], p + 1) {
                block.add_term(corolla_product(w), Poly::one());
            }
            acc = multiply(&acc, &block);
        }
        out.add_scaled(&acc, &Poly::from_int(sign));
    }
    out
}

/// `Δ(Y_n) = Σ_k binom(n, k) Y_k ⊗ Y_{n-k}`
pub fn ladder_coproduct_formula(n: usize) -> TensorElement {
    (0..=n)
        .map(|k| {
            let l = DiagramMonomial::single(DissectionDiagram::ladder(k));
            let r = DiagramMonomial::single(DissectionDiagram::ladder(n - k));
            ((l, r), Poly::constant(binomial(n, k).into()))
        })
        .collect()
}

/// `S(Y_n) = Σ_{α ⊨ n} (-1)^{len α} n! / Π α_i! · Y_α`
pub fn ladder_antipode_formula(n: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for alpha in compositions(n) {
        let sign = if alpha.len() % 2 == 0 { 1 } else { -1 };
        let denom = alpha.iter().fold(num_bigint::BigInt::from(1), |acc, &a| acc * factorial(a));
        let c = rational(sign) * num_rational::BigRational::from_integer(factorial(n) / denom);
        let m = DiagramMonomial::new(alpha.iter().map(|&a| DissectionDiagram::ladder(a)));
        out.add_term(m, Poly::constant(c));
    }
    out
}
