//! Left pre-Lie algebras given by structure constants on a basis, and the Oudom–Guin
//! extension of the product to the symmetric algebra, with its associative `⋆`.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Mutex;

use crate::lincomb::LinComb;
use crate::poly::Poly;

/// A pre-Lie product on a basis, given by its structure constants.
pub trait PreLie {
    type Basis: Clone + Ord + Hash + Debug + Send + Sync;

    fn circ(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    fn degree(&self, b: &Self::Basis) -> usize;
}

/// Element of the symmetric algebra: keys are sorted multisets of basis elements.
pub type SymElement<B> = LinComb<Vec<B>>;

/// Element of the tensor square of the symmetric algebra.
pub type SymTensor<B> = LinComb<(Vec<B>, Vec<B>)>;

type Memo<B> = Mutex<HashMap<(Vec<B>, B), LinComb<B>>>;

pub fn sym_generator<B: Ord + Clone>(b: B) -> SymElement<B> {
    SymElement::basis(vec![b])
}

pub fn sym_unit<B: Ord + Clone>() -> SymElement<B> {
    SymElement::basis(Vec::new())
}

/// View a combination of basis elements as a symmetric-algebra element of length 1.
pub fn sym_from_linear<B: Ord + Clone>(a: &LinComb<B>) -> SymElement<B> {
    a.iter().map(|(b, c)| (vec![b.clone()], c.clone())).collect()
}

/// Length-1 part of a symmetric-algebra element.
pub fn sym_linear_part<B: Ord + Clone>(a: &SymElement<B>) -> LinComb<B> {
    a.iter().filter(|(m, _)| m.len() == 1).map(|(m, c)| (m[0].clone(), c.clone())).collect()
}

fn merge<B: Ord + Clone>(a: &[B], b: &[B]) -> Vec<B> {
    let mut v: Vec<B> = a.iter().chain(b).cloned().collect();
    v.sort();
    v
}

pub fn sym_mul<B: Ord + Clone>(a: &SymElement<B>, b: &SymElement<B>) -> SymElement<B> {
    let mut out = SymElement::zero();
    for (ma, ca) in a {
        for (mb, cb) in b {
            out.add_term(merge(ma, mb), ca * cb);
        }
    }
    out
}

pub fn epsilon<B: Ord + Clone>(a: &SymElement<B>) -> Poly {
    a.coeff(&Vec::new())
}

/// Coproduct making every basis element primitive. Positions in a monomial are
/// distinguishable, so repeated factors produce binomial multiplicities.
pub fn unshuffle<B: Ord + Clone>(a: &SymElement<B>) -> SymTensor<B> {
    let mut out = LinComb::zero();
    for (m, c) in a {
        for mask in 0u64..(1 << m.len()) {
            let (l, r) = split(m, mask);
            out.add_term((l, r), c.clone());
        }
    }
    out
}

fn split<B: Clone>(m: &[B], mask: u64) -> (Vec<B>, Vec<B>) {
    let mut l = Vec::new();
    let mut r = Vec::new();
    for (i, b) in m.iter().enumerate() {
        if mask >> i & 1 == 1 {
            l.push(b.clone());
        } else {
            r.push(b.clone());
        }
    }
    (l, r)
}

/// Linear extension of the pre-Lie product.
pub fn circ_linear<P: PreLie>(p: &P, a: &LinComb<P::Basis>, b: &LinComb<P::Basis>) -> LinComb<P::Basis> {
    let mut out = LinComb::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_scaled(&p.circ(x, y), &(cx * cy));
        }
    }
    out
}

/// `(a∘b)∘c - a∘(b∘c)`
pub fn associator<P: PreLie>(p: &P, a: &P::Basis, b: &P::Basis, c: &P::Basis) -> LinComb<P::Basis> {
    let ab = p.circ(a, b);
    let left = circ_linear(p, &ab, &LinComb::basis(c.clone()));
    let right = circ_linear(p, &LinComb::basis(a.clone()), &p.circ(b, c));
    &left - &right
}

/// The left pre-Lie identity: the associator is symmetric in its first two arguments.
pub fn prelie_identity_check<P: PreLie>(p: &P, a: &P::Basis, b: &P::Basis, c: &P::Basis) -> bool {
    associator(p, a, b, c) == associator(p, b, a, c)
}

/// `[a,b] = a∘b - b∘a`
pub fn bracket<P: PreLie>(p: &P, a: &LinComb<P::Basis>, b: &LinComb<P::Basis>) -> LinComb<P::Basis> {
    &circ_linear(p, a, b) - &circ_linear(p, b, a)
}

/// The Oudom–Guin extension of a pre-Lie product, memoizing `monomial ∘ generator`.
pub struct OudomGuin<'a, P: PreLie> {
    prelie: &'a P,
    memo: Memo<P::Basis>,
}

impl<'a, P: PreLie> OudomGuin<'a, P> {
    pub fn new(prelie: &'a P) -> Self {
        OudomGuin { prelie, memo: Mutex::new(HashMap::new()) }
    }

    pub fn prelie(&self) -> &P {
        self.prelie
    }

    /// `a ∘ b` for a sorted monomial `a` and a generator `b`; the result lies in the
    /// span of generators. Uses `(x a') ∘ b = x ∘ (a' ∘ b) - (x ∘ a') ∘ b`.
    pub fn circ_generator(&self, a: &[P::Basis], b: &P::Basis) -> LinComb<P::Basis> {
        match a {
            [] => return LinComb::basis(b.clone()),
            [x] => return self.prelie.circ(x, b),
            _ => {}
        }
        let key = (a.to_vec(), b.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let (x, rest) = (&a[0], &a[1..]);
        let inner = self.circ_generator(rest, b);
        let mut out = circ_linear(self.prelie, &LinComb::basis(x.clone()), &inner);
        for i in 0..rest.len() {
            for (y, c) in &self.prelie.circ(x, &rest[i]) {
                let mut m = rest.to_vec();
                m[i] = y.clone();
                m.sort();
                out.add_scaled(&self.circ_generator(&m, b), &-c);
            }
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `a ∘ b` on monomials: `a ∘ (b_1 ... b_m) = Σ Π_i (a_{(i)} ∘ b_i)` over all ways of
    /// distributing the factors of `a` among the `b_i`.
    pub fn circ_monomial(&self, a: &[P::Basis], b: &[P::Basis]) -> SymElement<P::Basis> {
        match b {
            [] => {
                return if a.is_empty() { sym_unit() } else { SymElement::zero() };
            }
            [g] => return sym_from_linear(&self.circ_generator(a, g)),
            _ => {}
        }
        let m = b.len();
        let mut out = SymElement::zero();
        let total = m.pow(a.len() as u32);
        for code in 0..total {
            let mut parts: Vec<Vec<P::Basis>> = vec![Vec::new(); m];
            let mut c = code;
            for x in a {
                parts[c % m].push(x.clone());
                c /= m;
            }
            let mut acc = sym_unit();
            for (part, g) in parts.iter_mut().zip(b) {
                part.sort();
                acc = sym_mul(&acc, &sym_from_linear(&self.circ_generator(part, g)));
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    pub fn circ(&self, a: &SymElement<P::Basis>, b: &SymElement<P::Basis>) -> SymElement<P::Basis> {
        let mut out = SymElement::zero();
        for (ma, ca) in a {
            for (mb, cb) in b {
                out.add_scaled(&self.circ_monomial(ma, mb), &(ca * cb));
            }
        }
        out
    }

    /// `a ⋆ b = Σ a^{(1)} (a^{(2)} ∘ b)`
    pub fn star(&self, a: &SymElement<P::Basis>, b: &SymElement<P::Basis>) -> SymElement<P::Basis> {
        let mut out = SymElement::zero();
        for (ma, ca) in a {
            for mask in 0u64..(1 << ma.len()) {
                let (kept, acting) = split(ma, mask);
                for (mb, cb) in b {
                    let acted = self.circ_monomial(&acting, mb);
                    out.add_scaled(&sym_mul(&SymElement::basis(kept.clone()), &acted), &(ca * cb));
                }
            }
        }
        out
    }

    /// `⋆` on both legs of tensors.
    pub fn star_tensor(
        &self,
        a: &SymTensor<P::Basis>,
        b: &SymTensor<P::Basis>,
    ) -> SymTensor<P::Basis> {
        let mut out = LinComb::zero();
        for ((a1, a2), ca) in a {
            for ((b1, b2), cb) in b {
                let l = self.star(&SymElement::basis(a1.clone()), &SymElement::basis(b1.clone()));
                let r = self.star(&SymElement::basis(a2.clone()), &SymElement::basis(b2.clone()));
                let c = ca * cb;
                for (ml, cl) in &l {
                    for (mr, cr) in &r {
                        out.add_term((ml.clone(), mr.clone()), &(cl * cr) * &c);
                    }
                }
            }
        }
        out
    }
}
