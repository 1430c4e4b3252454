//! Chord insertions, the linear map `L = (-) ∘ Z_{X_1}` and the Hopf morphism `φ` from
//! rooted forests to the dual of the diagram algebra.
//!
//! Each insertion opens a diagram at a vertex: the chords at that vertex, listed in
//! sweep order, are split after the first `t` of them, the two groups are given to two
//! copies of the vertex, and a new chord joins the two copies.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::diagram::{Chord, DiagramMonomial, DissectionDiagram, SweepOrder};
use crate::dual::{DiagramPreLie, DualElement};
use crate::lincomb::LinComb;
use crate::poly::Poly;
use crate::prelie::{sym_mul, OudomGuin, SymElement};
use crate::trees::{Forest, RootedTree};

/// A place where a chord can be inserted, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InsertionSite {
    Interior { i: usize, t: usize },
    Root { lambda: u8, tau: usize },
    Pair { t: usize, j: usize, tau: usize },
    RootPair { lambda: u8, t: usize, tau: usize },
}

/// Open `d` at vertex `i ≥ 1`: the first `t` chords at `i` stay on `i`, the others move to
/// the new vertex `i + 1`, and higher vertices shift up. The joining chord is not added.
fn open_interior(d: &DissectionDiagram, i: usize, t: usize, order: SweepOrder) -> Option<Vec<Chord>> {
    let ts = d.tree_structure_with(order);
    if i == 0 || i > d.degree() || t > ts.ccw_order(i).len() {
        return None;
    }
    let first: Vec<usize> = ts.ccw_order(i)[..t].to_vec();
    let chords = d
        .chords()
        .iter()
        .map(|c| {
            let (u, v) = (c.low, c.high);
            if v < i {
                *c
            } else if v == i {
                if first.contains(&u) {
                    *c
                } else {
                    Chord::new(u, i + 1)
                }
            } else if u == i {
                if first.contains(&v) {
                    Chord::new(i, v + 1)
                } else {
                    Chord::new(i + 1, v + 1)
                }
            } else if u > i {
                Chord::new(u + 1, v + 1)
            } else {
                Chord::new(u, v + 1)
            }
        })
        .collect();
    Some(chords)
}

/// Open `d` at the root. With `lambda = 0` the first `tau` root chords move to the new
/// last vertex `n + 1`; with `lambda = 1` they stay on `0` and the others move to `1`.
fn open_root(d: &DissectionDiagram, lambda: u8, tau: usize, order: SweepOrder) -> Option<Vec<Chord>> {
    let ts = d.tree_structure_with(order);
    if lambda > 1 || tau > ts.root_fertility() {
        return None;
    }
    let n = d.degree();
    let first: Vec<usize> = ts.ccw_order(0)[..tau].to_vec();
    let chords = d
        .chords()
        .iter()
        .map(|c| {
            let at_root = c.low == 0;
            match (lambda, at_root) {
                (0, true) if first.contains(&c.high) => Chord::new(c.high, n + 1),
                (0, _) => *c,
                (_, true) if first.contains(&c.high) => Chord::new(0, c.high + 1),
                (_, true) => Chord::new(1, c.high + 1),
                _ => Chord::new(c.low + 1, c.high + 1),
            }
        })
        .collect();
    Some(chords)
}

fn relabel(chords: &[Chord], f: impl Fn(usize) -> usize) -> Vec<Chord> {
    chords.iter().map(|c| Chord::new(f(c.low), f(c.high))).collect()
}

/// Operation 1: split vertex `i` and join the two copies by the chord `{i, i+1}`.
/// `None` (the zero element) outside `1 ≤ i ≤ n`, `0 ≤ t ≤ f(i)`.
pub fn insert_interior(d: &DissectionDiagram, i: usize, t: usize) -> Option<DissectionDiagram> {
    insert_interior_with(d, i, t, SweepOrder::Standard)
}

pub fn insert_interior_with(d: &DissectionDiagram, i: usize, t: usize, order: SweepOrder) -> Option<DissectionDiagram> {
    let mut chords = open_interior(d, i, t, order)?;
    chords.push(Chord::new(i, i + 1));
    DissectionDiagram::from_chords(d.degree() + 1, chords).ok()
}

/// Operation 2: split the root and add `{0, n+1}` (`lambda = 0`) or `{0, 1}` (`lambda = 1`).
pub fn insert_root(d: &DissectionDiagram, lambda: u8, tau: usize) -> Option<DissectionDiagram> {
    insert_root_with(d, lambda, tau, SweepOrder::Standard)
}

pub fn insert_root_with(d: &DissectionDiagram, lambda: u8, tau: usize, order: SweepOrder) -> Option<DissectionDiagram> {
    let mut chords = open_root(d, lambda, tau, order)?;
    let n = d.degree();
    chords.push(if lambda == 0 { Chord::new(0, n + 1) } else { Chord::new(0, 1) });
    DissectionDiagram::from_chords(n + 1, chords).ok()
}

/// Operation 3: open `d1` at its root and `d2` at vertex `j ≥ 1`, place `d1` inside `d2`
/// between the two copies of `j`, and join them by `{j, j + n1 + 1}`.
pub fn insert_pair(d1: &DissectionDiagram, d2: &DissectionDiagram, t: usize, j: usize, tau: usize) -> Option<DissectionDiagram> {
    insert_pair_with(d1, d2, t, j, tau, SweepOrder::Standard)
}

pub fn insert_pair_with(
    d1: &DissectionDiagram,
    d2: &DissectionDiagram,
    t: usize,
    j: usize,
    tau: usize,
    order: SweepOrder,
) -> Option<DissectionDiagram> {
    let (n1, n2) = (d1.degree(), d2.degree());
    let g1 = open_root(d1, 1, t, order)?;
    let g2 = open_interior(d2, j, tau, order)?;
    let mut chords: Vec<Chord> = relabel(&g1, |w| if w == 0 { j + n1 + 1 } else { w + j - 1 });
    chords.extend(relabel(&g2, |w| if w <= j { w } else { w + n1 }));
    chords.push(Chord::new(j, j + n1 + 1));
    DissectionDiagram::from_chords(n1 + n2 + 1, chords).ok()
}

/// Operation 4: open both diagrams at their roots and put them side by side under a new
/// root chord, `{0, n2 + 1}` for `lambda = 0` and `{0, n1 + 1}` for `lambda = 1`.
pub fn insert_rootpair(d1: &DissectionDiagram, d2: &DissectionDiagram, lambda: u8, t: usize, tau: usize) -> Option<DissectionDiagram> {
    insert_rootpair_with(d1, d2, lambda, t, tau, SweepOrder::Standard)
}

pub fn insert_rootpair_with(
    d1: &DissectionDiagram,
    d2: &DissectionDiagram,
    lambda: u8,
    t: usize,
    tau: usize,
    order: SweepOrder,
) -> Option<DissectionDiagram> {
    let (n1, n2) = (d1.degree(), d2.degree());
    let mut chords: Vec<Chord>;
    match lambda {
        0 => {
            let g1 = open_root(d1, 1, t, order)?;
            let g2 = open_root(d2, 0, tau, order)?;
            chords = relabel(&g1, |w| if w == 0 { 0 } else { w + n2 });
            chords.extend(g2);
            chords.push(Chord::new(0, n2 + 1));
        }
        1 => {
            let g1 = open_root(d1, 0, t, order)?;
            let g2 = open_root(d2, 1, tau, order)?;
            chords = g1;
            chords.extend(relabel(&g2, |w| if w == 0 { 0 } else { w + n1 }));
            chords.push(Chord::new(0, n1 + 1));
        }
        _ => return None,
    }
    DissectionDiagram::from_chords(n1 + n2 + 1, chords).ok()
}

fn split_weight(tau: usize, parent_position: usize) -> Poly {
    if tau < parent_position {
        Poly::one()
    } else {
        Poly::x()
    }
}

/// All insertion sites of a single diagram with their results and weights.
pub fn sites_one(d: &DissectionDiagram, order: SweepOrder) -> Vec<(InsertionSite, DissectionDiagram, Poly)> {
    let ts = d.tree_structure_with(order);
    let mut out = Vec::new();
    for i in 1..=d.degree() {
        let l = ts.parent_position(i);
        for t in 0..=ts.ccw_order(i).len() {
            if let Some(g) = insert_interior_with(d, i, t, order) {
                out.push((InsertionSite::Interior { i, t }, g, split_weight(t, l)));
            }
        }
    }
    for lambda in 0..=1 {
        for tau in 0..=ts.root_fertility() {
            if let Some(g) = insert_root_with(d, lambda, tau, order) {
                out.push((InsertionSite::Root { lambda, tau }, g, Poly::one()));
            }
        }
    }
    out
}

/// All insertion sites of an ordered pair: operation 3 in both directions, then operation 4.
/// Each `Pair` site records the diagram opened at the vertex `j` second.
pub fn sites_two(
    d1: &DissectionDiagram,
    d2: &DissectionDiagram,
    order: SweepOrder,
) -> Vec<(InsertionSite, DissectionDiagram, Poly)> {
    let mut out = Vec::new();
    for (a, b) in [(d1, d2), (d2, d1)] {
        let (ta, tb) = (a.tree_structure_with(order), b.tree_structure_with(order));
        for t in 0..=ta.root_fertility() {
            for j in 1..=b.degree() {
                let l = tb.parent_position(j);
                for tau in 0..=tb.ccw_order(j).len() {
                    if let Some(g) = insert_pair_with(a, b, t, j, tau, order) {
                        out.push((InsertionSite::Pair { t, j, tau }, g, split_weight(tau, l)));
                    }
                }
            }
        }
    }
    let (t1, t2) = (d1.tree_structure_with(order), d2.tree_structure_with(order));
    for lambda in 0..=1 {
        for t in 0..=t1.root_fertility() {
            for tau in 0..=t2.root_fertility() {
                if let Some(g) = insert_rootpair_with(d1, d2, lambda, t, tau, order) {
                    out.push((InsertionSite::RootPair { lambda, t, tau }, g, Poly::one()));
                }
            }
        }
    }
    out
}

fn weighted_sum(sites: Vec<(InsertionSite, DissectionDiagram, Poly)>) -> LinComb<DissectionDiagram> {
    sites.into_iter().map(|(_, g, w)| (g, w)).collect()
}

/// `L(Z_D)` from insertions of one chord into `D`.
pub fn l_one(d: &DissectionDiagram) -> LinComb<DissectionDiagram> {
    weighted_sum(sites_one(d, SweepOrder::Standard))
}

pub fn l_one_with(d: &DissectionDiagram, order: SweepOrder) -> LinComb<DissectionDiagram> {
    weighted_sum(sites_one(d, order))
}

/// `L(Z_{D1} Z_{D2})` (product in the symmetric algebra) from insertions of one chord
/// joining `D1` and `D2`.
pub fn l_two(d1: &DissectionDiagram, d2: &DissectionDiagram) -> LinComb<DissectionDiagram> {
    weighted_sum(sites_two(d1, d2, SweepOrder::Standard))
}

pub fn l_two_with(d1: &DissectionDiagram, d2: &DissectionDiagram, order: SweepOrder) -> LinComb<DissectionDiagram> {
    weighted_sum(sites_two(d1, d2, order))
}

/// Number of terms of `L(Z_D)` counted with multiplicity: `3n + 2 + f(0)`.
pub fn site_count_one(d: &DissectionDiagram) -> usize {
    3 * d.degree() + 2 + d.tree_structure().root_fertility()
}

/// `(f_2(0) + 1)(3 n_1 + 1) + (f_1(0) + 1)(3 n_2 + 1)`
pub fn site_count_two(d1: &DissectionDiagram, d2: &DissectionDiagram) -> usize {
    let (f1, f2) = (d1.tree_structure().root_fertility(), d2.tree_structure().root_fertility());
    (f2 + 1) * (3 * d1.degree() + 1) + (f1 + 1) * (3 * d2.degree() + 1)
}

/// Sum of the coefficients of `L(Z_D)`: `3nx + (1 - x) Σ_i l(i) + (2 - x) f(0) + 2`.
pub fn weighted_count_one(d: &DissectionDiagram) -> Poly {
    let ts = d.tree_structure();
    let n = d.degree() as i64;
    let sum_l: i64 = (1..=d.degree()).map(|i| ts.parent_position(i) as i64).sum();
    let f0 = ts.root_fertility() as i64;
    Poly::from_ints(&[sum_l + 2 * f0 + 2, 3 * n - sum_l - f0])
}

/// `L(Z_U) = Z_U ∘ Z_{X_1}` computed with the Oudom–Guin product. Here `Z_U` is the
/// symmetric-algebra product of the `Z_{D_i}` for the factors `D_i` of `U`.
pub fn l_oracle(u: &DiagramMonomial) -> LinComb<DissectionDiagram> {
    let og = OudomGuin::new(&DiagramPreLie);
    og.circ_generator(u.factors(), &DissectionDiagram::corolla(1))
}

/// `L` on a symmetric-algebra element via the insertion formulas: zero on monomials of
/// length at least 3.
pub fn l_fast(a: &SymElement<DissectionDiagram>) -> LinComb<DissectionDiagram> {
    let mut out = LinComb::zero();
    for (m, c) in a {
        let img = match m.as_slice() {
            [] => LinComb::basis(DissectionDiagram::corolla(1)),
            [d] => l_one(d),
            [d1, d2] => l_two(d1, d2),
            _ => continue,
        };
        out.add_scaled(&img, c);
    }
    out
}

/// `φ(t)`, a combination of single diagrams: `φ(•) = Z_{X_1}` and `φ(B(F)) = L(φ(F))`.
pub fn phi_tree(t: &RootedTree) -> LinComb<DissectionDiagram> {
    static CACHE: OnceLock<Mutex<HashMap<RootedTree, LinComb<DissectionDiagram>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(t) {
        return v.clone();
    }
    let out = l_fast(&phi_sym(&Forest::new(t.children().to_vec())));
    cache.lock().unwrap().insert(t.clone(), out.clone());
    out
}

/// Same as [`phi_tree`] but every `L` goes through the Oudom–Guin product.
pub fn phi_tree_oracle(t: &RootedTree) -> LinComb<DissectionDiagram> {
    let og = OudomGuin::new(&DiagramPreLie);
    fn go(t: &RootedTree, og: &OudomGuin<'_, DiagramPreLie>) -> LinComb<DissectionDiagram> {
        let mut acc = SymElement::basis(Vec::new());
        for c in t.children() {
            acc = sym_mul(&acc, &crate::prelie::sym_from_linear(&go(c, og)));
        }
        let x1 = DissectionDiagram::corolla(1);
        let mut out = LinComb::zero();
        for (m, c) in &acc {
            out.add_scaled(&og.circ_generator(m, &x1), c);
        }
        out
    }
    go(t, &og)
}

/// `φ(F)` in the symmetric-algebra presentation: the product of the `φ(t)`.
pub fn phi_sym(f: &Forest) -> SymElement<DissectionDiagram> {
    let mut acc = SymElement::basis(Vec::new());
    for t in f.trees() {
        acc = sym_mul(&acc, &crate::prelie::sym_from_linear(&phi_tree(t)));
    }
    acc
}

/// `φ(F)` in the dual basis `Z_U`.
pub fn phi(f: &Forest) -> DualElement {
    crate::dual::sym_to_dual(&phi_sym(f))
}

/// `Z_U(φ(t))`; `None` when the degrees differ.
pub fn pairing_phi(u: &DiagramMonomial, t: &RootedTree) -> Option<Poly> {
    if u.degree() != t.degree() {
        return None;
    }
    Some(phi(&Forest::from(t.clone())).coeff(u))
}

/// `m(D)`: the largest number of pieces produced by contracting a chord subset of `D`.
pub fn max_pieces(d: &DissectionDiagram) -> usize {
    (0..=d.full_mask()).map(|mask| d.contract_mask(mask).len()).max().unwrap_or(0)
}
