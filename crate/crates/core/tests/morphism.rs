use std::collections::{BTreeSet, HashMap};

use dissection::diagram::{enumerate, SweepOrder};
use dissection::dual::DiagramPreLie;
use dissection::morphism::*;
use dissection::poly::factorial;
use dissection::prelie::{sym_from_linear, unshuffle, OudomGuin, SymElement};
use dissection::trees::{enumerate_forests, enumerate_trees, gl_star, graft_circ};
use dissection::{Chord, DiagramMonomial, DissectionDiagram, Forest, LinComb, Poly, RootedTree};
use num_traits::Signed;

fn d(s: &str) -> DissectionDiagram {
    s.parse().unwrap()
}

fn t(s: &str) -> RootedTree {
    s.parse().unwrap()
}

fn generators(max: usize) -> Vec<DissectionDiagram> {
    (1..=max).flat_map(|n| enumerate(n).iter().cloned().collect::<Vec<_>>()).collect()
}

fn single(d: &DissectionDiagram) -> DiagramMonomial {
    DiagramMonomial::single(d.clone())
}

/// Contract the chord `c` of `g` and return the resulting monomial.
fn contract_chord(g: &DissectionDiagram, c: Chord) -> DiagramMonomial {
    let idx = g.chords().iter().position(|&x| x == c).expect("inserted chord present");
    g.contract_mask(1 << idx)
}

/// The chord added by a single-diagram insertion.
fn inserted_chord(site: &InsertionSite, n: usize) -> Chord {
    match *site {
        InsertionSite::Interior { i, .. } => Chord::new(i, i + 1),
        InsertionSite::Root { lambda: 0, .. } => Chord::new(0, n + 1),
        InsertionSite::Root { .. } => Chord::new(0, 1),
        _ => unreachable!(),
    }
}

#[test]
fn l_one_matches_oracle_up_to_degree_four() {
    for g in generators(4) {
        assert_eq!(l_one(&g), l_oracle(&single(&g)), "L({g})");
    }
}

#[test]
fn l_two_matches_oracle_for_degree_sum_four() {
    let gens = generators(3);
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            let u = DiagramMonomial::new([a.clone(), b.clone()]);
            assert_eq!(l_two(a, b), l_oracle(&u), "L({a} {b})");
            assert_eq!(l_two(a, b), l_two(b, a));
        }
    }
}

#[test]
fn oracle_vanishes_on_three_factors() {
    for n in 3..=5 {
        for m in &dissection::primitives::monomial_basis(n).monomials {
            if m.len() >= 3 {
                assert!(l_oracle(m).is_zero(), "L({m})");
            }
        }
    }
}

#[test]
fn reversed_sweep_disagrees_with_oracle() {
    let bad = generators(3).into_iter().any(|g| l_one_with(&g, SweepOrder::Reversed) != l_oracle(&single(&g)));
    assert!(bad);
}

#[test]
fn site_counts() {
    for g in generators(4) {
        let sites = sites_one(&g, SweepOrder::Standard);
        assert_eq!(sites.len(), site_count_one(&g));
        let total = sites.iter().fold(Poly::zero(), |acc, (_, _, w)| acc + w.clone());
        assert_eq!(total, weighted_count_one(&g));
        let sum: Poly = l_one(&g).iter().fold(Poly::zero(), |acc, (_, c)| acc + c.clone());
        assert_eq!(sum, weighted_count_one(&g));
    }
    let gens = generators(3);
    for a in &gens {
        for b in &gens {
            if a != b && a.degree() + b.degree() <= 4 {
                assert_eq!(sites_two(a, b, SweepOrder::Standard).len(), site_count_two(a, b));
            }
        }
    }
}

#[test]
fn single_insertions_contract_back_and_are_injective() {
    for g in generators(4) {
        let n = g.degree();
        let mut seen = BTreeSet::new();
        for (site, r, _) in sites_one(&g, SweepOrder::Standard) {
            let c = inserted_chord(&site, n);
            assert_eq!(contract_chord(&r, c), single(&g), "{site:?} on {g}");
            assert!(seen.insert((r, c)), "{site:?} on {g} repeats");
        }
    }
}

#[test]
fn pair_insertions_contract_back_and_are_injective() {
    let gens = generators(3);
    for a in &gens {
        for b in &gens {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            let u = DiagramMonomial::new([a.clone(), b.clone()]);
            let mut seen: HashMap<(DissectionDiagram, Chord), usize> = HashMap::new();
            let mut record = |r: DissectionDiagram, c: Chord| {
                assert_eq!(contract_chord(&r, c), u);
                *seen.entry((r, c)).or_default() += 1;
            };
            for (p, q) in [(a, b), (b, a)] {
                for tt in 0..=p.tree_structure().root_fertility() {
                    for j in 1..=q.degree() {
                        for tau in 0..=q.tree_structure().ccw_order(j).len() {
                            let r = insert_pair(p, q, tt, j, tau).unwrap();
                            record(r, Chord::new(j, j + p.degree() + 1));
                        }
                    }
                }
            }
            for lambda in 0..=1u8 {
                for tt in 0..=a.tree_structure().root_fertility() {
                    for tau in 0..=b.tree_structure().root_fertility() {
                        let r = insert_rootpair(a, b, lambda, tt, tau).unwrap();
                        let top = if lambda == 0 { b.degree() } else { a.degree() } + 1;
                        record(r, Chord::new(0, top));
                    }
                }
            }
            let expect = if a == b { 2 } else { 1 };
            assert!(seen.values().all(|&m| m == expect), "{u}");
        }
    }
}

/// Operation 3 built the other way: the first `t` root chords of `d1` go to the far copy
/// `n1 + 1` of its root, then `d1` is shifted by `j`.
fn insert_pair_lambda_zero(d1: &DissectionDiagram, d2: &DissectionDiagram, t: usize, j: usize, tau: usize) -> Option<DissectionDiagram> {
    let n1 = d1.degree();
    let ts = d1.tree_structure();
    let first = &ts.ccw_order(0)[..t];
    let mut chords: Vec<Chord> = d1
        .chords()
        .iter()
        .map(|c| if c.low == 0 && first.contains(&c.high) { Chord::new(c.high + j, n1 + 1 + j) } else { Chord::new(c.low + j, c.high + j) })
        .collect();
    // `d2` opened at `j`, with `d1` occupying the vertices strictly between the two copies.
    let g = insert_interior(d2, j, tau)?;
    for c in g.chords() {
        if *c == Chord::new(j, j + 1) {
            continue;
        }
        let f = |w: usize| if w <= j { w } else { w + n1 };
        chords.push(Chord::new(f(c.low), f(c.high)));
    }
    chords.push(Chord::new(j, j + n1 + 1));
    DissectionDiagram::from_chords(n1 + d2.degree() + 1, chords).ok()
}

#[test]
fn pair_insertion_does_not_depend_on_root_copy() {
    let gens = generators(3);
    for a in &gens {
        for b in &gens {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            for tt in 0..=a.tree_structure().root_fertility() {
                for j in 1..=b.degree() {
                    for tau in 0..=b.tree_structure().ccw_order(j).len() {
                        assert_eq!(insert_pair(a, b, tt, j, tau), insert_pair_lambda_zero(a, b, tt, j, tau));
                    }
                }
            }
        }
    }
}

#[test]
fn rootpair_swap_symmetry() {
    let gens = generators(3);
    for a in &gens {
        for b in &gens {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            for tt in 0..=a.tree_structure().root_fertility() {
                for tau in 0..=b.tree_structure().root_fertility() {
                    assert_eq!(insert_rootpair(a, b, 0, tt, tau), insert_rootpair(b, a, 1, tau, tt));
                }
            }
        }
    }
}

#[test]
fn out_of_range_sites_are_zero() {
    let g = d("D{2: 0-1,1-2}");
    assert!(insert_interior(&g, 0, 0).is_none());
    assert!(insert_interior(&g, 3, 0).is_none());
    assert!(insert_interior(&g, 1, 3).is_none());
    assert!(insert_root(&g, 2, 0).is_none());
    assert!(insert_root(&g, 0, 2).is_none());
    assert!(insert_rootpair(&g, &g, 0, 5, 0).is_none());
}

#[test]
fn l_is_injective_on_small_diagrams() {
    let gens = generators(3);
    let images: BTreeSet<_> = gens.iter().map(|g| format!("{}", l_one(g))).collect();
    assert_eq!(images.len(), gens.len());
    let mut pairs = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            if a.degree() + b.degree() <= 3 {
                pairs.push(format!("{}", l_two(a, b)));
            }
        }
    }
    let n = pairs.len();
    pairs.sort();
    pairs.dedup();
    assert_eq!(pairs.len(), n);
}

#[test]
fn phi_of_ladder_two() {
    let got = phi(&Forest::from(RootedTree::ladder(2)));
    let expect = dissection::DualElement(
        [
            (single(&DissectionDiagram::ladder(2)), Poly::from_int(2)),
            (single(&DissectionDiagram::corolla(2)), Poly::from_int(2)),
            (single(&d("D{2: 0-1,1-2}")), Poly::from_ints(&[1, 1])),
        ]
        .into_iter()
        .collect(),
    );
    assert_eq!(got, expect);
}

#[test]
fn phi_of_cherry() {
    let got = phi(&Forest::from(t("[[][]]")));
    let two = Poly::from_int(2);
    let two_x = Poly::from_ints(&[0, 2]);
    let terms = [
        ("D{3: 0-1,0-2,0-3}", &two),
        ("D{3: 0-1,1-2,1-3}", &two_x),
        ("D{3: 1-2,0-2,2-3}", &two),
        ("D{3: 1-3,2-3,0-3}", &two),
        ("D{3: 1-3,1-2,0-3}", &two),
        ("D{3: 0-1,2-3,1-3}", &two_x),
        ("D{3: 1-2,0-2,0-3}", &two),
        ("D{3: 0-1,0-2,2-3}", &two),
    ];
    let expect = dissection::DualElement(terms.iter().map(|(s, c)| (single(&d(s)), (*c).clone())).collect());
    assert_eq!(got, expect);
    assert!(phi(&Forest::from(t("[[][][]]"))).is_zero());
}

#[test]
fn phi_fast_matches_oracle() {
    for n in 1..=4 {
        for tr in enumerate_trees(n).iter() {
            assert_eq!(phi_tree(tr), phi_tree_oracle(tr), "{tr}");
        }
    }
}

#[test]
fn phi_kills_trees_with_a_vertex_of_three_children() {
    for n in 4..=5 {
        for tr in enumerate_trees(n).iter().filter(|t| !t.is_subbinary()) {
            assert!(phi_tree_oracle(tr).is_zero(), "{tr}");
            assert!(phi_tree(tr).is_zero());
        }
    }
}

#[test]
fn phi_respects_grafting() {
    let og = OudomGuin::new(&DiagramPreLie);
    let trees: Vec<RootedTree> = (1..=3).flat_map(|n| enumerate_trees(n).iter().cloned().collect::<Vec<_>>()).collect();
    for a in &trees {
        for b in &trees {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            let mut lhs = LinComb::zero();
            for (g, c) in &graft_circ(a, b) {
                lhs.add_scaled(&phi_tree(g), c);
            }
            let rhs = dissection::prelie::circ_linear(og.prelie(), &phi_tree(a), &phi_tree(b));
            assert_eq!(lhs, rhs, "{a} ∘ {b}");
        }
    }
}

#[test]
fn phi_respects_star() {
    let og = OudomGuin::new(&DiagramPreLie);
    let forests: Vec<Forest> = (0..=3).flat_map(enumerate_forests).collect();
    for a in &forests {
        for b in &forests {
            if a.degree() + b.degree() > 4 {
                continue;
            }
            let mut lhs = SymElement::zero();
            for (f, c) in &gl_star(a, b) {
                lhs.add_scaled(&phi_sym(f), c);
            }
            assert_eq!(lhs, og.star(&phi_sym(a), &phi_sym(b)), "{a} ⋆ {b}");
        }
    }
}

#[test]
fn phi_respects_coproduct() {
    for n in 1..=4 {
        for f in enumerate_forests(n).iter().filter(|f| f.is_subbinary()) {
            let lhs = unshuffle(&phi_sym(f));
            let mut rhs = LinComb::zero();
            let trees = f.trees();
            for mask in 0u64..(1 << trees.len()) {
                let pick = |bit: u64| Forest::new((0..trees.len()).filter(|i| mask >> i & 1 == bit).map(|i| trees[i].clone()).collect());
                let (l, r) = (phi_sym(&pick(1)), phi_sym(&pick(0)));
                for (ml, cl) in &l {
                    for (mr, cr) in &r {
                        rhs.add_term((ml.clone(), mr.clone()), cl * cr);
                    }
                }
            }
            assert_eq!(lhs, rhs, "{f}");
        }
    }
}

#[test]
fn ladder_and_corolla_pairings() {
    for n in 1..=4 {
        let yn = single(&DissectionDiagram::ladder(n));
        let xn = single(&DissectionDiagram::corolla(n));
        for tr in enumerate_trees(n).iter() {
            let y = pairing_phi(&yn, tr).unwrap();
            if *tr == RootedTree::ladder(n) {
                assert_eq!(y, Poly::constant(factorial(n).into()));
            } else {
                assert!(y.is_zero(), "Z_Y({tr})");
            }
            if tr.is_subbinary() {
                let k = tr.stats().internal_vertices as u32;
                assert_eq!(pairing_phi(&xn, tr).unwrap(), Poly::from_int(2i64.pow(k)), "Z_X({tr})");
            }
        }
    }
    assert_eq!(pairing_phi(&single(&DissectionDiagram::corolla(2)), &RootedTree::leaf()), None);
}

#[test]
fn pairing_is_triangular() {
    for n in 1..=4 {
        for g in enumerate(n).iter() {
            let m = max_pieces(g);
            for tr in enumerate_trees(n).iter().filter(|t| t.is_subbinary()) {
                if m < tr.stats().two_child_vertices {
                    assert!(pairing_phi(&single(g), tr).unwrap().is_zero(), "{g} against {tr}");
                }
            }
        }
    }
}

#[test]
fn phi_of_ladders_is_positive_at_one() {
    let one = dissection::poly::rational(1);
    for n in 1..=5 {
        let img = phi_tree(&RootedTree::ladder(n));
        assert_eq!(img.len(), enumerate(n).len(), "support of φ(e_{n})");
        for g in enumerate(n).iter() {
            assert!(img.coeff(g).eval(&one).is_positive(), "{g}");
        }
    }
}

#[test]
fn phi_is_homogeneous() {
    for n in 1..=5 {
        for tr in enumerate_trees(n).iter() {
            assert!(phi_tree(tr).keys().all(|g| g.degree() == n));
        }
    }
    let f = Forest::new(vec![t("[[]]"), t("[]")]);
    assert!(phi(&f).0.keys().all(|u| u.degree() == 3));
    assert_eq!(sym_from_linear(&phi_tree(&t("[]"))).len(), 1);
}
