//! Verification suites run by `dissection check`.

use clap::ValueEnum;
use dissection::diagram::{count, enumerate, SweepOrder};
use dissection::dual::DiagramPreLie;
use dissection::hopf::*;
use dissection::morphism::{l_one_with, l_oracle, l_two_with, site_count_one, sites_one};
use dissection::poly::rational;
use dissection::prelie::{prelie_identity_check, unshuffle, OudomGuin, PreLie, SymElement};
use dissection::primitives::{cofree_reference, deg2_primitive_basis, deg3_primitive_basis, family_rank, is_primitive, monomial_basis, primitive_dimension};
use dissection::trees::{enumerate_forests, enumerate_trees, gl_star, Forest, RootedTree, TreeGraft};
use dissection::{DiagramMonomial, DissectionDiagram, LinComb};
use num_traits::ToPrimitive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    HopfAxioms,
    Prelie,
    Og,
    Morphism,
    Counting,
    Bases,
    All,
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn generators(max: usize) -> Vec<DissectionDiagram> {
    (1..=max).flat_map(|n| enumerate(n).iter().cloned().collect::<Vec<_>>()).collect()
}

pub fn run(suite: Suite, max_degree: usize, order: SweepOrder) -> Vec<(&'static str, Outcome)> {
    let all = [Suite::HopfAxioms, Suite::Prelie, Suite::Og, Suite::Morphism, Suite::Counting, Suite::Bases];
    let chosen: Vec<Suite> = if suite == Suite::All { all.to_vec() } else { vec![suite] };
    let mut out = Vec::new();
    for s in chosen {
        match s {
            Suite::HopfAxioms => {
                out.push(("hopf-axioms/coassociativity", coassociativity(max_degree)));
                out.push(("hopf-axioms/counit", counit(max_degree)));
                out.push(("hopf-axioms/antipode", antipode(max_degree)));
            }
            Suite::Prelie => {
                out.push(("prelie/diagrams", diagram_prelie(max_degree.min(2))));
                out.push(("prelie/trees", tree_prelie(max_degree.min(3))));
            }
            Suite::Og => {
                out.push(("og/trees", og_trees(max_degree)));
                out.push(("og/diagrams", og_diagrams(max_degree)));
            }
            Suite::Morphism => {
                out.push(("morphism/single", l_single(max_degree, order)));
                out.push(("morphism/pairs", l_pairs(max_degree, order)));
                out.push(("morphism/vanishing", l_vanishing(max_degree.max(3))));
            }
            Suite::Counting => {
                out.push(("counting/diagrams", diagram_counts(max_degree.max(6))));
                out.push(("counting/monomials", monomial_counts(max_degree.max(4))));
            }
            Suite::Bases => {
                out.push(("bases/families", families()));
                out.push(("bases/dimensions", dimensions(max_degree.min(5))));
            }
            Suite::All => unreachable!(),
        }
    }
    out
}

fn coassociativity(max: usize) -> Outcome {
    for d in generators(max) {
        let a = diagram(&d);
        ensure(coproduct_left_iterated(&a) == coproduct_right_iterated(&a), || format!("at {d}"))?;
    }
    Ok(())
}

fn counit(max: usize) -> Outcome {
    for d in generators(max) {
        let a = diagram(&d);
        let (mut left, mut right) = (AlgebraElement::zero(), AlgebraElement::zero());
        for ((l, r), c) in &coproduct(&a) {
            if l.is_unit() {
                right.add_term(r.clone(), c.clone());
            }
            if r.is_unit() {
                left.add_term(l.clone(), c.clone());
            }
        }
        ensure(left == a && right == a, || format!("at {d}"))?;
    }
    Ok(())
}

fn antipode(max: usize) -> Outcome {
    for d in generators(max) {
        let a = diagram(&d);
        ensure(antipode_left_convolution(&a).is_zero(), || format!("S * id at {d}"))?;
        ensure(antipode_right_convolution(&a).is_zero(), || format!("id * S at {d}"))?;
        ensure(*antipode_diagram(&d) == antipode_partition_oracle(&d), || format!("partition expansion at {d}"))?;
    }
    for n in 1..=max {
        ensure(*antipode_diagram(&DissectionDiagram::corolla(n)) == corolla_antipode_formula(n), || format!("corolla {n}"))?;
        ensure(*antipode_diagram(&DissectionDiagram::ladder(n)) == ladder_antipode_formula(n), || format!("path {n}"))?;
    }
    Ok(())
}

fn identity_on<P: PreLie>(p: &P, xs: &[P::Basis]) -> Outcome {
    for a in xs {
        for b in xs {
            for c in xs {
                ensure(prelie_identity_check(p, a, b, c), || format!("at {a:?}, {b:?}, {c:?}"))?;
            }
        }
    }
    Ok(())
}

fn diagram_prelie(max: usize) -> Outcome {
    identity_on(&DiagramPreLie, &generators(max))
}

fn tree_prelie(max: usize) -> Outcome {
    let ts: Vec<RootedTree> = (1..=max).flat_map(|n| enumerate_trees(n).iter().cloned().collect::<Vec<_>>()).collect();
    identity_on(&TreeGraft, &ts)
}

fn star_laws<P: PreLie>(og: &OudomGuin<'_, P>, xs: &[(usize, SymElement<P::Basis>)], max: usize) -> Outcome {
    for (da, a) in xs {
        for (db, b) in xs {
            if da + db > max {
                continue;
            }
            let ab = og.star(a, b);
            ensure(unshuffle(&ab) == og.star_tensor(&unshuffle(a), &unshuffle(b)), || format!("coproduct of {a:?} * {b:?}"))?;
            for (dc, c) in xs {
                if da + db + dc <= max {
                    ensure(og.star(&ab, c) == og.star(a, &og.star(b, c)), || format!("associativity at {a:?}, {b:?}, {c:?}"))?;
                }
            }
        }
    }
    Ok(())
}

fn og_trees(max: usize) -> Outcome {
    let og = OudomGuin::new(&TreeGraft);
    let forests: Vec<Forest> = (0..=max).flat_map(enumerate_forests).collect();
    for f1 in &forests {
        for f2 in forests.iter().filter(|f| f.degree() + f1.degree() <= max) {
            let a = SymElement::basis(f1.trees().to_vec());
            let b = SymElement::basis(f2.trees().to_vec());
            let via_og: LinComb<Forest> = og.star(&a, &b).iter().map(|(m, c)| (Forest::new(m.clone()), c.clone())).collect();
            ensure(via_og == gl_star(f1, f2), || format!("Grossman-Larson product of {f1} and {f2}"))?;
        }
    }
    let xs: Vec<_> = forests.into_iter().map(|f| (f.degree(), SymElement::basis(f.into_trees()))).collect();
    star_laws(&og, &xs, max)
}

fn og_diagrams(max: usize) -> Outcome {
    let og = OudomGuin::new(&DiagramPreLie);
    let mut xs = vec![(0, SymElement::basis(Vec::new()))];
    for n in 1..=max {
        xs.extend(monomial_basis(n).monomials.iter().map(|u| (n, SymElement::basis(u.factors().to_vec()))));
    }
    star_laws(&og, &xs, max)
}

fn l_single(max: usize, order: SweepOrder) -> Outcome {
    for g in generators(max) {
        ensure(l_one_with(&g, order) == l_oracle(&DiagramMonomial::single(g.clone())), || format!("L({g}) differs from the oracle"))?;
        ensure(sites_one(&g, order).len() == site_count_one(&g), || format!("site count at {g}"))?;
    }
    Ok(())
}

fn l_pairs(max: usize, order: SweepOrder) -> Outcome {
    let gens = generators(max.saturating_sub(1));
    for (i, a) in gens.iter().enumerate() {
        for b in gens[i..].iter().filter(|b| a.degree() + b.degree() <= max) {
            let u = DiagramMonomial::new([a.clone(), b.clone()]);
            ensure(l_two_with(a, b, order) == l_oracle(&u), || format!("L({u}) differs from the oracle"))?;
        }
    }
    Ok(())
}

fn l_vanishing(max: usize) -> Outcome {
    for n in 3..=max {
        for u in monomial_basis(n).monomials.iter().filter(|u| u.len() >= 3) {
            ensure(l_oracle(u).is_zero(), || format!("L({u}) is not zero"))?;
        }
    }
    Ok(())
}

fn diagram_counts(max: usize) -> Outcome {
    for n in 0..=max {
        let got = enumerate(n).len();
        ensure(count(n).to_usize() == Some(got), || format!("degree {n}: {got} diagrams, formula {}", count(n)))?;
    }
    Ok(())
}

/// Coefficients of `Π_m (1 - h^m)^{-d_m}`, the sizes of the monomial bases.
fn monomial_counts(max: usize) -> Outcome {
    let mut series = vec![0u128; max + 1];
    series[0] = 1;
    for m in 1..=max {
        for _ in 0..enumerate(m).len() {
            for k in m..=max {
                series[k] += series[k - m];
            }
        }
    }
    for (n, &want) in series.iter().enumerate().skip(1) {
        let got = monomial_basis(n).len() as u128;
        ensure(got == want, || format!("degree {n}: {got} monomials, series {want}"))?;
    }
    Ok(())
}

fn families() -> Outcome {
    let (v2, v3) = (deg2_primitive_basis(), deg3_primitive_basis());
    for v in v2.iter().chain(&v3) {
        ensure(is_primitive(v), || format!("not primitive: {v}"))?;
    }
    for x in [-1, 0, 1, 2] {
        ensure(family_rank(&v2, &rational(x)) == 3 && family_rank(&v3, &rational(x)) == 9, || format!("dependent at x = {x}"))?;
    }
    Ok(())
}

fn dimensions(max: usize) -> Outcome {
    for n in 1..=max {
        let got = primitive_dimension(n, &rational(2));
        ensure(cofree_reference(n) == got.into(), || format!("degree {n}: {got}, reference {}", cofree_reference(n)))?;
    }
    Ok(())
}
