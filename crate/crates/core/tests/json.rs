use dissection::hopf::{antipode_diagram, coproduct_diagram};
use dissection::json::*;
use dissection::morphism::phi;
use dissection::{Forest, RootedTree};

#[test]
fn elements_roundtrip() {
    for n in 1..=3 {
        for d in dissection::diagram::enumerate(n).iter() {
            let s = antipode_diagram(d);
            assert_eq!(algebra_from_json(&algebra_to_json(&s)).unwrap(), *s);
            let c = coproduct_diagram(d);
            assert_eq!(tensor_from_json(&tensor_to_json(&c)).unwrap(), *c);
        }
    }
    let v = &dissection::primitives::deg3_primitive_basis()[1];
    assert_eq!(algebra_from_json(&algebra_to_json(v)).unwrap(), *v);
}

#[test]
fn dual_roundtrip() {
    let f = Forest::from(RootedTree::ladder(3));
    let img = phi(&f);
    let text = dual_to_json(&img);
    assert!(text.starts_with(r#"{"basis":"dual""#));
    assert_eq!(dual_from_json(&text).unwrap(), img);
}

#[test]
fn rejects_bad_input() {
    assert!(algebra_from_json("[").is_err());
    assert!(algebra_from_json(r#"{"terms":[{"monomial":["D{2: 0-1}"],"poly":[]}]}"#).is_err());
    assert!(algebra_from_json(r#"{"terms":[{"monomial":["D{1: 0-1}"],"poly":[["x","1"]]}]}"#).is_err());
}
