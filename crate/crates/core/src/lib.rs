//! Exact computations with dissection diagrams: the Hopf algebra they span, its
//! primitive elements, the dual pre-Lie structure and the morphism from rooted trees.

pub mod diagram;
pub mod dual;
pub mod hopf;
pub mod json;
pub mod lincomb;
pub mod linalg;
pub mod morphism;
pub mod poly;
pub mod prelie;
pub mod primitives;
pub mod trees;

pub use diagram::{Chord, DiagramError, DiagramMonomial, DissectionDiagram};
pub use dual::DualElement;
pub use hopf::{AlgebraElement, TensorElement};
pub use lincomb::LinComb;
pub use poly::{Poly, Rational};
pub use trees::{Forest, RootedTree};
