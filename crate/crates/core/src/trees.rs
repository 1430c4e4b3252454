//! Unordered rooted trees and forests, grafting and the Grossman–Larson product.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::lincomb::LinComb;
use crate::poly::Poly;
use crate::prelie::PreLie;

/// A root with a sorted multiset of child subtrees. Degree is the number of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

impl RootedTree {
    /// The single vertex `•`.
    pub fn leaf() -> Self {
        RootedTree { children: Vec::new() }
    }

    /// `B(F)`: graft the trees of `F` on a new common root.
    pub fn graft_root(forest: &Forest) -> Self {
        RootedTree { children: forest.0.clone() }
    }

    fn from_children(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        RootedTree { children }
    }

    /// The ladder `e_n` with `n` vertices.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1, "a tree has at least one vertex");
        let mut t = Self::leaf();
        for _ in 1..n {
            t = RootedTree { children: vec![t] };
        }
        t
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        1 + self.children.iter().map(RootedTree::degree).sum::<usize>()
    }

    pub fn max_fertility(&self) -> usize {
        self.children.iter().map(RootedTree::max_fertility).max().unwrap_or(0).max(self.children.len())
    }

    pub fn is_subbinary(&self) -> bool {
        self.max_fertility() <= 2
    }

    pub fn stats(&self) -> TreeStats {
        fn walk(t: &RootedTree, s: &mut TreeStats) {
            if t.children.len() == 2 {
                s.two_child_vertices += 1;
            }
            if !t.children.is_empty() {
                s.internal_vertices += 1;
            }
            if t.children.len() > 1 {
                s.is_ladder = false;
            }
            for c in &t.children {
                walk(c, s);
            }
        }
        let mut s = TreeStats { two_child_vertices: 0, internal_vertices: 0, is_ladder: true };
        walk(self, &mut s);
        s
    }
}

/// `m(t)`, `int(t)` and whether `t` is a ladder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeStats {
    pub two_child_vertices: usize,
    pub internal_vertices: usize,
    pub is_ladder: bool,
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn parse_tree_at(b: &[u8], pos: &mut usize) -> Result<RootedTree, TreeError> {
    let skip = |pos: &mut usize| {
        while *pos < b.len() && b[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip(pos);
    if b.get(*pos) != Some(&b'[') {
        return Err(TreeError::Syntax { pos: *pos, msg: "expected `[`".into() });
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        skip(pos);
        match b.get(*pos) {
            Some(b']') => {
                *pos += 1;
                return Ok(RootedTree::from_children(children));
            }
            Some(b'[') => children.push(parse_tree_at(b, pos)?),
            _ => return Err(TreeError::Syntax { pos: *pos, msg: "expected `[` or `]`".into() }),
        }
    }
}

impl FromStr for RootedTree {
    type Err = TreeError;

    /// `[]` is a single vertex, `[c1 c2 ...]` a root with children `c1, c2, ...`.
    fn from_str(s: &str) -> Result<Self, TreeError> {
        let b = s.as_bytes();
        let mut pos = 0;
        let t = parse_tree_at(b, &mut pos)?;
        if !s[pos..].trim().is_empty() {
            return Err(TreeError::Syntax { pos, msg: "trailing input".into() });
        }
        Ok(t)
    }
}

/// A sorted multiset of trees; the empty forest is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest(Vec<RootedTree>);

impl Forest {
    pub fn new(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        Forest(trees)
    }

    pub fn unit() -> Self {
        Forest(Vec::new())
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.0
    }

    pub fn into_trees(self) -> Vec<RootedTree> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(RootedTree::degree).sum()
    }

    pub fn is_subbinary(&self) -> bool {
        self.0.iter().all(RootedTree::is_subbinary)
    }

    pub fn mul(&self, other: &Forest) -> Forest {
        Forest::new(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl From<RootedTree> for Forest {
    fn from(t: RootedTree) -> Self {
        Forest(vec![t])
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Forest {
    type Err = TreeError;

    /// Whitespace-separated trees; `1` or the empty string is the empty forest.
    fn from_str(s: &str) -> Result<Self, TreeError> {
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(Forest::unit());
        }
        let b = t.as_bytes();
        let mut pos = 0;
        let mut trees = Vec::new();
        while pos < b.len() {
            trees.push(parse_tree_at(b, &mut pos)?);
            while pos < b.len() && b[pos].is_ascii_whitespace() {
                pos += 1;
            }
        }
        Ok(Forest::new(trees))
    }
}

/// `t1 ∘ t2`: graft `t1` on each vertex of `t2` in turn.
pub fn graft_circ(t1: &RootedTree, t2: &RootedTree) -> LinComb<RootedTree> {
    fn go(t1: &RootedTree, t2: &RootedTree, out: &mut Vec<RootedTree>) {
        let mut here = t2.children.clone();
        here.push(t1.clone());
        out.push(RootedTree::from_children(here));
        for i in 0..t2.children.len() {
            let mut sub = Vec::new();
            go(t1, &t2.children[i], &mut sub);
            for s in sub {
                let mut ch = t2.children.clone();
                ch[i] = s;
                out.push(RootedTree::from_children(ch));
            }
        }
    }
    let mut v = Vec::new();
    go(t1, t2, &mut v);
    v.into_iter().map(|t| (t, Poly::one())).collect()
}

/// Grafting as a pre-Lie algebra on rooted trees.
#[derive(Clone, Copy, Debug, Default)]
pub struct TreeGraft;

impl PreLie for TreeGraft {
    type Basis = RootedTree;

    fn circ(&self, a: &RootedTree, b: &RootedTree) -> LinComb<RootedTree> {
        graft_circ(a, b)
    }

    fn degree(&self, b: &RootedTree) -> usize {
        b.degree()
    }
}

/// Grossman–Larson product: sum over all ways of grafting some trees of `f1` on vertices
/// of `f2`, the remaining trees of `f1` staying as separate factors.
pub fn gl_star(f1: &Forest, f2: &Forest) -> LinComb<Forest> {
    // Flatten f2 into an arena so vertices can be addressed by index.
    struct Arena {
        children: Vec<Vec<usize>>,
        roots: Vec<usize>,
    }
    fn push(t: &RootedTree, a: &mut Arena) -> usize {
        let id = a.children.len();
        a.children.push(Vec::new());
        for c in &t.children {
            let cid = push(c, a);
            a.children[id].push(cid);
        }
        id
    }
    fn build(v: usize, a: &Arena, attached: &[Vec<RootedTree>]) -> RootedTree {
        let mut ch: Vec<RootedTree> = a.children[v].iter().map(|&c| build(c, a, attached)).collect();
        ch.extend(attached[v].iter().cloned());
        RootedTree::from_children(ch)
    }
    let mut arena = Arena { children: Vec::new(), roots: Vec::new() };
    for t in &f2.0 {
        let r = push(t, &mut arena);
        arena.roots.push(r);
    }
    let nv = arena.children.len();
    let k = f1.0.len();
    let choices = nv + 1;
    let mut out = LinComb::zero();
    for code in 0..choices.pow(k as u32) {
        let mut attached = vec![Vec::new(); nv];
        let mut loose = Vec::new();
        let mut c = code;
        for t in &f1.0 {
            let s = c % choices;
            c /= choices;
            if s == nv {
                loose.push(t.clone());
            } else {
                attached[s].push(t.clone());
            }
        }
        let mut trees: Vec<RootedTree> = arena.roots.iter().map(|&r| build(r, &arena, &attached)).collect();
        trees.extend(loose);
        out.add_term(Forest::new(trees), Poly::one());
    }
    out
}

/// Kill every forest with a vertex of fertility at least 3.
pub fn subbinary_project(a: &LinComb<Forest>) -> LinComb<Forest> {
    let mut out = a.clone();
    out.retain(Forest::is_subbinary);
    out
}

/// Rooted trees with `n` vertices, sorted.
pub fn enumerate_trees(n: usize) -> Arc<Vec<RootedTree>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<RootedTree>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let out = if n == 0 {
        Vec::new()
    } else {
        let mut v: Vec<RootedTree> = enumerate_forests(n - 1).iter().map(RootedTree::graft_root).collect();
        v.sort();
        v
    };
    let out = Arc::new(out);
    cache.lock().unwrap().insert(n, out.clone());
    out
}

/// Forests with `n` vertices in total, sorted.
pub fn enumerate_forests(n: usize) -> Vec<Forest> {
    fn go(left: usize, max: Option<&RootedTree>, cur: &mut Vec<RootedTree>, out: &mut Vec<Forest>) {
        if left == 0 {
            out.push(Forest::new(cur.clone()));
            return;
        }
        for k in 1..=left {
            for t in enumerate_trees(k).iter() {
                // Nonincreasing sequence of (degree, tree) avoids duplicates.
                if let Some(m) = max {
                    if (t.degree(), t) > (m.degree(), m) {
                        continue;
                    }
                }
                cur.push(t.clone());
                go(left - k, Some(t), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}
