//! Dissection diagrams: non-crossing spanning trees on the vertices of a polygon.
//!
//! A diagram of degree `n` lives on vertices `0..=n` placed around a circle and has
//! exactly `n` chords. Vertex `0` is the root. Side `i` joins vertices `i` and `i + 1`
//! (side `n` joins `n` and `0`).

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

/// Chord `{low, high}` with `low < high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub low: usize,
    pub high: usize,
}

impl Chord {
    pub fn new(a: usize, b: usize) -> Self {
        Chord { low: a.min(b), high: a.max(b) }
    }

    pub fn has(&self, v: usize) -> bool {
        self.low == v || self.high == v
    }

    pub fn other(&self, v: usize) -> usize {
        if self.low == v {
            self.high
        } else {
            self.low
        }
    }

    /// Side `s` lies on the inner arc `low..high` cut off by this chord.
    pub fn encloses_side(&self, s: usize) -> bool {
        self.low <= s && s < self.high
    }

    pub fn crosses(&self, other: &Chord) -> bool {
        let (a, b, c, d) = (self.low, self.high, other.low, other.high);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.low, self.high)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("chord {chord} has an endpoint outside 0..={degree}")]
    OutOfRange { chord: Chord, degree: usize },
    #[error("chord {0}-{0} joins a vertex to itself")]
    Loop(usize),
    #[error("chord {0} appears twice")]
    Duplicate(Chord),
    #[error("a diagram of degree {degree} needs {degree} chords, found {found}")]
    ChordCount { degree: usize, found: usize },
    #[error("chords {0} and {1} cross")]
    Crossing(Chord, Chord),
    #[error("chord {0} closes a cycle")]
    Cycle(Chord),
    #[error("chord {0} is not a chord of the diagram")]
    NotAChord(Chord),
    #[error("degree {0} exceeds the supported maximum of 63")]
    TooLarge(usize),
}

/// A validated diagram with its chords kept sorted, so derived equality and hashing
/// are equality of diagrams. Ordering compares the degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DissectionDiagram {
    degree: usize,
    chords: Vec<Chord>,
}

impl DissectionDiagram {
    /// The degree-0 diagram (a single vertex), which plays the role of the unit.
    pub fn empty() -> Self {
        DissectionDiagram { degree: 0, chords: Vec::new() }
    }

    pub fn new(degree: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, DiagramError> {
        Self::from_chords(degree, chords.into_iter().map(|(a, b)| Chord::new(a, b)).collect())
    }

    pub fn from_chords(degree: usize, mut chords: Vec<Chord>) -> Result<Self, DiagramError> {
        if degree > 63 {
            return Err(DiagramError::TooLarge(degree));
        }
        for c in &chords {
            if c.low == c.high {
                return Err(DiagramError::Loop(c.low));
            }
            if c.high > degree {
                return Err(DiagramError::OutOfRange { chord: *c, degree });
            }
        }
        chords.sort();
        if let Some(w) = chords.windows(2).find(|w| w[0] == w[1]) {
            return Err(DiagramError::Duplicate(w[0]));
        }
        if chords.len() != degree {
            return Err(DiagramError::ChordCount { degree, found: chords.len() });
        }
        for (i, a) in chords.iter().enumerate() {
            for b in &chords[i + 1..] {
                if a.crosses(b) {
                    return Err(DiagramError::Crossing(*a, *b));
                }
            }
        }
        let mut uf: Vec<usize> = (0..=degree).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for c in &chords {
            let (a, b) = (find(&mut uf, c.low), find(&mut uf, c.high));
            if a == b {
                return Err(DiagramError::Cycle(*c));
            }
            uf[a] = b;
        }
        Ok(DissectionDiagram { degree, chords })
    }

    /// Build from chords produced by an operation that is known to preserve validity.
    pub(crate) fn from_valid(degree: usize, chords: Vec<Chord>) -> Self {
        let d = Self::from_chords(degree, chords);
        match d {
            Ok(d) => d,
            Err(e) => panic!("internal construction produced an invalid diagram: {e}"),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn is_empty(&self) -> bool {
        self.degree == 0
    }

    /// Corolla `X_n`: every chord leaves the root.
    pub fn corolla(n: usize) -> Self {
        Self::from_valid(n, (1..=n).map(|v| Chord::new(0, v)).collect())
    }

    /// `Y_n`: the root joined to `n`, followed by the path `n, n-1, ..., 1`.
    pub fn ladder(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut chords: Vec<Chord> = (1..n).map(|i| Chord::new(i, i + 1)).collect();
        chords.push(Chord::new(0, n));
        Self::from_valid(n, chords)
    }

    pub fn chord_index(&self, c: &Chord) -> Option<usize> {
        self.chords.binary_search(c).ok()
    }

    pub fn full_mask(&self) -> u64 {
        if self.degree == 0 {
            0
        } else {
            u64::MAX >> (64 - self.degree)
        }
    }

    pub fn mask_of(&self, subset: &[Chord]) -> Result<u64, DiagramError> {
        let mut mask = 0u64;
        for c in subset {
            let c = Chord::new(c.low, c.high);
            let i = self.chord_index(&c).ok_or(DiagramError::NotAChord(c))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn subset_of_mask(&self, mask: u64) -> Vec<Chord> {
        (0..self.degree).filter(|i| mask >> i & 1 == 1).map(|i| self.chords[i]).collect()
    }

    pub fn tree_structure(&self) -> TreeStructure {
        TreeStructure::new(self, SweepOrder::Standard)
    }

    pub fn tree_structure_with(&self, order: SweepOrder) -> TreeStructure {
        TreeStructure::new(self, order)
    }

    /// Faces cut out of the polygon by the chords of `subset`.
    pub fn faces(&self, subset: &[Chord]) -> Result<FacePartition, DiagramError> {
        let mask = self.mask_of(subset)?;
        Ok(face_partition(self.degree, &self.subset_of_mask(mask)))
    }

    /// Contraction `q_C`: the diagrams filling the faces left by deleting the chords of `C`.
    pub fn contract(&self, subset: &[Chord]) -> Result<DiagramMonomial, DiagramError> {
        Ok(self.contract_mask(self.mask_of(subset)?))
    }

    /// Restriction `r_C` together with its orientation defect `k_C`.
    pub fn restrict(&self, subset: &[Chord]) -> Result<(DissectionDiagram, usize), DiagramError> {
        Ok(self.restrict_mask(self.mask_of(subset)?))
    }

    pub fn contract_mask(&self, mask: u64) -> DiagramMonomial {
        let piece = Piece::from_diagram(self);
        let ids: Vec<usize> = (0..self.degree).filter(|i| mask >> i & 1 == 1).collect();
        DiagramMonomial::new(contract_pieces(vec![piece], &ids).iter().map(Piece::diagram))
    }

    pub fn restrict_mask(&self, mask: u64) -> (DissectionDiagram, usize) {
        let ids: Vec<usize> = (0..self.degree).filter(|i| mask >> i & 1 == 1).collect();
        let (p, k) = Piece::from_diagram(self).restrict(&ids);
        (p.diagram(), k)
    }

    /// Split along the chord from the root to its largest neighbour `v`, giving the
    /// diagram on `0..=k`, the one on `k+1..=v` rooted at `v`, and the one on `v..=n`.
    pub fn triple_decompose(&self) -> Option<(DissectionDiagram, DissectionDiagram, DissectionDiagram)> {
        if self.degree == 0 {
            return None;
        }
        let n = self.degree;
        let v = self.chords.iter().filter(|c| c.low == 0).map(|c| c.high).max()?;
        let mut adj = vec![Vec::new(); n + 1];
        for c in &self.chords {
            if *c != Chord::new(0, v) {
                adj[c.low].push(c.high);
                adj[c.high].push(c.low);
            }
        }
        let mut seen = vec![false; n + 1];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        let k = (0..v).filter(|&w| seen[w]).max().unwrap_or(0);
        let mut ca = Vec::new();
        let mut cb = Vec::new();
        let mut cc = Vec::new();
        for c in &self.chords {
            if *c == Chord::new(0, v) {
                continue;
            }
            if c.high <= k {
                ca.push(*c);
            } else if c.low >= v {
                cc.push(Chord::new(c.low - v, c.high - v));
            } else {
                let m = |w: usize| if w == v { 0 } else { w - k };
                cb.push(Chord::new(m(c.low), m(c.high)));
            }
        }
        Some((
            Self::from_valid(k, ca),
            Self::from_valid(v - 1 - k, cb),
            Self::from_valid(n - v, cc),
        ))
    }

    /// Inverse of [`triple_decompose`](Self::triple_decompose).
    pub fn triple_compose(a: &DissectionDiagram, b: &DissectionDiagram, c: &DissectionDiagram) -> Self {
        let k = a.degree;
        let v = k + b.degree + 1;
        let n = v + c.degree;
        let mut chords = a.chords.clone();
        let mb = |w: usize| if w == 0 { v } else { k + w };
        chords.extend(b.chords.iter().map(|ch| Chord::new(mb(ch.low), mb(ch.high))));
        chords.extend(c.chords.iter().map(|ch| Chord::new(ch.low + v, ch.high + v)));
        chords.push(Chord::new(0, v));
        Self::from_valid(n, chords)
    }
}

impl fmt::Display for DissectionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{{{}:", self.degree)?;
        for (i, c) in self.chords.iter().enumerate() {
            write!(f, "{}{c}", if i == 0 { " " } else { "," })?;
        }
        write!(f, "}}")
    }
}

impl FromStr for DissectionDiagram {
    type Err = DiagramError;

    /// Accepts `D{n: u-v, u-v, ...}` with arbitrary whitespace.
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let mut p = Scanner { bytes: s.as_bytes(), pos: 0 };
        p.expect(b'D')?;
        p.expect(b'{')?;
        let degree = p.number()?;
        p.expect(b':')?;
        let mut chords = Vec::new();
        if p.peek() != Some(b'}') {
            loop {
                let a = p.number()?;
                p.expect(b'-')?;
                let b = p.number()?;
                if a == b {
                    return Err(DiagramError::Loop(a));
                }
                chords.push(Chord::new(a, b));
                if p.peek() == Some(b',') {
                    p.pos += 1;
                } else {
                    break;
                }
            }
        }
        p.expect(b'}')?;
        if p.peek().is_some() {
            return Err(p.error("trailing input"));
        }
        Self::from_chords(degree, chords)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> DiagramError {
        DiagramError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn expect(&mut self, b: u8) -> Result<(), DiagramError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", b as char)))
        }
    }

    fn number(&mut self) -> Result<usize, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| DiagramError::Syntax { pos: start, msg: "number too large".into() })
    }
}

/// Commutative product of non-empty diagrams, stored sorted. The empty product is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramMonomial(Vec<DissectionDiagram>);

impl DiagramMonomial {
    pub fn unit() -> Self {
        DiagramMonomial(Vec::new())
    }

    /// Degree-0 factors are dropped.
    pub fn new(factors: impl IntoIterator<Item = DissectionDiagram>) -> Self {
        let mut v: Vec<_> = factors.into_iter().filter(|d| d.degree > 0).collect();
        v.sort();
        DiagramMonomial(v)
    }

    pub fn single(d: DissectionDiagram) -> Self {
        Self::new([d])
    }

    pub fn factors(&self) -> &[DissectionDiagram] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|d| d.degree).sum()
    }

    pub fn as_single(&self) -> Option<&DissectionDiagram> {
        match self.0.as_slice() {
            [d] => Some(d),
            _ => None,
        }
    }

    pub fn mul(&self, other: &DiagramMonomial) -> DiagramMonomial {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        v.sort();
        DiagramMonomial(v)
    }

    /// Product over distinct factors of `multiplicity!`.
    pub fn symmetry_factor(&self) -> num_bigint::BigInt {
        let mut out = num_bigint::BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let j = (i..self.0.len()).find(|&j| self.0[j] != self.0[i]).unwrap_or(self.0.len());
            out *= crate::poly::factorial(j - i);
            i = j;
        }
        out
    }
}

impl From<DissectionDiagram> for DiagramMonomial {
    fn from(d: DissectionDiagram) -> Self {
        Self::single(d)
    }
}

impl fmt::Display for DiagramMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DiagramMonomial {
    type Err = DiagramError;

    /// Whitespace- or `*`-separated diagrams; `1` or the empty string is the unit.
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(Self::unit());
        }
        let mut out = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let end = rest.find('}').ok_or(DiagramError::Syntax { pos: 0, msg: "unterminated diagram".into() })?;
            out.push(rest[..=end].parse()?);
            rest = rest[end + 1..].trim_start().trim_start_matches('*').trim_start();
        }
        Ok(Self::new(out))
    }
}

/// How the neighbours of a vertex are swept when listing them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SweepOrder {
    /// Starting just before the vertex and going backwards: `i-1, i-2, ..., 0, n, ..., i+1`.
    #[default]
    Standard,
    /// The mirror image. Only useful as a deliberately wrong convention in checks.
    Reversed,
}

/// Rooted-tree data of a diagram: parents, chord labels and per-vertex neighbour orders.
#[derive(Clone, Debug)]
pub struct TreeStructure {
    degree: usize,
    parent: Vec<Option<usize>>,
    neighbors: Vec<Vec<usize>>,
}

impl TreeStructure {
    fn new(d: &DissectionDiagram, order: SweepOrder) -> Self {
        let n = d.degree;
        let mut neighbors = vec![Vec::new(); n + 1];
        for c in &d.chords {
            neighbors[c.low].push(c.high);
            neighbors[c.high].push(c.low);
        }
        let m = n + 1;
        for (i, nb) in neighbors.iter_mut().enumerate() {
            let key = |w: usize| (i + 2 * m - 1 - w) % m;
            match order {
                SweepOrder::Standard => nb.sort_by_key(|&w| key(w)),
                SweepOrder::Reversed => nb.sort_by_key(|&w| std::cmp::Reverse(key(w))),
            }
        }
        let mut parent = vec![None; n + 1];
        let mut seen = vec![false; n + 1];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for &b in &neighbors[a] {
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = Some(a);
                    queue.push_back(b);
                }
            }
        }
        TreeStructure { degree: n, parent, neighbors }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// The endpoint of `c` closer to the root.
    pub fn parent_end(&self, c: &Chord) -> usize {
        if self.parent[c.high] == Some(c.low) {
            c.low
        } else {
            c.high
        }
    }

    /// A chord is labelled by its endpoint farther from the root.
    pub fn label(&self, c: &Chord) -> usize {
        c.other(self.parent_end(c))
    }

    /// Neighbours of `i` in sweep order.
    pub fn ccw_order(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// Number of chords at the root.
    pub fn root_fertility(&self) -> usize {
        self.neighbors[0].len()
    }

    /// 1-based position of the chord labelled `i` (the one towards the root) in the
    /// sweep order at `i`. Not defined for the root.
    pub fn parent_position(&self, i: usize) -> usize {
        let p = self.parent[i].expect("the root has no parent chord");
        self.neighbors[i].iter().position(|&w| w == p).unwrap() + 1
    }
}

/// Partition of the sides `0..=n` into the faces of a chord subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePartition {
    faces: Vec<Vec<usize>>,
}

impl FacePartition {
    /// Faces in order of their smallest side; each face lists its sides increasingly.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of_side(&self, s: usize) -> usize {
        self.faces.iter().position(|f| f.contains(&s)).expect("side out of range")
    }
}

fn side_signature(s: usize, chords: &[Chord]) -> u64 {
    chords.iter().enumerate().fold(0u64, |acc, (i, c)| acc | (c.encloses_side(s) as u64) << i)
}

pub(crate) fn face_partition(degree: usize, subset: &[Chord]) -> FacePartition {
    let mut faces: Vec<(u64, Vec<usize>)> = Vec::new();
    for s in 0..=degree {
        let sig = side_signature(s, subset);
        match faces.iter_mut().find(|(k, _)| *k == sig) {
            Some((_, f)) => f.push(s),
            None => faces.push((sig, vec![s])),
        }
    }
    FacePartition { faces: faces.into_iter().map(|(_, f)| f).collect() }
}

/// A diagram whose chords carry identifiers, so that contractions and restrictions
/// applied in sequence can keep referring to chords of the original diagram.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub degree: usize,
    pub chords: Vec<(Chord, usize)>,
}

impl Piece {
    pub fn from_diagram(d: &DissectionDiagram) -> Self {
        Piece { degree: d.degree, chords: d.chords.iter().copied().zip(0..).collect() }
    }

    pub fn diagram(&self) -> DissectionDiagram {
        DissectionDiagram::from_valid(self.degree, self.chords.iter().map(|(c, _)| *c).collect())
    }

    pub fn has_id(&self, id: usize) -> bool {
        self.chords.iter().any(|&(_, i)| i == id)
    }

    /// Remove one chord, returning the outer piece and the piece it enclosed.
    fn contract_one(&self, id: usize) -> (Piece, Piece) {
        let (c, _) = *self.chords.iter().find(|&&(_, i)| i == id).expect("chord id not in piece");
        let (u, v) = (c.low, c.high);
        let shift = v - u;
        let mut inner = Vec::new();
        let mut outer = Vec::new();
        for &(d, i) in &self.chords {
            if i == id {
                continue;
            }
            if d.low >= u && d.high <= v {
                let m = |w: usize| if w == v { 0 } else { w - u };
                inner.push((Chord::new(m(d.low), m(d.high)), i));
            } else {
                let m = |w: usize| if w >= v { w - shift } else { w };
                outer.push((Chord::new(m(d.low), m(d.high)), i));
            }
        }
        (Piece { degree: self.degree - shift, chords: outer }, Piece { degree: shift - 1, chords: inner })
    }

    /// Restrict to the chords with the given ids; also returns the orientation defect.
    pub fn restrict(&self, ids: &[usize]) -> (Piece, usize) {
        let n = self.degree;
        let chosen: Vec<(Chord, usize)> = self.chords.iter().copied().filter(|(_, i)| ids.contains(i)).collect();
        let plain: Vec<Chord> = chosen.iter().map(|(c, _)| *c).collect();
        let m = chosen.len();
        let mut seen = Vec::new();
        let mut idx = vec![0usize; n + 1];
        for s in 0..n {
            let sig = side_signature(s, &plain);
            let kept = !seen.contains(&sig);
            if kept {
                seen.push(sig);
            }
            idx[s + 1] = idx[s] + kept as usize;
        }
        for w in idx.iter_mut() {
            *w %= m + 1;
        }
        let image: Vec<(Chord, usize)> = chosen.iter().map(|&(c, i)| (Chord::new(idx[c.low], idx[c.high]), i)).collect();
        let out = Piece { degree: m, chords: image };
        let own = self.diagram().tree_structure();
        let res = out.diagram().tree_structure();
        let defect = chosen
            .iter()
            .zip(&out.chords)
            .filter(|((c, _), (img, _))| idx[own.parent_end(c)] != res.parent_end(img))
            .count();
        (out, defect)
    }
}

/// Contract the chords with the given ids in a product of pieces; empty pieces are dropped.
pub(crate) fn contract_pieces(mut pieces: Vec<Piece>, ids: &[usize]) -> Vec<Piece> {
    for &id in ids {
        let pos = pieces.iter().position(|p| p.has_id(id)).expect("chord id not present");
        let p = pieces.swap_remove(pos);
        let (outer, inner) = p.contract_one(id);
        pieces.extend([outer, inner].into_iter().filter(|q| q.degree > 0));
    }
    pieces
}

/// All diagrams of degree `n`, sorted. Built from the triple decomposition and cached.
pub fn enumerate(n: usize) -> Arc<Vec<DissectionDiagram>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<DissectionDiagram>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let out = if n == 0 {
        vec![DissectionDiagram::empty()]
    } else {
        let mut out = Vec::new();
        for p in 0..n {
            for q in 0..n - p {
                let r = n - 1 - p - q;
                let (ea, eb, ec) = (enumerate(p), enumerate(q), enumerate(r));
                for a in ea.iter() {
                    for b in eb.iter() {
                        for c in ec.iter() {
                            out.push(DissectionDiagram::triple_compose(a, b, c));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    };
    let out = Arc::new(out);
    cache.lock().unwrap().insert(n, out.clone());
    out
}

/// Number of diagrams of degree `n`: `binom(3n, n) / (2n + 1)`.
pub fn count(n: usize) -> num_bigint::BigInt {
    crate::poly::binomial(3 * n, n) / num_bigint::BigInt::from(2 * n + 1)
}
