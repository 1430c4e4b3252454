//! Sparse matrices over the rationals with exact rank computation.

use std::collections::BTreeMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseExactMatrix {
    nrows: usize,
    ncols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseExactMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseExactMatrix { nrows, ncols, entries: BTreeMap::new() }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.nrows && c < self.ncols, "entry ({r}, {c}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.ncols, self.nrows);
        for (&(r, c), v) in &self.entries {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    /// Rank over Q by fraction-free row reduction: rows are scaled to primitive integer
    /// vectors and reduced against pivots indexed by their leading column.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.nrows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
        for row in rows {
            let mut row = integer_row(&row);
            while let Some(&(lead, _)) = row.first() {
                match pivots.get(&lead) {
                    Some(p) => row = eliminate(&row, p),
                    None => {
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    pub fn kernel_dimension(&self) -> usize {
        self.ncols - self.rank()
    }

    /// Coordinate-format dump: a header line `rows cols nnz`, then `row col num/den`
    /// per nonzero entry with 1-based indices.
    pub fn write_matrix_market(&self, mut w: impl Write) -> io::Result<()> {
        writeln!(w, "%%MatrixMarket matrix coordinate rational general")?;
        writeln!(w, "{} {} {}", self.nrows, self.ncols, self.entries.len())?;
        for (&(r, c), v) in &self.entries {
            writeln!(w, "{} {} {}/{}", r + 1, c + 1, v.numer(), v.denom())?;
        }
        Ok(())
    }
}

fn primitive(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
    row
}

fn integer_row(row: &[(usize, Rational)]) -> Vec<(usize, BigInt)> {
    let l = row.iter().fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
    primitive(row.iter().map(|(c, v)| (*c, (v * Rational::from_integer(l.clone())).to_integer())).collect())
}

/// `p0 * row - r0 * pivot`, which cancels the shared leading entry.
fn eliminate(row: &[(usize, BigInt)], pivot: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let (a, b) = (&pivot[0].1, &row[0].1);
    let g = a.gcd(b);
    let (fa, fb) = (a / &g, b / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, &fa * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&fb * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &fa * &row[i - 1].1 - &fb * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    primitive(out)
}
