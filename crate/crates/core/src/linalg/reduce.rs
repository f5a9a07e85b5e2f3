//! Incremental exact row reduction over sparse rows.
//!
//! Every linear system in the crate (invariant forms, derivations, kernels)
//! is assembled one equation at a time and fed through [`RowReducer`].
//! Dependent equations are discarded as soon as they reduce to zero, so the
//! `n^3` equation systems never materialise as dense matrices.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::subspace::Subspace;

/// Sorted `(column, value)` pairs with no explicit zeros.
pub type SparseRow = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    /// Pivot column -> row whose leading entry is a 1 in that column.
    pivots: BTreeMap<usize, SparseRow>,
}

/// `row - factor * other`, both sorted.
fn axpy(row: &[(usize, Rational)], factor: &Rational, other: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        match (row.get(i), other.get(j)) {
            (Some((ca, a)), Some((cb, b))) if ca == cb => {
                let v = a - factor * b;
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ca, a)), Some((cb, _))) if ca < cb => {
                out.push((*ca, a.clone()));
                i += 1;
            }
            (Some((ca, a)), None) => {
                out.push((*ca, a.clone()));
                i += 1;
            }
            (_, Some((cb, b))) => {
                out.push((*cb, -(factor * b)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn sparse_from_dense(row: &[Rational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

/// Builds a sparse row from unsorted, possibly repeated `(column, value)`
/// contributions.
pub fn sparse_from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in terms {
        if v.is_zero() {
            continue;
        }
        *acc.entry(c).or_insert_with(Rational::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces the leading entries of `row` against the current pivots.
    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some((c, lead)) = row.first() {
            let Some(prow) = self.pivots.get(c) else {
                break;
            };
            let f = lead.clone();
            row = axpy(&row, &f, prow);
        }
        row
    }

    /// Adds an equation; returns `true` when it was independent of the
    /// equations already present.
    pub fn push(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.cols));
        let row = self.reduce_leading(row);
        let Some((c, lead)) = row.first() else {
            return false;
        };
        let (c, inv) = (*c, lead.recip());
        let row = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        self.pivots.insert(c, row);
        true
    }

    pub fn push_dense(&mut self, row: &[Rational]) -> bool {
        assert_eq!(row.len(), self.cols, "row length must match column count");
        self.push(sparse_from_dense(row))
    }

    /// Whether `row` lies in the span of the rows pushed so far.
    pub fn spans(&self, row: &[Rational]) -> bool {
        self.reduce_leading(sparse_from_dense(row)).is_empty()
    }

    /// Fully reduced sparse rows, ordered by pivot column.
    fn reduced_sparse(&self) -> Vec<(usize, SparseRow)> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            loop {
                let hit = row
                    .iter()
                    .skip(1)
                    .find(|(c, _)| done.contains_key(c))
                    .map(|(c, v)| (*c, v.clone()));
                let Some((c, v)) = hit else { break };
                row = axpy(&row, &v, &done[&c]);
            }
            done.insert(p, row);
        }
        done.into_iter().collect()
    }

    /// Dense reduced row-echelon rows (nonzero rows only).
    pub fn into_rref(self) -> Vec<Vec<Rational>> {
        let cols = self.cols;
        self.reduced_sparse()
            .into_iter()
            .map(|(_, row)| {
                let mut dense = vec![Rational::zero(); cols];
                for (c, v) in row {
                    dense[c] = v;
                }
                dense
            })
            .collect()
    }

    /// Solution space of the homogeneous system pushed so far.
    pub fn null_space(&self) -> Subspace {
        let reduced = self.reduced_sparse();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        let slot: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut vectors: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                v
            })
            .collect();
        for (p, row) in reduced {
            for (c, val) in row.into_iter().skip(1) {
                vectors[slot[&c]][p] = -val;
            }
        }
        Subspace::span(self.cols, vectors)
    }
}
