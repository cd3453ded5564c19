//! Sparse row echelon forms over ℚ.
//!
//! The leading entry of a row is its *lowest* column. Pivot rows are monic.
//! Callers order columns so that "lowest" means "smallest filtration order",
//! which makes the non-pivot columns a filtration-compatible basis of the
//! quotient.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::polycore::Rational;

/// Sparse vector: `(column, value)` pairs sorted by column, no zeros.
pub type SparseVec = Vec<(u32, Rational)>;

const NONE: u32 = u32::MAX;

/// Dense scratch space for row reduction.
#[derive(Clone)]
struct Scratch {
    vals: Vec<Rational>,
    mark: Vec<bool>,
    touched: Vec<u32>,
    heap: BinaryHeap<Reverse<u32>>,
}

impl Scratch {
    fn new(ncols: usize) -> Self {
        Scratch {
            vals: vec![Rational::zero(); ncols],
            mark: vec![false; ncols],
            touched: Vec::new(),
            heap: BinaryHeap::new(),
        }
    }

    fn load(&mut self, v: &[(u32, Rational)]) {
        for (c, x) in v {
            self.add(*c, x);
        }
    }

    #[inline]
    fn add(&mut self, c: u32, x: &Rational) {
        let ci = c as usize;
        self.vals[ci] += x;
        if !self.mark[ci] {
            self.mark[ci] = true;
            self.touched.push(c);
            self.heap.push(Reverse(c));
        }
    }

    #[inline]
    fn axpy(&mut self, a: &Rational, row: &[(u32, Rational)]) {
        for (c, x) in row {
            let ci = *c as usize;
            self.vals[ci] -= &(a * x);
            if !self.mark[ci] {
                self.mark[ci] = true;
                self.touched.push(*c);
                self.heap.push(Reverse(*c));
            }
        }
    }

    /// Collects nonzero entries among touched columns and resets the scratch.
    fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::new();
        for &c in &self.touched {
            let ci = c as usize;
            let v = std::mem::take(&mut self.vals[ci]);
            if !v.is_zero() {
                out.push((c, v));
            }
            self.mark[ci] = false;
        }
        self.touched.clear();
        self.heap.clear();
        out
    }
}

/// Incrementally built echelon basis of a subspace of `ℚ^ncols`.
#[derive(Clone)]
pub struct Echelon {
    ncols: usize,
    pivot_row: Vec<u32>,
    rows: Vec<SparseVec>,
    scratch: Scratch,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivot_row: vec![NONE; ncols],
            rows: Vec::new(),
            scratch: Scratch::new(ncols),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn has_pivot(&self, c: u32) -> bool {
        self.pivot_row[c as usize] != NONE
    }

    pub fn pivot_row(&self, c: u32) -> Option<&SparseVec> {
        match self.pivot_row[c as usize] {
            NONE => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<u32> {
        (0..self.ncols as u32)
            .filter(|&c| self.pivot_row[c as usize] == NONE)
            .collect()
    }

    /// Reduces the leading entries of `v` until its lowest column is pivot-free.
    fn reduce_leading(&mut self, v: &[(u32, Rational)]) -> SparseVec {
        self.scratch.load(v);
        while let Some(Reverse(c)) = self.scratch.heap.pop() {
            let ci = c as usize;
            if self.scratch.vals[ci].is_zero() {
                continue;
            }
            let r = self.pivot_row[ci];
            if r == NONE {
                self.scratch.heap.push(Reverse(c));
                break;
            }
            let a = self.scratch.vals[ci].clone();
            let row = &self.rows[r as usize];
            self.scratch.axpy(&a, row);
        }
        self.scratch.drain()
    }

    /// Fully reduces `v`: the result has no entries in pivot columns.
    pub fn reduce(&mut self, v: &[(u32, Rational)]) -> SparseVec {
        self.scratch.load(v);
        while let Some(Reverse(c)) = self.scratch.heap.pop() {
            let ci = c as usize;
            if self.scratch.vals[ci].is_zero() {
                continue;
            }
            let r = self.pivot_row[ci];
            if r == NONE {
                continue;
            }
            let a = self.scratch.vals[ci].clone();
            let row = &self.rows[r as usize];
            self.scratch.axpy(&a, row);
        }
        self.scratch.drain()
    }

    pub fn contains(&mut self, v: &[(u32, Rational)]) -> bool {
        self.reduce_leading(v).is_empty()
    }

    /// Adds `v` to the span. Returns the new pivot column, or `None` if `v`
    /// was already in the span.
    pub fn insert(&mut self, v: &[(u32, Rational)]) -> Option<u32> {
        let mut r = self.reduce_leading(v);
        if r.is_empty() {
            return None;
        }
        let lead = r[0].0;
        let inv = r[0].1.recip();
        if !inv.is_one() {
            for (_, x) in r.iter_mut() {
                *x *= &inv;
            }
        }
        self.pivot_row[lead as usize] = self.rows.len() as u32;
        self.rows.push(r);
        Some(lead)
    }

    /// Brings every row to reduced form: tails touch only free columns.
    pub fn make_reduced(&mut self) {
        let mut order: Vec<u32> = (0..self.ncols as u32)
            .filter(|&c| self.pivot_row[c as usize] != NONE)
            .collect();
        order.reverse();
        for c in order {
            let r = self.pivot_row[c as usize] as usize;
            let row = std::mem::take(&mut self.rows[r]);
            let tail_has_pivot = row[1..]
                .iter()
                .any(|(cc, _)| self.pivot_row[*cc as usize] != NONE);
            if !tail_has_pivot {
                self.rows[r] = row;
                continue;
            }
            let tail = self.reduce(&row[1..]);
            let mut new_row = Vec::with_capacity(tail.len() + 1);
            new_row.push(row[0].clone());
            new_row.extend(tail);
            self.rows[r] = new_row;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn dense_rank(mut m: Vec<Vec<Rational>>) -> usize {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
            m.swap(rank, p);
            let pivot = m[rank][c].clone();
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[c].is_zero() {
                    let f = &row[c] / &pivot;
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn basic_insert_and_reduce() {
        let mut e = Echelon::new(3);
        assert_eq!(e.insert(&[(0, q(2)), (1, q(2))]), Some(0));
        assert_eq!(e.insert(&[(0, q(1)), (1, q(1))]), None);
        assert_eq!(e.insert(&[(1, q(1)), (2, q(1))]), Some(1));
        e.make_reduced();
        assert_eq!(e.rows()[0], vec![(0, q(1)), (2, q(-1))]);
        assert_eq!(e.reduce(&[(0, q(1))]), vec![(2, q(1))]);
        assert_eq!(e.free_columns(), vec![2]);
    }

    proptest! {
        #[test]
        fn rank_matches_dense(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 0..8)) {
            let mut e = Echelon::new(6);
            for r in &rows {
                let v: SparseVec = r.iter().enumerate().filter(|(_, x)| **x != 0).map(|(c, x)| (c as u32, q(*x))).collect();
                e.insert(&v);
            }
            let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect();
            prop_assert_eq!(e.rank(), dense_rank(dense));
            e.make_reduced();
            for (k, row) in e.rows().iter().enumerate() {
                prop_assert!(row[0].1.is_one());
                for (c, _) in &row[1..] {
                    prop_assert!(!e.has_pivot(*c), "row {} not reduced", k);
                }
            }
            // Every input row reduces to zero.
            for r in &rows {
                let v: SparseVec = r.iter().enumerate().filter(|(_, x)| **x != 0).map(|(c, x)| (c as u32, q(*x))).collect();
                prop_assert!(e.reduce(&v).is_empty());
            }
        }
    }
}
