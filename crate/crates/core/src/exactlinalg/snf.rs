//! Smith normal form over the integers.
//!
//! Unit pivots are eliminated first on the sparse structure, shortest
//! columns first and the shortest row within a column. Each such pivot
//! contributes an invariant factor 1. Whatever remains is densified and
//! diagonalized with smallest-absolute-value pivots.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::sparse::SparseIntMatrix;
use crate::scalar::{ExactInteger, Overflow};

/// Invariant factors `d_1 | d_2 | ... | d_rank`, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Factors greater than one: the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.invariant_factors
            .windows(2)
            .all(|w| (&w[1] % &w[0]).is_zero())
    }
}

pub fn smith_normal_form<T: ExactInteger>(m: &SparseIntMatrix<T>) -> SnfResult {
    let factors = match snf_in::<T, i64>(m) {
        Ok(f) => f.iter().map(|d| d.to_bigint()).collect(),
        Err(Overflow) => snf_in::<T, BigInt>(m).expect("BigInt arithmetic cannot overflow"),
    };
    SnfResult {
        rank: factors.len(),
        invariant_factors: factors,
    }
}

struct Work<W> {
    rows: Vec<HashMap<u32, W>>,
    cols: Vec<Vec<u32>>,
}

impl<W: ExactInteger> Work<W> {
    fn remove_from_col(&mut self, c: u32, r: u32) {
        let col = &mut self.cols[c as usize];
        if let Some(pos) = col.iter().position(|&x| x == r) {
            col.swap_remove(pos);
        }
    }

    /// Eliminates the unit pivot at `(pr, pc)` and deletes its row and column.
    fn eliminate(&mut self, pr: u32, pc: u32) -> Result<(), Overflow> {
        let unit = self.rows[pr as usize][&pc].clone();
        let pivot_row: Vec<(u32, W)> = self.rows[pr as usize]
            .iter()
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        let targets: Vec<u32> = self.cols[pc as usize]
            .iter()
            .copied()
            .filter(|&r| r != pr)
            .collect();
        for r in targets {
            let factor = self.rows[r as usize][&pc].checked_mul(&unit).ok_or(Overflow)?;
            for (c, v) in &pivot_row {
                let delta = factor.checked_mul(v).ok_or(Overflow)?;
                let row = &mut self.rows[r as usize];
                let old = row.get(c).cloned().unwrap_or_else(W::zero);
                let new = old.checked_sub(&delta).ok_or(Overflow)?;
                let was_zero = old.is_zero();
                if new.is_zero() {
                    row.remove(c);
                    if !was_zero {
                        self.remove_from_col(*c, r);
                    }
                } else {
                    row.insert(*c, new);
                    if was_zero {
                        self.cols[*c as usize].push(r);
                    }
                }
            }
        }
        for (c, _) in &pivot_row {
            self.remove_from_col(*c, pr);
        }
        self.rows[pr as usize].clear();
        debug_assert!(self.cols[pc as usize].is_empty());
        Ok(())
    }

    /// A unit in column `c` on the shortest row, if any.
    fn unit_in_column(&self, c: usize) -> Option<u32> {
        self.cols[c]
            .iter()
            .copied()
            .filter(|&r| self.rows[r as usize][&(c as u32)].is_unit())
            .min_by_key(|&r| self.rows[r as usize].len())
    }

    /// Eliminates unit pivots in passes over the live columns, shortest
    /// first, until a pass finds none. Returns the number eliminated.
    fn eliminate_units(&mut self) -> Result<usize, Overflow> {
        let mut total = 0;
        loop {
            let mut order: Vec<usize> = (0..self.cols.len()).filter(|&c| !self.cols[c].is_empty()).collect();
            order.sort_by_key(|&c| self.cols[c].len());
            let mut found = 0;
            for c in order {
                if let Some(r) = self.unit_in_column(c) {
                    self.eliminate(r, c as u32)?;
                    found += 1;
                }
            }
            if found == 0 {
                return Ok(total);
            }
            total += found;
        }
    }
}

fn snf_in<T: ExactInteger, W: ExactInteger>(m: &SparseIntMatrix<T>) -> Result<Vec<W>, Overflow> {
    let mut work = Work::<W> {
        rows: vec![HashMap::new(); m.rows()],
        cols: vec![Vec::new(); m.cols()],
    };
    for (i, j, v) in m.triplets() {
        work.rows[i].insert(j as u32, v.cast::<W>().ok_or(Overflow)?);
        work.cols[j].push(i as u32);
    }
    let units = work.eliminate_units()?;
    let live_rows: Vec<usize> = (0..m.rows()).filter(|&r| !work.rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols()).filter(|&c| !work.cols[c].is_empty()).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut dense = vec![vec![W::zero(); live_cols.len()]; live_rows.len()];
    for (k, &r) in live_rows.iter().enumerate() {
        for (c, v) in &work.rows[r] {
            dense[k][col_pos[&(*c as usize)]] = v.clone();
        }
    }
    let mut factors = vec![W::one(); units];
    factors.extend(dense_snf(dense)?);
    Ok(factors)
}

/// Nonzero invariant factors of a dense integer matrix.
pub fn dense_snf<W: ExactInteger>(mut a: Vec<Vec<W>>) -> Result<Vec<W>, Overflow> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let pivot = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].clone() / pivot.clone();
                for j in t..n {
                    let d = q.checked_mul(&a[t][j]).ok_or(Overflow)?;
                    a[i][j] = a[i][j].checked_sub(&d).ok_or(Overflow)?;
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].clone() / pivot.clone();
                for row in a.iter_mut().skip(t) {
                    let d = q.checked_mul(&row[t]).ok_or(Overflow)?;
                    row[j] = row[j].checked_sub(&d).ok_or(Overflow)?;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                // Move the smallest remainder in row/column t to the pivot.
                let mut best = (t, t);
                for i in t + 1..m {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                } else if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            // Row and column are clear; enforce divisibility of the block.
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(a[i][j].clone() % pivot.clone()).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] = a[t][j].checked_add(&v).ok_or(Overflow)?;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    Ok(factors)
}
