use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::ExactInteger;

/// Sparse integer matrix stored by columns; each column is sorted by row and
/// holds no zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix<T = BigInt> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, T)>>,
}

impl<T: ExactInteger> SparseIntMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from `(row, col, value)` triples. Zero values are dropped;
    /// repeated positions and out-of-range indices are rejected.
    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, T)>) -> Result<Self> {
        let mut columns: Vec<Vec<(u32, T)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::InvalidInput(format!(
                    "entry ({i}, {j}) outside a {rows}x{cols} matrix"
                )));
            }
            if !v.is_zero() {
                columns[j].push((i as u32, v));
            }
        }
        for (j, col) in columns.iter_mut().enumerate() {
            col.sort_by_key(|e| e.0);
            if col.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidInput(format!("duplicate entry in column {j}")));
            }
        }
        Ok(SparseIntMatrix { rows, cols, columns })
    }

    /// Builds from sorted, zero-free columns.
    pub(crate) fn from_columns(rows: usize, columns: Vec<Vec<(u32, T)>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|e| !e.1.is_zero())));
        SparseIntMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_dense(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut columns = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    columns[j].push((i as u32, v.clone()));
                }
            }
        }
        SparseIntMatrix {
            rows: nrows,
            cols: ncols,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn columns(&self) -> &[Vec<(u32, T)>] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn density(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            0.0
        } else {
            self.nnz() as f64 / (self.rows as f64 * self.cols as f64)
        }
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.columns[j]
            .binary_search_by_key(&(i as u32), |e| e.0)
            .map(|k| self.columns[j][k].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i as usize, j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (i, j, v) in self.triplets() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut columns: Vec<Vec<(u32, T)>> = vec![Vec::new(); self.rows];
        for (i, j, v) in self.triplets() {
            columns[i].push((j as u32, v.clone()));
        }
        SparseIntMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// Converts entries to another exact integer type.
    pub fn cast<U: ExactInteger>(&self) -> Option<SparseIntMatrix<U>> {
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(i, v)| v.cast::<U>().map(|u| (*i, u))).collect())
            .collect::<Option<Vec<_>>>()?;
        Some(SparseIntMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        })
    }

    /// Product `self * other`, used for checking `∂∂ = 0`.
    pub fn mul(&self, other: &SparseIntMatrix<T>) -> SparseIntMatrix<T> {
        assert_eq!(self.cols, other.rows);
        let columns = other
            .columns
            .iter()
            .map(|bcol| {
                let mut acc: std::collections::BTreeMap<u32, T> = Default::default();
                for (k, bv) in bcol {
                    for (i, av) in &self.columns[*k as usize] {
                        let e = acc.entry(*i).or_insert_with(T::zero);
                        *e = e.clone() + av.clone() * bv.clone();
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseIntMatrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}
