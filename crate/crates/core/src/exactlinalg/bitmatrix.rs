//! Bit-packed matrices over GF(2).

use std::fmt;

/// Dense matrix over GF(2), each row packed into `u64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from rows of 0/1 entries. All rows must share a length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        let bit = 1u64 << (j % 64);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        (0..self.cols).map(|j| self.get(i, j) as u8).collect()
    }

    /// Column `j` as a bit mask over the first 64 rows.
    pub fn column_mask(&self, j: usize) -> u64 {
        assert!(self.rows <= 64);
        (0..self.rows).fold(0, |acc, i| acc | (self.get(i, j) as u64) << i)
    }

    /// Sum over GF(2) of the rows whose indices are set in `selection`.
    pub fn row_sum(&self, selection: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut acc = vec![0u64; self.words];
        for i in selection {
            for (a, b) in acc.iter_mut().zip(self.row(i)) {
                *a ^= b;
            }
        }
        acc
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let w = self.words;
        let (t, s) = (target * w, source * w);
        for k in 0..w {
            let v = self.data[s + k];
            self.data[t + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// In-place Gauss-Jordan elimination; returns the rank. The first `rank`
    /// rows are left in reduced row-echelon form.
    pub fn reduce(&mut self) -> usize {
        let mut rank = 0;
        for j in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| self.get(i, j)) else {
                continue;
            };
            self.swap_rows(rank, p);
            for i in 0..self.rows {
                if i != rank && self.get(i, j) {
                    self.xor_rows(i, rank);
                }
            }
            rank += 1;
        }
        rank
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.rows = rows;
        self.data.truncate(rows * self.words);
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Row space of a GF(2) matrix, held as a reduced row-echelon basis.
#[derive(Debug, Clone)]
pub struct RowSpace {
    pub rank: usize,
    pub basis: BitMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    /// Number of vectors in the row space, `2^rank`.
    pub fn size(&self) -> u128 {
        1u128 << self.rank
    }

    /// Whether the packed row lies in the span of the basis.
    pub fn contains(&self, row: &[u64]) -> bool {
        let mut v = row.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(self.basis.row(i)) {
                    *a ^= b;
                }
            }
        }
        v.iter().all(|&w| w == 0)
    }

    /// Every element of the row space, as packed rows, indexed by the
    /// subset of basis rows summed.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..(1u64 << self.rank)).map(move |mask| {
            self.basis
                .row_sum((0..self.rank).filter(move |&i| mask >> i & 1 == 1))
        })
    }
}

/// Rank and reduced row-echelon basis of the row space.
pub fn gf2_rank_rowspace(m: &BitMatrix) -> RowSpace {
    let mut work = m.clone();
    let rank = work.reduce();
    work.truncate_rows(rank);
    let pivots = (0..rank)
        .map(|i| (0..work.cols()).find(|&j| work.get(i, j)).unwrap())
        .collect();
    RowSpace {
        rank,
        basis: work,
        pivots,
    }
}
