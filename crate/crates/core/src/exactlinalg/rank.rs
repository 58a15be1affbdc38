//! Exact rank over the rationals and over prime fields.
//!
//! Sparse matrices are reduced column by column against a table of pivot
//! columns keyed by their lowest nonzero row. Over the rationals the
//! reduction is fraction-free: a column is replaced by `a·col - b·pivot`
//! with `a, b` coprime and the result divided by its content, so entries stay
//! integral. Over GF(2) the columns are index sets and the reduction switches
//! to packed dense elimination once fill-in passes `DENSIFY_THRESHOLD`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::bitmatrix::BitMatrix;
use super::sparse::SparseIntMatrix;
use crate::error::{Error, Result};
use crate::scalar::{is_prime, ExactInteger, Field, Overflow};

/// Fill-in density beyond which GF(2) reduction moves to packed rows.
pub const DENSIFY_THRESHOLD: f64 = 0.20;

/// Field over which a rank is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RankField {
    Rational,
    Prime(u64),
}

impl fmt::Display for RankField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankField::Rational => f.write_str("Q"),
            RankField::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Outcome of a column reduction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Reduction {
    pub rank: usize,
    /// Lowest rows of the reduced pivot columns found during the sparse
    /// phase. Each is a row index whose column in the next boundary matrix is
    /// dependent on earlier columns.
    pub pivot_rows: Vec<u32>,
}

pub fn field_rank<T: ExactInteger>(m: &SparseIntMatrix<T>, field: RankField) -> Result<usize> {
    Ok(reduce_columns(m, field, None)?.rank)
}

/// Rank of the columns of `m` not marked in `skip`.
pub fn reduce_columns<T: ExactInteger>(
    m: &SparseIntMatrix<T>,
    field: RankField,
    skip: Option<&[bool]>,
) -> Result<Reduction> {
    let skipped = |j: usize| skip.is_some_and(|s| s[j]);
    match field {
        RankField::Rational => match reduce_fraction_free::<T, i64>(m, &skipped) {
            Ok(r) => Ok(r),
            Err(Overflow) => Ok(reduce_fraction_free::<T, BigInt>(m, &skipped)
                .expect("BigInt arithmetic cannot overflow")),
        },
        RankField::Prime(2) => Ok(reduce_gf2(m, &skipped)),
        RankField::Prime(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            Ok(reduce_mod_p(m, p, &skipped))
        }
    }
}

fn content_normalize<W: ExactInteger>(col: &mut [(u32, W)]) {
    let mut g = W::zero();
    for (_, v) in col.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in col.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}

/// `a·x - b·y` for sorted sparse columns.
fn combine<W: ExactInteger>(
    a: &W,
    x: &[(u32, W)],
    b: &W,
    y: &[(u32, W)],
) -> std::result::Result<Vec<(u32, W)>, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let scale = |s: &W, v: &W| s.checked_mul(v).ok_or(Overflow);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, scale(a, &x[i].1)?));
            i += 1;
        } else if take_y {
            let v = scale(b, &y[j].1)?;
            out.push((y[j].0, W::zero().checked_sub(&v).ok_or(Overflow)?));
            j += 1;
        } else {
            let v = scale(a, &x[i].1)?.checked_sub(&scale(b, &y[j].1)?).ok_or(Overflow)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

fn reduce_fraction_free<T: ExactInteger, W: ExactInteger>(
    m: &SparseIntMatrix<T>,
    skipped: &dyn Fn(usize) -> bool,
) -> std::result::Result<Reduction, Overflow> {
    let mut pivot_of_row = vec![u32::MAX; m.rows()];
    let mut stored: Vec<Vec<(u32, W)>> = Vec::new();
    let mut pivot_rows = Vec::new();
    for (j, src) in m.columns().iter().enumerate() {
        if skipped(j) || src.is_empty() {
            continue;
        }
        let mut col: Vec<(u32, W)> = src
            .iter()
            .map(|(i, v)| v.cast::<W>().map(|w| (*i, w)).ok_or(Overflow))
            .collect::<std::result::Result<_, _>>()?;
        content_normalize(&mut col);
        while let Some((low, cl)) = col.last().cloned() {
            let p = pivot_of_row[low as usize];
            if p == u32::MAX {
                break;
            }
            let piv = &stored[p as usize];
            let pl = &piv.last().unwrap().1;
            let g = pl.gcd(&cl);
            let (a, b) = (pl.clone() / g.clone(), cl / g);
            col = combine(&a, &col, &b, piv)?;
            content_normalize(&mut col);
        }
        if let Some((low, _)) = col.last() {
            pivot_of_row[*low as usize] = stored.len() as u32;
            pivot_rows.push(*low);
            stored.push(col);
        }
    }
    Ok(Reduction {
        rank: stored.len(),
        pivot_rows,
    })
}

fn reduce_mod_p<T: ExactInteger>(
    m: &SparseIntMatrix<T>,
    p: u64,
    skipped: &dyn Fn(usize) -> bool,
) -> Reduction {
    let to_mod = |v: &T| -> u64 {
        match v.to_i128_opt() {
            Some(x) => x.rem_euclid(p as i128) as u64,
            None => {
                let r = v.to_bigint().mod_floor(&BigInt::from(p));
                u64::try_from(r).unwrap()
            }
        }
    };
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, base);
            }
            base = mulm(base, base);
            e >>= 1;
        }
        acc
    };
    let mut pivot_of_row = vec![u32::MAX; m.rows()];
    let mut stored: Vec<Vec<(u32, u64)>> = Vec::new();
    let mut pivot_rows = Vec::new();
    for (j, src) in m.columns().iter().enumerate() {
        if skipped(j) {
            continue;
        }
        let mut col: Vec<(u32, u64)> = src
            .iter()
            .map(|(i, v)| (*i, to_mod(v)))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(low, cl)) = col.last() {
            let q = pivot_of_row[low as usize];
            if q == u32::MAX {
                break;
            }
            let piv = &stored[q as usize];
            let mut out = Vec::with_capacity(col.len() + piv.len());
            let (mut a, mut b) = (0, 0);
            while a < col.len() || b < piv.len() {
                if b == piv.len() || (a < col.len() && col[a].0 < piv[b].0) {
                    out.push(col[a]);
                    a += 1;
                } else if a == col.len() || piv[b].0 < col[a].0 {
                    out.push((piv[b].0, (p - mulm(cl, piv[b].1)) % p));
                    b += 1;
                } else {
                    let v = (col[a].1 + p - mulm(cl, piv[b].1)) % p;
                    if v != 0 {
                        out.push((col[a].0, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
            col = out;
        }
        if let Some(&(low, cl)) = col.last() {
            let s = inv(cl);
            for e in col.iter_mut() {
                e.1 = mulm(e.1, s);
            }
            pivot_of_row[low as usize] = stored.len() as u32;
            pivot_rows.push(low);
            stored.push(col);
        }
    }
    Reduction {
        rank: stored.len(),
        pivot_rows,
    }
}

fn sym_diff(x: &[u32], y: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i] < y[j]) {
            out.push(x[i]);
            i += 1;
        } else if i == x.len() || y[j] < x[i] {
            out.push(y[j]);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    out
}

fn reduce_gf2<T: ExactInteger>(m: &SparseIntMatrix<T>, skipped: &dyn Fn(usize) -> bool) -> Reduction {
    let two = T::one() + T::one();
    let nrows = m.rows();
    let mut pivot_of_row = vec![u32::MAX; nrows];
    let mut stored: Vec<Vec<u32>> = Vec::new();
    let mut pivot_rows = Vec::new();
    let mut stored_nnz = 0usize;
    let columns = m.columns();
    for (j, src) in columns.iter().enumerate() {
        if skipped(j) {
            continue;
        }
        let mut col: Vec<u32> = src
            .iter()
            .filter(|(_, v)| !v.is_multiple_of(&two))
            .map(|(i, _)| *i)
            .collect();
        while let Some(&low) = col.last() {
            let q = pivot_of_row[low as usize];
            if q == u32::MAX {
                break;
            }
            col = sym_diff(&col, &stored[q as usize]);
        }
        if let Some(&low) = col.last() {
            pivot_of_row[low as usize] = stored.len() as u32;
            pivot_rows.push(low);
            stored_nnz += col.len();
            stored.push(col);
            let filled = stored_nnz as f64 / (nrows as f64 * stored.len() as f64);
            if stored.len() >= 64 && filled > DENSIFY_THRESHOLD {
                let rest = (j + 1..columns.len()).filter(|&k| !skipped(k));
                let rank = dense_gf2_finish(nrows, &stored, rest.map(|k| &columns[k]), &two);
                return Reduction { rank, pivot_rows };
            }
        }
    }
    Reduction {
        rank: stored.len(),
        pivot_rows,
    }
}

fn dense_gf2_finish<'a, T: ExactInteger + 'a>(
    nrows: usize,
    stored: &[Vec<u32>],
    rest: impl Iterator<Item = &'a Vec<(u32, T)>>,
    two: &T,
) -> usize {
    let rest: Vec<&Vec<(u32, T)>> = rest.collect();
    let mut dense = BitMatrix::zeros(stored.len() + rest.len(), nrows);
    for (r, col) in stored.iter().enumerate() {
        for &i in col {
            dense.set(r, i as usize, true);
        }
    }
    for (r, col) in rest.iter().enumerate() {
        for (i, v) in col.iter() {
            if !v.is_multiple_of(two) {
                dense.set(stored.len() + r, *i as usize, true);
            }
        }
    }
    dense.reduce()
}

/// Rank of a dense matrix over any exact field by Gaussian elimination.
pub fn dense_rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in rank + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone() / pivot.clone();
            for k in c..ncols {
                let delta = factor.clone() * rows[rank][k].clone();
                rows[i][k] = rows[i][k].clone() - delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a dense integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_rank<W: ExactInteger>(mut rows: Vec<Vec<W>>) -> std::result::Result<usize, Overflow> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = W::one();
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in rank + 1..rows.len() {
            let lead = rows[i][c].clone();
            for k in c..ncols {
                let num = pivot
                    .checked_mul(&rows[i][k])
                    .and_then(|x| lead.checked_mul(&rows[rank][k]).and_then(|y| x.checked_sub(&y)))
                    .ok_or(Overflow)?;
                debug_assert!(num.is_multiple_of(&prev));
                rows[i][k] = num / prev.clone();
            }
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use crate::Rational;
    use proptest::prelude::*;

    fn sparse(rows: &[Vec<i64>]) -> SparseIntMatrix<i64> {
        SparseIntMatrix::from_dense(rows)
    }

    #[test]
    fn diag_two() {
        let m = sparse(&[vec![2]]);
        assert_eq!(field_rank(&m, RankField::Rational).unwrap(), 1);
        assert_eq!(field_rank(&m, RankField::Prime(2)).unwrap(), 0);
        assert_eq!(field_rank(&m, RankField::Prime(3)).unwrap(), 1);
    }

    #[test]
    fn triangle_boundary_rank() {
        // Edges 01, 02, 12 as columns, vertices as rows.
        let d1 = sparse(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(field_rank(&d1, RankField::Rational).unwrap(), 2);
        assert_eq!(field_rank(&d1, RankField::Prime(2)).unwrap(), 2);
    }

    #[test]
    fn composite_modulus_rejected() {
        let m = sparse(&[vec![1]]);
        assert!(matches!(field_rank(&m, RankField::Prime(9)), Err(Error::NotPrime(9))));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let m = sparse(&[vec![big, big - 1], vec![big - 3, big - 7], vec![1, 3]]);
        let dense: Vec<Vec<Rational>> = m
            .to_dense()
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        assert_eq!(field_rank(&m, RankField::Rational).unwrap(), dense_rank(dense));
    }

    #[test]
    fn gf2_densify_path() {
        // Dense random-looking 0/1 matrix large enough to trigger packing.
        let rows: Vec<Vec<i64>> = (0..90)
            .map(|i| (0..120).map(|j| ((i * 7 + j * 13 + i * j) % 3 == 0) as i64).collect())
            .collect();
        let m = sparse(&rows);
        let expected = dense_rank::<Fp<2>>(
            rows.iter().map(|r| r.iter().map(|&v| Fp::new(v)).collect()).collect(),
        );
        assert_eq!(field_rank(&m, RankField::Prime(2)).unwrap(), expected);
    }

    proptest! {
        #[test]
        fn sparse_ranks_match_dense(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..7)) {
            let m = sparse(&rows);
            let q: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect();
            let f3: Vec<Vec<Fp<3>>> = rows.iter().map(|r| r.iter().map(|&v| Fp::new(v)).collect()).collect();
            let f2: Vec<Vec<Fp<2>>> = rows.iter().map(|r| r.iter().map(|&v| Fp::new(v)).collect()).collect();
            let rq = dense_rank(q);
            prop_assert_eq!(field_rank(&m, RankField::Rational).unwrap(), rq);
            prop_assert_eq!(bareiss_rank::<BigInt>(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()).unwrap(), rq);
            prop_assert_eq!(field_rank(&m, RankField::Prime(3)).unwrap(), dense_rank(f3));
            prop_assert_eq!(field_rank(&m, RankField::Prime(2)).unwrap(), dense_rank(f2));
        }
    }
}
