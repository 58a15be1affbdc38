//! Euler zigzag and Springer numbers, and the closed-form Betti numbers of
//! the real toric varieties of types A, B, C and D.
//!
//! Indices may be negative wherever a formula mentions `a_k`, `b_k` or
//! `C(n, k)`; such terms are zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::scalar::Field;
use crate::Family;

/// Euler zigzag numbers `a_0, ..., a_{len-1}` via the Entringer
/// (boustrophedon) triangle.
pub fn zigzag_numbers(len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut prev: Vec<BigInt> = Vec::new();
    for n in 0..len {
        let mut row = Vec::with_capacity(n + 1);
        row.push(if n == 0 { BigInt::one() } else { BigInt::zero() });
        for k in 1..=n {
            let next = &row[k - 1] + &prev[n - k];
            row.push(next);
        }
        out.push(row[n].clone());
        prev = row;
    }
    out
}

pub fn euler_zigzag(n: usize) -> BigInt {
    zigzag_numbers(n + 1).pop().unwrap()
}

/// Inverse of a power series with invertible constant term, truncated to
/// `len` coefficients.
pub fn invert_series<F: Field>(series: &[F], len: usize) -> Vec<F> {
    let c0 = series.first().cloned().unwrap_or_else(F::zero);
    assert!(!c0.is_zero(), "series constant term must be invertible");
    let inv0 = F::one() / c0;
    let mut out: Vec<F> = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            out.push(inv0.clone());
            continue;
        }
        let mut acc = F::zero();
        for j in 1..=k.min(series.len().saturating_sub(1)) {
            acc = acc + series[j].clone() * out[k - j].clone();
        }
        out.push(-(acc * inv0.clone()));
    }
    out
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Springer numbers `b_0, ..., b_{len-1}`: Taylor coefficients of
/// `1 / (cos x - sin x)` times `k!`, computed over the rationals.
pub fn springer_numbers(len: usize) -> Vec<BigInt> {
    let denom: Vec<BigRational> = (0..len)
        .map(|k| {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            // cos contributes at even k, -sin at odd k; both carry (-1)^{floor(k/2)}.
            let numer = if k % 2 == 0 { sign } else { -sign };
            BigRational::new(BigInt::from(numer), factorial(k))
        })
        .collect();
    invert_series(&denom, len)
        .into_iter()
        .enumerate()
        .map(|(k, q)| {
            let scaled = q * BigRational::from_integer(factorial(k));
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect()
}

pub fn springer(n: usize) -> BigInt {
    springer_numbers(n + 1).pop().unwrap()
}

/// `(s_m, t_m) = (2^m - 1, (m - 2) 2^{m-1} + 1)`.
pub fn aux_sequences(m: usize) -> (BigInt, BigInt) {
    let pow = BigInt::one() << m;
    let s = &pow - 1;
    // (m - 2) * 2^{m-1} + 1 evaluated over Q so that m = 0 is handled exactly.
    let half_pow = BigRational::new(pow, BigInt::from(2));
    let t = BigRational::from_integer(BigInt::from(m as i64 - 2)) * half_pow + BigRational::one();
    debug_assert!(t.is_integer());
    (s, t.to_integer())
}

/// `C(n, k)`, zero for `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Precomputed `a_k`, `b_k` with the negative-index convention.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    zigzag: Vec<BigInt>,
    springer: Vec<BigInt>,
}

impl SequenceTable {
    pub fn new(len: usize) -> Self {
        SequenceTable {
            zigzag: zigzag_numbers(len),
            springer: springer_numbers(len),
        }
    }

    pub fn len(&self) -> usize {
        self.zigzag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zigzag.is_empty()
    }

    pub fn a(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.zigzag[k as usize].clone()
    }

    pub fn b(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.springer[k as usize].clone()
    }

    pub fn s(&self, m: i64) -> BigInt {
        if m < 0 {
            BigInt::zero()
        } else {
            aux_sequences(m as usize).0
        }
    }

    pub fn t(&self, m: i64) -> BigInt {
        if m < 0 {
            BigInt::zero()
        } else {
            aux_sequences(m as usize).1
        }
    }
}

fn pow2(e: i64) -> BigInt {
    debug_assert!(e >= 0);
    BigInt::one() << (e as usize)
}

fn betti_with(table: &SequenceTable, family: Family, n: usize, r: usize) -> BigInt {
    let r = r as i64;
    let ni = n as i64;
    match family {
        Family::A => binomial(n + 1, 2 * r) * table.a(2 * r),
        Family::B => {
            binomial(n, 2 * r) * table.b(2 * r) + binomial(n, 2 * r - 1) * table.b(2 * r - 1)
        }
        Family::C | Family::D => {
            let shift = if family == Family::C { 2 } else { 4 };
            let k = 2 * r - shift;
            let mut total = BigInt::zero();
            let c = binomial(n, k);
            if !c.is_zero() {
                let aux = if family == Family::C {
                    table.s(ni - k)
                } else {
                    table.t(ni - k)
                };
                total += c * pow2(k) * aux * table.a(k);
            }
            let c = binomial(n, 2 * r);
            if !c.is_zero() {
                total += c * (BigInt::from(2) * table.b(2 * r) - pow2(2 * r) * table.a(2 * r));
            }
            total
        }
    }
}

/// Largest `r` for which some term of the family's formula can be nonzero.
fn max_degree(family: Family, n: usize) -> usize {
    match family {
        Family::A => n.div_ceil(2),
        Family::B => n.div_ceil(2),
        Family::C => (n + 2) / 2,
        Family::D => (n + 4) / 2,
    }
}

fn table_for(n: usize) -> SequenceTable {
    SequenceTable::new(n + 3)
}

/// The `r`-th rational Betti number of the real toric variety.
pub fn betti_closed_form(family: Family, n: usize, r: usize) -> Result<BigInt> {
    family.check_rank(n)?;
    if r > max_degree(family, n) {
        return Ok(BigInt::zero());
    }
    Ok(betti_with(&table_for(n), family, n, r))
}

pub fn euler_char_closed_form(family: Family, n: usize) -> Result<BigInt> {
    Ok(closed_form_table(family, n)?.euler_char)
}

/// Full closed-form Betti row of one family and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormTable {
    pub family: Family,
    pub n: usize,
    /// `betti[r]`, trailing zeros removed.
    pub betti: Vec<BigInt>,
    pub euler_char: BigInt,
}

pub fn closed_form_table(family: Family, n: usize) -> Result<ClosedFormTable> {
    family.check_rank(n)?;
    let table = table_for(n);
    let mut betti: Vec<BigInt> = (0..=max_degree(family, n))
        .map(|r| betti_with(&table, family, n, r))
        .collect();
    while betti.len() > 1 && betti.last().is_some_and(|b| b.is_zero()) {
        betti.pop();
    }
    let euler_char = betti
        .iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (r, b)| if r.is_even() { acc + b } else { acc - b });
    debug_assert!(betti.iter().all(|b| !b.is_negative()));
    Ok(ClosedFormTable {
        family,
        n,
        betti,
        euler_char,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn published_sequences() {
        assert_eq!(ints(&zigzag_numbers(10)), tables::ZIGZAG.map(|x| x as i64).to_vec());
        assert_eq!(ints(&springer_numbers(10)), tables::SPRINGER.map(|x| x as i64).to_vec());
        assert_eq!(euler_zigzag(4), BigInt::from(5));
        assert_eq!(springer(9), BigInt::from(2873041));
    }

    #[test]
    fn aux_values() {
        let pairs: Vec<(i64, i64)> = (0..5)
            .map(|m| {
                let (s, t) = aux_sequences(m);
                (i64::try_from(s).unwrap(), i64::try_from(t).unwrap())
            })
            .collect();
        assert_eq!(pairs, vec![(0, 0), (1, 0), (3, 1), (7, 5), (15, 17)]);
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(11, 6), BigInt::from(462));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(betti_closed_form(Family::C, 3, 1).unwrap(), BigInt::from(13));
        assert_eq!(betti_closed_form(Family::D, 4, 2).unwrap(), BigInt::from(51));
        assert_eq!(betti_closed_form(Family::C, 11, 6).unwrap(), BigInt::from(569068544));
        assert_eq!(betti_closed_form(Family::B, 2, 1).unwrap(), BigInt::from(5));
        assert_eq!(euler_char_closed_form(Family::C, 4).unwrap(), BigInt::from(80));
        assert_eq!(euler_char_closed_form(Family::C, 5).unwrap(), BigInt::zero());
        assert_eq!(euler_char_closed_form(Family::D, 10).unwrap(), BigInt::from(-11101184));
        let a3 = closed_form_table(Family::A, 3).unwrap();
        assert_eq!(ints(&a3.betti), vec![1, 6, 5]);
    }

    #[test]
    fn rank_guards() {
        assert!(betti_closed_form(Family::C, 2, 0).is_err());
        assert!(betti_closed_form(Family::D, 3, 0).is_err());
        assert!(betti_closed_form(Family::B, 1, 0).is_err());
        assert!(betti_closed_form(Family::A, 0, 0).is_err());
        assert!(betti_closed_form(Family::A, 1, 0).is_ok());
    }

    #[test]
    fn published_rows() {
        for (family, rows) in [(Family::C, &tables::TYPE_C[..]), (Family::D, &tables::TYPE_D[..])] {
            for row in rows {
                let t = closed_form_table(family, row.n).unwrap();
                let expected: Vec<i64> = row.betti.iter().map(|&b| b as i64).collect();
                assert_eq!(ints(&t.betti), expected, "{family}{}", row.n);
                assert_eq!(t.euler_char, BigInt::from(row.euler_char));
            }
        }
    }
}
