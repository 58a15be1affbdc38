//! Reduced simplicial homology over Q, GF(p) and Z.
//!
//! The chain complex is augmented: the empty face spans degree −1 and every
//! vertex maps to it, so the empty complex has rank 1 in degree −1 and every
//! nonempty complex has rank 0 there. Homology is computed; over a field,
//! and over Z for torsion-free complexes, the cohomology ranks coincide, and
//! over Z the torsion of `H^k` is that of `H_{k-1}`. Reports label these
//! numbers as cohomology of the complex.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complexes::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactlinalg::{reduce_columns, smith_normal_form, RankField, SparseIntMatrix};
use crate::scalar::is_prime;

/// Complexes up to this many faces get a `∂∂ = 0` check when built.
pub const BOUNDARY_CHECK_LIMIT: usize = 100_000;

/// Coefficient ring of a homology computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Q,
    Gf(u64),
    Z,
}

impl Coefficients {
    /// The field for rank computations, or `None` for Z.
    pub fn field(self) -> Option<RankField> {
        match self {
            Coefficients::Q => Some(RankField::Rational),
            Coefficients::Gf(p) => Some(RankField::Prime(p)),
            Coefficients::Z => None,
        }
    }

    pub fn is_field(self) -> bool {
        self.field().is_some()
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Q => f.write_str("Q"),
            Coefficients::Gf(p) => write!(f, "GF({p})"),
            Coefficients::Z => f.write_str("Z"),
        }
    }
}

/// Accepts `q`, `z`, `gfP` and `GF(P)` for a prime `P`, case-insensitively.
impl FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "q" => return Ok(Coefficients::Q),
            "z" => return Ok(Coefficients::Z),
            _ => {}
        }
        let digits = lower
            .strip_prefix("gf(")
            .and_then(|d| d.strip_suffix(')'))
            .or_else(|| lower.strip_prefix("gf"));
        let p: u64 = digits
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::InvalidInput(format!("unknown coefficients `{s}` (use q, z or gfP)")))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Coefficients::Gf(p))
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The augmented chain complex of a simplicial complex.
#[derive(Debug, Clone)]
pub struct ChainComplexData {
    /// Entry `k + 1` lists the faces of degree `k`; entry 0 is the empty face.
    faces: Vec<Vec<Face>>,
    /// Entry `k` is `∂_k : C_k → C_{k-1}` for `k ≥ 0`.
    boundaries: Vec<SparseIntMatrix<i64>>,
}

impl ChainComplexData {
    /// Highest degree with faces, −1 for the empty complex.
    pub fn top_degree(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn faces(&self, degree: isize) -> &[Face] {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.faces.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn num_faces(&self, degree: isize) -> usize {
        self.faces(degree).len()
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// `∂_k`, or `None` above the top degree or below 0.
    pub fn boundary(&self, degree: isize) -> Option<&SparseIntMatrix<i64>> {
        usize::try_from(degree).ok().and_then(|k| self.boundaries.get(k))
    }

    /// `Σ_{k ≥ -1} (-1)^k f_k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        (-1..=self.top_degree())
            .map(|k| if k.rem_euclid(2) == 0 { 1 } else { -1 } * self.num_faces(k) as i64)
            .sum()
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

pub fn build_chain_complex<L: Clone>(k: &SimplicialComplex<L>) -> ChainComplexData {
    let mut faces = vec![vec![Vec::new()]];
    faces.extend(k.faces_by_dimension());
    let mut boundaries = Vec::with_capacity(faces.len() - 1);
    for d in 1..faces.len() {
        let index: HashMap<&[u32], u32> = faces[d - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i as u32))
            .collect();
        let columns = faces[d]
            .iter()
            .map(|f| {
                let mut col: Vec<(u32, i64)> = (0..f.len())
                    .map(|i| {
                        let facet: Face = f.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        (index[facet.as_slice()], sign)
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        boundaries.push(SparseIntMatrix::from_columns(faces[d - 1].len(), columns));
    }
    let data = ChainComplexData { faces, boundaries };
    if data.total_faces() <= BOUNDARY_CHECK_LIMIT {
        assert!(data.boundary_squares_to_zero(), "boundary of boundary is nonzero");
    }
    data
}

/// Reduced Betti numbers by degree, starting at degree −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    pub coefficients: Coefficients,
    /// Entry `i` is the rank in degree `i - 1`; trailing zeros are trimmed.
    ranks: Vec<u64>,
}

impl BettiVector {
    pub fn from_ranks(coefficients: Coefficients, mut ranks: Vec<u64>) -> Self {
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        BettiVector { coefficients, ranks }
    }

    /// Nonzero ranks keyed by degree.
    pub fn from_map(coefficients: Coefficients, map: &BTreeMap<isize, u64>) -> Result<Self> {
        let top = map.keys().next_back().copied().unwrap_or(-1);
        let mut ranks = vec![0; (top + 2).max(0) as usize];
        for (&d, &r) in map {
            if d < -1 {
                return Err(Error::InvalidInput(format!("degree {d} below -1")));
            }
            ranks[(d + 1) as usize] = r;
        }
        Ok(Self::from_ranks(coefficients, ranks))
    }

    pub fn rank(&self, degree: isize) -> u64 {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.ranks.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Ranks from degree −1 upward.
    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn nonzero(&self) -> BTreeMap<isize, u64> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .map(|(i, &r)| (i as isize - 1, r))
            .collect()
    }

    pub fn same_ranks(&self, other: &BettiVector) -> bool {
        self.ranks == other.ranks
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.nonzero()
            .iter()
            .map(|(&d, &r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero().iter().map(|(d, r)| format!("{d}: {r}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn betti_from_ranks(data: &ChainComplexData, coefficients: Coefficients, boundary_ranks: &[usize]) -> BettiVector {
    // boundary_ranks[k] = rank ∂_k, with ∂ above the top degree zero.
    let rk = |k: isize| usize::try_from(k).ok().and_then(|k| boundary_ranks.get(k)).copied().unwrap_or(0);
    let ranks = (-1..=data.top_degree())
        .map(|k| (data.num_faces(k) - rk(k) - rk(k + 1)) as u64)
        .collect();
    BettiVector::from_ranks(coefficients, ranks)
}

/// Ranks of `∂_k` for all `k`, from the top degree down. Columns of `∂_k`
/// indexed by pivot rows of the reduced `∂_{k+1}` are skipped: each is a
/// combination of earlier columns.
fn boundary_ranks(data: &ChainComplexData, field: RankField) -> Result<Vec<usize>> {
    let count = data.boundaries.len();
    let mut ranks = vec![0; count];
    let mut skip: Option<Vec<bool>> = None;
    for k in (0..count).rev() {
        let m = &data.boundaries[k];
        let red = reduce_columns(m, field, skip.as_deref())?;
        ranks[k] = red.rank;
        let mut next = vec![false; m.rows()];
        for &r in &red.pivot_rows {
            next[r as usize] = true;
        }
        skip = Some(next);
    }
    Ok(ranks)
}

pub fn betti_of_chain_complex(data: &ChainComplexData, coefficients: Coefficients) -> Result<BettiVector> {
    match coefficients.field() {
        Some(field) => {
            let ranks = boundary_ranks(data, field)?;
            Ok(betti_from_ranks(data, coefficients, &ranks))
        }
        None => Ok(integral_homology_of_chain_complex(data).betti()),
    }
}

/// Reduced Betti numbers over `Q` or `GF(p)`; `Z` gives the free ranks.
pub fn betti_reduced<L: Clone>(k: &SimplicialComplex<L>, coefficients: Coefficients) -> Result<BettiVector> {
    betti_of_chain_complex(&build_chain_complex(k), coefficients)
}

/// Free ranks and torsion invariant factors per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralHomology {
    /// Entry `i` is the free rank in degree `i - 1`, trailing zeros trimmed.
    ranks: Vec<u64>,
    /// Degrees with nonzero torsion and their invariant factors `> 1`.
    pub torsion: BTreeMap<isize, Vec<BigInt>>,
}

impl IntegralHomology {
    pub fn betti(&self) -> BettiVector {
        BettiVector::from_ranks(Coefficients::Z, self.ranks.clone())
    }

    pub fn rank(&self, degree: isize) -> u64 {
        self.betti().rank(degree)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

pub fn integral_homology_of_chain_complex(data: &ChainComplexData) -> IntegralHomology {
    let snfs: Vec<_> = data.boundaries.iter().map(smith_normal_form).collect();
    let ranks: Vec<usize> = snfs.iter().map(|s| s.rank).collect();
    let betti = betti_from_ranks(data, Coefficients::Z, &ranks);
    let mut torsion = BTreeMap::new();
    // Torsion of H_k sits in the cokernel of ∂_{k+1}.
    for (j, snf) in snfs.iter().enumerate() {
        let t = snf.torsion();
        if !t.is_empty() {
            torsion.insert(j as isize - 1, t);
        }
    }
    IntegralHomology {
        ranks: betti.ranks,
        torsion,
    }
}

pub fn integral_homology<L: Clone>(k: &SimplicialComplex<L>) -> IntegralHomology {
    integral_homology_of_chain_complex(&build_chain_complex(k))
}
