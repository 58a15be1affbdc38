use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complexes::Subset;
use crate::error::{Error, Result};
use crate::homology::{BettiVector, Coefficients};
use crate::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Every subset's induced subcomplex.
    Full,
    /// One induced subcomplex per orbit class.
    Orbit,
    /// One reduced poset per orbit class.
    Poset,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Full => "full",
            Strategy::Orbit => "orbit",
            Strategy::Poset => "poset",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "full" => Ok(Strategy::Full),
            "orbit" => Ok(Strategy::Orbit),
            "poset" => Ok(Strategy::Poset),
            _ => Err(Error::InvalidInput(format!("unknown strategy `{s}` (use full, orbit or poset)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetEntry {
    pub subset: Subset,
    pub betti: BettiVector,
}

/// Nontrivial torsion of `H̃_degree(K_S; Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionEntry {
    pub subset: Subset,
    pub degree: isize,
    pub factors: Vec<BigInt>,
}

/// Betti numbers of the real toric variety with the per-subset data they
/// were aggregated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    pub family: Family,
    pub n: usize,
    pub coefficients: Coefficients,
    pub strategy: Strategy,
    /// `β^0, β^1, ...` without trailing zeros.
    pub betti: Vec<u64>,
    pub euler_char: i64,
    /// One entry per subset of `[n]`, in increasing bitmask order.
    pub per_subset: Vec<SubsetEntry>,
    pub torsion: Vec<TorsionEntry>,
    pub timings_ms: BTreeMap<String, u64>,
}

/// `β^r = Σ_S rank H̃^{r-1}(K_S)`.
pub fn aggregate<'a>(vectors: impl IntoIterator<Item = &'a BettiVector>) -> Vec<u64> {
    let mut betti: Vec<u64> = Vec::new();
    for v in vectors {
        for (r, &x) in v.ranks().iter().enumerate() {
            if betti.len() <= r {
                betti.resize(r + 1, 0);
            }
            betti[r] += x;
        }
    }
    while betti.last() == Some(&0) {
        betti.pop();
    }
    betti
}

pub fn alternating_sum(betti: &[u64]) -> i64 {
    betti
        .iter()
        .enumerate()
        .map(|(r, &b)| if r % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

impl BettiReport {
    pub fn subset(&self, s: Subset) -> Option<&BettiVector> {
        self.per_subset.iter().find(|e| e.subset == s).map(|e| &e.betti)
    }

    /// Recomputes the aggregation and the Euler characteristic.
    pub fn aggregation_holds(&self) -> bool {
        self.per_subset.len() == 1 << self.n
            && aggregate(self.per_subset.iter().map(|e| &e.betti)) == self.betti
            && alternating_sum(&self.betti) == self.euler_char
    }

    /// Whether `betti` equals the closed-form row of the same family and rank.
    pub fn matches_closed_form(&self) -> Result<bool> {
        let cf = crate::sequences::closed_form_table(self.family, self.n)?;
        Ok(cf.betti.len() == self.betti.len() && cf.betti.iter().zip(&self.betti).all(|(a, &b)| *a == BigInt::from(b)))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&ReportJson::from(self))?)
    }

    pub fn from_json(text: &str) -> Result<BettiReport> {
        serde_json::from_str::<ReportJson>(text)?.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct SubsetJson {
    #[serde(rename = "S")]
    s: Subset,
    ranks: BTreeMap<i64, u64>,
}

#[derive(Serialize, Deserialize)]
struct TorsionJson {
    #[serde(rename = "S")]
    s: Subset,
    degree: i64,
    factors: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    family: Family,
    n: usize,
    coefficients: Coefficients,
    strategy: Strategy,
    betti: Vec<u64>,
    euler_char: i64,
    per_subset: Vec<SubsetJson>,
    torsion: Vec<TorsionJson>,
    timings_ms: BTreeMap<String, u64>,
}

impl From<&BettiReport> for ReportJson {
    fn from(r: &BettiReport) -> Self {
        ReportJson {
            family: r.family,
            n: r.n,
            coefficients: r.coefficients,
            strategy: r.strategy,
            betti: r.betti.clone(),
            euler_char: r.euler_char,
            per_subset: r
                .per_subset
                .iter()
                .map(|e| SubsetJson {
                    s: e.subset,
                    ranks: e.betti.nonzero().into_iter().map(|(d, x)| (d as i64, x)).collect(),
                })
                .collect(),
            torsion: r
                .torsion
                .iter()
                .map(|t| TorsionJson {
                    s: t.subset,
                    degree: t.degree as i64,
                    factors: t.factors.iter().map(|f| f.to_string()).collect(),
                })
                .collect(),
            timings_ms: r.timings_ms.clone(),
        }
    }
}

impl TryFrom<ReportJson> for BettiReport {
    type Error = Error;

    fn try_from(j: ReportJson) -> Result<Self> {
        let coefficients = j.coefficients;
        let per_subset = j
            .per_subset
            .into_iter()
            .map(|e| {
                let map = e.ranks.into_iter().map(|(d, x)| (d as isize, x)).collect();
                Ok(SubsetEntry {
                    subset: e.s,
                    betti: BettiVector::from_map(coefficients, &map)?,
                })
            })
            .collect::<Result<_>>()?;
        let torsion = j
            .torsion
            .into_iter()
            .map(|t| {
                let factors = t
                    .factors
                    .iter()
                    .map(|f| f.parse().map_err(|_| Error::InvalidInput(format!("bad torsion factor `{f}`"))))
                    .collect::<Result<_>>()?;
                Ok(TorsionEntry {
                    subset: t.s,
                    degree: t.degree as isize,
                    factors,
                })
            })
            .collect::<Result<_>>()?;
        Ok(BettiReport {
            family: j.family,
            n: j.n,
            coefficients,
            strategy: j.strategy,
            betti: j.betti,
            euler_char: j.euler_char,
            per_subset,
            torsion,
            timings_ms: j.timings_ms,
        })
    }
}
