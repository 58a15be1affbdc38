//! On-disk cache for Coxeter complexes and per-subset homology.
//!
//! Complexes are stored in the text format of
//! [`crate::complexes::cache_format`]. Each subset result is a JSON sidecar
//! carrying the header line of the complex it was computed from; a sidecar
//! whose header differs from the current complex is ignored. Files are
//! written to a temporary name and renamed into place, so concurrent writers
//! never expose partial files.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complexes::cache_format::{read_complex, write_complex};
use crate::complexes::{CoxeterComplex, Subset};
use crate::error::{Error, Result};
use crate::homology::{BettiVector, Coefficients};
use crate::Family;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "REALTORIC_CACHE_DIR";

/// Which complex a subset result was computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// The induced subcomplex `K_S`.
    Induced,
    /// The order complex of the reduced poset.
    Poset,
}

/// Homology of one subcomplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetHomology {
    pub betti: BettiVector,
    pub torsion: BTreeMap<isize, Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    header: String,
    subset: Subset,
    source: Source,
    coefficients: Coefficients,
    ranks: BTreeMap<i64, u64>,
    torsion: BTreeMap<i64, Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$REALTORIC_CACHE_DIR`, else `$XDG_CACHE_HOME/realtoric`, else
    /// `$HOME/.cache/realtoric`.
    pub fn default_dir() -> Option<PathBuf> {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        var(CACHE_DIR_ENV)
            .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("realtoric")))
            .or_else(|| var("HOME").map(|d| d.join(".cache").join("realtoric")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn complex_path(&self, family: Family, n: usize) -> PathBuf {
        self.dir.join(format!("complex-{family}{n}.txt"))
    }

    fn sidecar_path(&self, family: Family, n: usize, s: Subset, source: Source, coeff: Coefficients) -> PathBuf {
        let coeff = match coeff {
            Coefficients::Q => "q".to_string(),
            Coefficients::Z => "z".to_string(),
            Coefficients::Gf(p) => format!("gf{p}"),
        };
        let source = match source {
            Source::Induced => "induced",
            Source::Poset => "poset",
        };
        self.dir
            .join(format!("homology-{family}{n}-{source}-{coeff}-{:x}.json", s.mask()))
    }

    fn write_atomic(&self, path: &Path, contents: &[u8]) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(contents)?;
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    /// A cached complex, or `None` if absent or unreadable.
    pub fn load_complex(&self, family: Family, n: usize) -> Option<CoxeterComplex> {
        let text = fs::read_to_string(self.complex_path(family, n)).ok()?;
        read_complex(&text)
            .ok()
            .filter(|k| k.family() == family && k.n() == n)
    }

    pub fn store_complex(&self, k: &CoxeterComplex) -> Result<()> {
        let path = self.complex_path(k.family(), k.n());
        if path.exists() && self.load_complex(k.family(), k.n()).is_some() {
            return Ok(());
        }
        self.write_atomic(&path, write_complex(k).as_bytes())
    }

    pub fn load_homology(
        &self,
        k: &CoxeterComplex,
        s: Subset,
        source: Source,
        coeff: Coefficients,
    ) -> Option<SubsetHomology> {
        let path = self.sidecar_path(k.family(), k.n(), s, source, coeff);
        let side: Sidecar = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
        if side.header != k.header() || side.subset != s || side.source != source || side.coefficients != coeff {
            return None;
        }
        let ranks = side.ranks.iter().map(|(&d, &r)| (d as isize, r)).collect();
        let torsion = side
            .torsion
            .iter()
            .map(|(&d, f)| Some((d as isize, f.iter().map(|x| x.parse().ok()).collect::<Option<Vec<BigInt>>>()?)))
            .collect::<Option<_>>()?;
        Some(SubsetHomology {
            betti: BettiVector::from_map(coeff, &ranks).ok()?,
            torsion,
        })
    }

    pub fn store_homology(
        &self,
        k: &CoxeterComplex,
        s: Subset,
        source: Source,
        h: &SubsetHomology,
    ) -> Result<()> {
        let coeff = h.betti.coefficients;
        let path = self.sidecar_path(k.family(), k.n(), s, source, coeff);
        if self.load_homology(k, s, source, coeff).is_some() {
            return Ok(());
        }
        let side = Sidecar {
            header: k.header(),
            subset: s,
            source,
            coefficients: coeff,
            ranks: h.betti.nonzero().into_iter().map(|(d, r)| (d as i64, r)).collect(),
            torsion: h
                .torsion
                .iter()
                .map(|(&d, f)| (d as i64, f.iter().map(|x| x.to_string()).collect()))
                .collect(),
        };
        self.write_atomic(&path, serde_json::to_string_pretty(&side)?.as_bytes())
    }
}
