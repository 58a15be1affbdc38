use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::cache::{Cache, Source, SubsetHomology};
use super::classes::{orbit_classes, ClassTag};
use super::report::{aggregate, alternating_sum, BettiReport, Strategy, SubsetEntry, TorsionEntry};
use crate::complexes::{
    build_coxeter_complex, characteristic_matrix_of, induced_subcomplex, reduced_poset_complex, CharacteristicMatrix,
    CoxeterComplex, SimplicialComplex, Subset,
};
use crate::error::{Error, Result};
use crate::homology::{betti_reduced, integral_homology, Coefficients};
use crate::Family;

#[derive(Debug, Clone, Default)]
pub struct ComputeOptions {
    /// Worker threads; `None` uses one per core.
    pub jobs: Option<usize>,
    pub cache: Option<Cache>,
}

impl ComputeOptions {
    pub fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            None => Ok(f()),
            Some(j) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Error::InvalidInput(format!("cannot start {j} worker threads: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

pub fn load_or_build_complex(family: Family, n: usize, cache: Option<&Cache>) -> Result<CoxeterComplex> {
    if let Some(k) = cache.and_then(|c| c.load_complex(family, n)) {
        return Ok(k);
    }
    let k = build_coxeter_complex(family, n)?;
    if let Some(c) = cache {
        c.store_complex(&k)?;
    }
    Ok(k)
}

/// The characteristic matrix, checked to have full rank `n` so that its row
/// space is indexed by all subsets of `[n]`.
pub fn full_rank_lambda(k: &CoxeterComplex) -> Result<CharacteristicMatrix> {
    let lambda = characteristic_matrix_of(k);
    if lambda.rank() != k.n() {
        return Err(Error::InvalidInput(format!(
            "characteristic matrix of {}{} has rank {} over GF(2), expected {}",
            k.family(),
            k.n(),
            lambda.rank(),
            k.n()
        )));
    }
    Ok(lambda)
}

pub fn homology_of<L: Clone>(k: &SimplicialComplex<L>, coefficients: Coefficients) -> Result<SubsetHomology> {
    if coefficients.is_field() {
        Ok(SubsetHomology {
            betti: betti_reduced(k, coefficients)?,
            torsion: BTreeMap::new(),
        })
    } else {
        let h = integral_homology(k);
        Ok(SubsetHomology {
            betti: h.betti(),
            torsion: h.torsion,
        })
    }
}

/// Homology of `K_S`, or of the reduced poset standing in for it.
pub fn subset_homology(
    k: &CoxeterComplex,
    lambda: &CharacteristicMatrix,
    s: Subset,
    source: Source,
    coefficients: Coefficients,
    cache: Option<&Cache>,
) -> Result<SubsetHomology> {
    if let Some(h) = cache.and_then(|c| c.load_homology(k, s, source, coefficients)) {
        return Ok(h);
    }
    let h = match source {
        Source::Induced => homology_of(&induced_subcomplex(k.complex(), lambda, s), coefficients)?,
        Source::Poset => match ClassTag::of(k.n(), s) {
            ClassTag::R(r) if s == ClassTag::R(r).representative(k.n()) => {
                homology_of(reduced_poset_complex(k.family(), k.n(), r)?.order_complex(), coefficients)?
            }
            _ => {
                return Err(Error::InvalidInput(format!(
                    "no reduced poset for S = {s} in {}{}",
                    k.family(),
                    k.n()
                )))
            }
        },
    };
    if let Some(c) = cache {
        c.store_homology(k, s, source, &h)?;
    }
    Ok(h)
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Betti numbers of the real toric variety of type `family` and rank `n`,
/// aggregated over the subcomplexes `K_S`.
pub fn betti_real_toric(
    family: Family,
    n: usize,
    coefficients: Coefficients,
    strategy: Strategy,
    options: &ComputeOptions,
) -> Result<BettiReport> {
    family.require_complex(n)?;
    if strategy == Strategy::Poset && !coefficients.is_field() {
        return Err(Error::Unsupported(
            "the poset strategy needs field coefficients (q or gfP)".into(),
        ));
    }
    let total = Instant::now();
    let cache = options.cache.as_ref();
    let k = load_or_build_complex(family, n, cache)?;
    let lambda = full_rank_lambda(&k)?;
    let complex_ms = millis(total);

    // (subset to evaluate, source, members sharing its result)
    let tasks: Vec<(Subset, Source, Vec<Subset>)> = match strategy {
        Strategy::Full => Subset::all(n).map(|s| (s, Source::Induced, vec![s])).collect(),
        Strategy::Orbit | Strategy::Poset => orbit_classes(family, n)?
            .into_iter()
            .map(|c| {
                let source = match (strategy, c.tag) {
                    (Strategy::Poset, ClassTag::R(_)) => Source::Poset,
                    _ => Source::Induced,
                };
                (c.representative, source, c.members)
            })
            .collect(),
    };
    let start = Instant::now();
    let results: Vec<SubsetHomology> = options.run(|| {
        tasks
            .par_iter()
            .map(|(s, source, _)| subset_homology(&k, &lambda, *s, *source, coefficients, cache))
            .collect::<Result<Vec<_>>>()
    })??;
    let homology_ms = millis(start);

    let mut per_subset = Vec::with_capacity(1 << n);
    let mut torsion = Vec::new();
    for ((_, _, members), h) in tasks.iter().zip(&results) {
        for &m in members {
            per_subset.push(SubsetEntry {
                subset: m,
                betti: h.betti.clone(),
            });
            for (&degree, factors) in &h.torsion {
                torsion.push(TorsionEntry {
                    subset: m,
                    degree,
                    factors: factors.clone(),
                });
            }
        }
    }
    per_subset.sort_by_key(|e| e.subset);
    torsion.sort_by_key(|t| (t.subset, t.degree));
    let betti = aggregate(per_subset.iter().map(|e| &e.betti));
    let euler_char = alternating_sum(&betti);
    let timings_ms = BTreeMap::from([
        ("complex".to_string(), complex_ms),
        ("homology".to_string(), homology_ms),
        ("total".to_string(), millis(total)),
    ]);
    let report = BettiReport {
        family,
        n,
        coefficients,
        strategy,
        betti,
        euler_char,
        per_subset,
        torsion,
        timings_ms,
    };
    debug_assert!(report.aggregation_holds());
    Ok(report)
}
