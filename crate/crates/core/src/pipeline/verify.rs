//! Cross-checks between the closed forms, published tables and computed
//! homology. Failures are recorded in the report, not returned as errors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::classes::{class_size, expected_subcomplex_betti, orbit_classes, ClassTag};
use super::compute::{betti_real_toric, full_rank_lambda, load_or_build_complex, ComputeOptions};
use super::report::{Strategy, SubsetEntry};
use crate::complexes::{
    f_h_vector, induced_subcomplex, involution_phi, swap_psi, CharacteristicMatrix, CoxeterComplex, SignedSubset,
    Subset,
};
use crate::error::{Error, Result};
use crate::homology::Coefficients;
use crate::sequences::closed_form_table;
use crate::tables::lookup;
use crate::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Closed forms against the published tables.
    Quick,
    /// Everything, including homology of every subcomplex.
    Full,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::InvalidInput(format!("unknown level `{s}` (use quick or full)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn compare<T: PartialEq + fmt::Debug>(name: impl Into<String>, expected: T, actual: T) -> Check {
        Check {
            name: name.into(),
            pass: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        }
    }

    /// A check whose detail is a list of failing cases.
    pub fn no_failures(name: impl Into<String>, cases: usize, failures: Vec<String>) -> Check {
        Check {
            name: name.into(),
            expected: format!("{cases} cases pass"),
            pass: failures.is_empty(),
            actual: if failures.is_empty() {
                format!("{cases} cases pass")
            } else {
                failures.join("; ")
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub family: Family,
    pub n: usize,
    pub level: Level,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn as_bigints(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn vertex_set(k: &CoxeterComplex, lambda: &CharacteristicMatrix, s: Subset) -> BTreeSet<SignedSubset> {
    let flags = lambda.row_sum(s);
    k.complex()
        .labels()
        .iter()
        .zip(flags)
        .filter(|(_, f)| *f)
        .map(|(l, _)| *l)
        .collect()
}

/// Whether `map` sends the vertices of `K_S` onto those of `K_T` and the
/// facets of `K_S` onto the facets of `K_T`.
pub fn maps_subcomplex_onto(
    k: &CoxeterComplex,
    lambda: &CharacteristicMatrix,
    s: Subset,
    t: Subset,
    map: impl Fn(SignedSubset) -> SignedSubset,
) -> bool {
    let image: BTreeSet<SignedSubset> = vertex_set(k, lambda, s).into_iter().map(&map).collect();
    if image != vertex_set(k, lambda, t) {
        return false;
    }
    let mut mapped: Vec<Vec<SignedSubset>> = induced_subcomplex(k.complex(), lambda, s)
        .labeled_facets()
        .into_iter()
        .map(|f| {
            let mut g: Vec<SignedSubset> = f.into_iter().map(&map).collect();
            g.sort();
            g
        })
        .collect();
    mapped.sort();
    mapped == induced_subcomplex(k.complex(), lambda, t).labeled_facets()
}

/// Failures of the two explicit isomorphisms `S ↔ S ∪ {n}` and
/// `S ↔ S ∪ {a}` over all applicable `S`, with the number of cases.
pub fn symmetry_failures(k: &CoxeterComplex, lambda: &CharacteristicMatrix) -> (usize, Vec<String>) {
    let n = k.n();
    let mut cases = 0;
    let mut failures = Vec::new();
    for s in Subset::all(n - 1).filter(|s| !s.is_empty()) {
        cases += 1;
        if !maps_subcomplex_onto(k, lambda, s, s.with(n), involution_phi(n, s)) {
            failures.push(format!("phi: S={s}"));
        }
        if s.len() % 2 == 1 {
            for a in (1..n).filter(|&a| !s.contains(a)) {
                cases += 1;
                if !maps_subcomplex_onto(k, lambda, s, s.with(a), swap_psi(n, a)) {
                    failures.push(format!("psi: S={s}, a={a}"));
                }
            }
        }
    }
    (cases, failures)
}

/// Classes of `2^[n]` generated by `S ~ S ∪ {n}` (`S ⊆ [n-1]` nonempty),
/// `S ~ S ∪ {a}` (`S ⊆ [n-1]` odd, `a ∈ [n-1] \ S`) and the transpositions
/// of `[n-1]`, found by union-find.
pub fn brute_force_classes(n: usize) -> Vec<Vec<Subset>> {
    let size = 1usize << n;
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    };
    for s in Subset::all(n - 1) {
        if s.is_empty() {
            continue;
        }
        union(s.mask() as usize, s.with(n).mask() as usize);
        if s.len() % 2 == 1 {
            for a in (1..n).filter(|&a| !s.contains(a)) {
                union(s.mask() as usize, s.with(a).mask() as usize);
            }
        }
    }
    for s in Subset::all(n) {
        for i in 1..n - 1 {
            let (x, y) = (s.contains(i), s.contains(i + 1));
            let mut t = s.without(i).without(i + 1);
            if x {
                t = t.with(i + 1);
            }
            if y {
                t = t.with(i);
            }
            union(s.mask() as usize, t.mask() as usize);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
    for x in 0..size {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(Subset::from_mask(x as u32));
    }
    groups.into_values().collect()
}

fn quick_checks(family: Family, n: usize, checks: &mut Vec<Check>) -> Result<()> {
    let cf = closed_form_table(family, n)?;
    let alt = cf
        .betti
        .iter()
        .enumerate()
        .fold(BigInt::from(0), |acc, (r, b)| if r % 2 == 0 { acc + b } else { acc - b });
    checks.push(Check::compare("closed form: Euler characteristic", cf.euler_char.clone(), alt));
    if let Some(row) = lookup(family, n) {
        checks.push(Check::compare("closed form vs table: Betti", as_bigints(row.betti), cf.betti.clone()));
        checks.push(Check::compare(
            "closed form vs table: Euler characteristic",
            BigInt::from(row.euler_char),
            cf.euler_char.clone(),
        ));
    }
    if family.has_complex() && n % 2 == 1 {
        checks.push(Check::compare("closed form: odd rank has zero Euler characteristic", BigInt::from(0), cf.euler_char));
    }
    Ok(())
}

fn complex_checks(k: &CoxeterComplex, lambda: &CharacteristicMatrix, checks: &mut Vec<Check>) -> Result<()> {
    let (family, n) = (k.family(), k.n());
    let pow3 = 3u64.pow(n as u32) - 1;
    let pow2 = 1u64 << (n - 1);
    let fact: u64 = (1..=n as u64).product();
    let (vertices, facets) = match family {
        Family::C => (pow3, 2 * pow2 * fact),
        _ => (pow3 - n as u64 * pow2, pow2 * fact),
    };
    let c = k.complex();
    checks.push(Check::compare("complex: vertex count", vertices, c.num_vertices() as u64));
    checks.push(Check::compare("complex: facet count", facets, c.facets().len() as u64));
    checks.push(Check::compare("complex: pure pseudomanifold", true, c.is_pure() && c.is_pseudomanifold()));
    let (_, h) = f_h_vector(c)?;
    checks.push(Check::compare("complex: sum of h-vector equals facets", facets as i64, h.iter().sum::<i64>()));
    checks.push(Check::compare("characteristic matrix: GF(2) rank", n, lambda.rank()));
    Ok(())
}

fn per_subset_failures(
    entries: &[SubsetEntry],
    mut expected: impl FnMut(Subset) -> Result<crate::homology::BettiVector>,
) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for e in entries {
        let want = expected(e.subset)?;
        if !want.same_ranks(&e.betti) {
            failures.push(format!("S={}: expected {want}, got {}", e.subset, e.betti));
        }
    }
    Ok(failures)
}

pub fn verify(family: Family, n: usize, level: Level, options: &ComputeOptions) -> Result<VerificationReport> {
    family.check_rank(n)?;
    let mut checks = Vec::new();
    quick_checks(family, n, &mut checks)?;
    if level == Level::Full {
        family.require_complex(n)?;
        full_checks(family, n, options, &mut checks)?;
    }
    Ok(VerificationReport {
        family,
        n,
        level,
        checks,
    })
}

fn full_checks(family: Family, n: usize, options: &ComputeOptions, checks: &mut Vec<Check>) -> Result<()> {
    let k = load_or_build_complex(family, n, options.cache.as_ref())?;
    let lambda = full_rank_lambda(&k)?;
    complex_checks(&k, &lambda, checks)?;

    let cf = closed_form_table(family, n)?;
    let full = betti_real_toric(family, n, Coefficients::Q, Strategy::Full, options)?;
    let orbit = betti_real_toric(family, n, Coefficients::Q, Strategy::Orbit, options)?;
    let poset = betti_real_toric(family, n, Coefficients::Q, Strategy::Poset, options)?;
    for report in [&full, &orbit, &poset] {
        let s = report.strategy;
        checks.push(Check::compare(format!("{s} strategy vs closed form"), cf.betti.clone(), as_bigints(&report.betti)));
        checks.push(Check::compare(format!("{s} strategy: aggregation identity"), true, report.aggregation_holds()));
    }
    checks.push(Check::compare(
        "computed vs closed-form Euler characteristic",
        cf.euler_char.clone(),
        BigInt::from(full.euler_char),
    ));
    if let Some(row) = lookup(family, n) {
        checks.push(Check::compare("computed vs table Euler characteristic", row.euler_char, full.euler_char));
    }

    let failures = per_subset_failures(&full.per_subset, |s| expected_subcomplex_betti(family, n, s))?;
    checks.push(Check::no_failures("per-subset Betti vs closed form", full.per_subset.len(), failures));

    let classes = orbit_classes(family, n)?;
    let mut expected_groups: Vec<Vec<Subset>> = classes.iter().map(|c| c.members.clone()).collect();
    expected_groups.sort();
    let mut found = brute_force_classes(n);
    found.sort();
    checks.push(Check::compare("orbit classes vs enumeration", expected_groups, found));
    let sizes_ok = classes
        .iter()
        .all(|c| BigInt::from(c.members.len()) == class_size(n, c.tag));
    checks.push(Check::compare("orbit class sizes", true, sizes_ok));

    if family == Family::C {
        let (cases, failures) = symmetry_failures(&k, &lambda);
        checks.push(Check::no_failures("explicit isomorphisms phi, psi", cases, failures));
    }
    let mut failures = Vec::new();
    for c in &classes {
        let rep = full.subset(c.representative).expect("all subsets present");
        for &m in &c.members {
            if !full.subset(m).expect("all subsets present").same_ranks(rep) {
                failures.push(format!("S={m} differs from representative {}", c.representative));
            }
        }
    }
    checks.push(Check::no_failures("Betti vectors constant on orbit classes", 1 << n, failures));

    let mut failures = Vec::new();
    for c in classes.iter().filter(|c| matches!(c.tag, ClassTag::R(_))) {
        let (a, b) = (full.subset(c.representative), poset.subset(c.representative));
        if a.zip(b).is_none_or(|(a, b)| !a.same_ranks(b)) {
            failures.push(format!("{}: induced {:?} vs poset {:?}", c.tag, a.map(|v| v.to_string()), b.map(|v| v.to_string())));
        }
    }
    checks.push(Check::no_failures("reduced poset vs induced subcomplex", classes.len() - 2, failures));

    let integral = betti_real_toric(family, n, Coefficients::Z, Strategy::Full, options)?;
    checks.push(Check::compare("integral homology: torsion-free subcomplexes", 0, integral.torsion.len()));
    for report in [
        integral,
        betti_real_toric(family, n, Coefficients::Gf(2), Strategy::Full, options)?,
        betti_real_toric(family, n, Coefficients::Gf(3), Strategy::Full, options)?,
    ] {
        let failures = per_subset_failures(&report.per_subset, |s| Ok(full.subset(s).unwrap().clone()))?;
        checks.push(Check::no_failures(
            format!("{} ranks equal Q ranks per subset", report.coefficients),
            report.per_subset.len(),
            failures,
        ));
    }
    Ok(())
}
