use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// Sorted vertex indices of one simplex.
pub type Face = Vec<u32>;

/// A finite abstract simplicial complex given by its facets.
///
/// Faces are the downward closure of the facet list. Facets form an
/// antichain; a vertex that lies in no larger simplex is stored as a
/// singleton facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex<L = super::SignedSubset> {
    labels: Vec<L>,
    facets: Vec<Face>,
}

impl<L: Clone> SimplicialComplex<L> {
    /// Builds a complex from arbitrary generating simplices: duplicates and
    /// non-maximal simplices are dropped and uncovered vertices become
    /// singleton facets.
    pub fn new(labels: Vec<L>, simplices: Vec<Face>) -> Result<Self> {
        let m = labels.len();
        let mut facets = Vec::with_capacity(simplices.len());
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if let Some(&v) = s.iter().find(|&&v| v as usize >= m) {
                return Err(Error::InvalidInput(format!(
                    "vertex index {v} out of range for {m} vertices"
                )));
            }
            if !s.is_empty() {
                facets.push(s);
            }
        }
        let mut facets = maximal_faces(facets, m);
        let mut covered = vec![false; m];
        for f in &facets {
            for &v in f {
                covered[v as usize] = true;
            }
        }
        for (v, c) in covered.iter().enumerate() {
            if !c {
                facets.push(vec![v as u32]);
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { labels, facets })
    }

    /// Trusted constructor for facet lists that are already sorted antichains
    /// covering every vertex.
    pub(crate) fn from_parts(labels: Vec<L>, mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        SimplicialComplex { labels, facets }
    }

    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
        }
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Maximum facet size minus one; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// Every facet has the same size and every codimension-one face lies in
    /// exactly two facets.
    pub fn is_pseudomanifold(&self) -> bool {
        if !self.is_pure() || self.facets.is_empty() {
            return false;
        }
        let mut ridges: HashMap<Face, u32> = HashMap::new();
        for f in &self.facets {
            for skip in 0..f.len() {
                let ridge: Face = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *ridges.entry(ridge).or_default() += 1;
            }
        }
        ridges.values().all(|&c| c == 2)
    }

    /// All faces grouped by dimension: entry `k` holds the sorted list of
    /// `k`-dimensional faces (`k + 1` vertices). The empty face is omitted.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Face>> {
        let top = self.dimension();
        if top < 0 {
            return Vec::new();
        }
        let mut out: Vec<Vec<Face>> = vec![Vec::new(); top as usize + 1];
        for f in &self.facets {
            let k = f.len();
            for mask in 1u32..(1u32 << k) {
                let face: Face = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                out[face.len() - 1].push(face);
            }
        }
        for level in &mut out {
            level.sort_unstable();
            level.dedup();
        }
        out
    }

    /// `(f_{-1}, f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![1u64];
        f.extend(self.faces_by_dimension().iter().map(|l| l.len() as u64));
        f
    }

    /// The full subcomplex on the vertices for which `keep` holds. Vertices
    /// are renumbered in their original order.
    pub fn induced(&self, keep: &[bool]) -> SimplicialComplex<L> {
        assert_eq!(keep.len(), self.labels.len());
        let mut renumber = vec![u32::MAX; keep.len()];
        let mut labels = Vec::new();
        for (v, &k) in keep.iter().enumerate() {
            if k {
                renumber[v] = labels.len() as u32;
                labels.push(self.labels[v].clone());
            }
        }
        let mut traces: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            let t: Face = f
                .iter()
                .filter(|&&v| keep[v as usize])
                .map(|&v| renumber[v as usize])
                .collect();
            if !t.is_empty() {
                traces.insert(t);
            }
        }
        let facets = maximal_faces(traces.into_iter().collect(), labels.len());
        SimplicialComplex::from_parts(labels, facets)
    }

    pub fn map_labels<M, F: FnMut(&L) -> M>(&self, f: F) -> SimplicialComplex<M> {
        SimplicialComplex {
            labels: self.labels.iter().map(f).collect(),
            facets: self.facets.clone(),
        }
    }

    /// Facets as sets of labels, for comparing complexes up to relabeling.
    pub fn labeled_facets(&self) -> Vec<Vec<L>>
    where
        L: Ord,
    {
        let mut out: Vec<Vec<L>> = self
            .facets
            .iter()
            .map(|f| {
                let mut s: Vec<L> = f.iter().map(|&v| self.labels[v as usize].clone()).collect();
                s.sort();
                s
            })
            .collect();
        out.sort();
        out
    }

    /// Checks the facet-list invariants.
    pub fn validate(&self) -> Result<()> {
        let m = self.labels.len();
        let mut covered = vec![false; m];
        for f in &self.facets {
            if f.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput(format!("facet {f:?} is not strictly sorted")));
            }
            for &v in f {
                if v as usize >= m {
                    return Err(Error::InvalidInput(format!("vertex {v} out of range")));
                }
                covered[v as usize] = true;
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(Error::InvalidInput("uncovered vertex".into()));
        }
        if maximal_faces(self.facets.clone(), m).len() != self.facets.len() {
            return Err(Error::InvalidInput("facet list is not an antichain".into()));
        }
        Ok(())
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.by_ref().any(|w| w == v))
}

/// Keeps the inclusion-maximal members of a family of sorted simplices.
fn maximal_faces(mut faces: Vec<Face>, num_vertices: usize) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    let mut containing: Vec<Vec<u32>> = vec![Vec::new(); num_vertices];
    for (i, f) in faces.iter().enumerate() {
        for &v in f {
            containing[v as usize].push(i as u32);
        }
    }
    faces
        .iter()
        .filter(|f| {
            let Some(&pivot) = f.iter().min_by_key(|&&v| containing[v as usize].len()) else {
                return false;
            };
            !containing[pivot as usize].iter().any(|&j| {
                let g = &faces[j as usize];
                g.len() > f.len() && is_subset(f, g)
            })
        })
        .cloned()
        .collect()
}

/// `(f-vector, h-vector)` of a pure complex.
///
/// `h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` with `d` the facet size.
pub fn f_h_vector<L: Clone>(complex: &SimplicialComplex<L>) -> Result<(Vec<u64>, Vec<i64>)> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let f = complex.f_vector();
    let d = f.len() - 1;
    let binom = |n: usize, k: usize| -> i64 {
        let mut acc: i64 = 1;
        for i in 0..k {
            acc = acc * (n - i) as i64 / (i + 1) as i64;
        }
        acc
    };
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom(d - i, k - i) * f[i] as i64
                })
                .sum()
        })
        .collect();
    Ok((f, h))
}
