//! Coxeter complexes of types C and D with signed-subset vertex labels, and
//! their mod-2 characteristic matrices.
//!
//! A chamber is indexed by a sign vector `μ` and a permutation `σ`; its rays
//! are the partial signed prefixes `{μ_1 σ(1), ..., μ_i σ(i)}`. For type D
//! the `(n-1)`-prefix is replaced by the two size-`n` labels that differ in
//! the sign of `σ(n)`.

use std::fmt;

use super::signed::SignedSubset;
use super::simplicial::{Face, SimplicialComplex};
use super::subset::Subset;
use crate::error::{Error, Result};
use crate::exactlinalg::{gf2_rank_rowspace, BitMatrix};
use crate::Family;

/// A Coxeter complex together with the code-to-vertex lookup table.
#[derive(Debug, Clone)]
pub struct CoxeterComplex {
    family: Family,
    n: usize,
    complex: SimplicialComplex<SignedSubset>,
    index_of_code: Vec<u32>,
}

impl CoxeterComplex {
    pub(crate) fn from_parts(family: Family, n: usize, complex: SimplicialComplex<SignedSubset>) -> Self {
        let mut index_of_code = vec![u32::MAX; 3usize.pow(n as u32)];
        for (j, label) in complex.labels().iter().enumerate() {
            index_of_code[label.code() as usize] = j as u32;
        }
        CoxeterComplex {
            family,
            n,
            complex,
            index_of_code,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complex(&self) -> &SimplicialComplex<SignedSubset> {
        &self.complex
    }

    pub fn vertex_index(&self, label: SignedSubset) -> Option<usize> {
        let code = label.code() as usize;
        self.index_of_code
            .get(code)
            .filter(|&&j| j != u32::MAX)
            .map(|&j| j as usize)
    }

    /// `family n vertex_count facet_count`.
    pub fn header(&self) -> String {
        format!(
            "{} {} {} {}",
            self.family,
            self.n,
            self.complex.num_vertices(),
            self.complex.facets().len()
        )
    }
}

impl fmt::Display for CoxeterComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}{}", self.family, self.n)
    }
}

pub fn is_vertex(family: Family, n: usize, label: SignedSubset) -> bool {
    let len = label.len();
    let in_range = label.support() >> n == 0 && len >= 1 && len <= n;
    match family {
        Family::D => in_range && len != n - 1,
        _ => in_range,
    }
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn build_coxeter_complex(family: Family, n: usize) -> Result<CoxeterComplex> {
    family.require_complex(n)?;
    let labels: Vec<SignedSubset> = SignedSubset::all(n)
        .filter(|&l| is_vertex(family, n, l))
        .collect();
    let mut index_of_code = vec![u32::MAX; 3usize.pow(n as u32)];
    for (j, l) in labels.iter().enumerate() {
        index_of_code[l.code() as usize] = j as u32;
    }
    let idx = |l: SignedSubset| index_of_code[l.code() as usize];
    let mut facets: Vec<Face> = Vec::new();
    for_each_permutation(n, |sigma| {
        for signs in 0u32..(1 << n) {
            // Prefix labels {μ_1 σ(1), ..., μ_i σ(i)}.
            let mut prefix = Vec::with_capacity(n);
            let (mut pos, mut neg) = (0u32, 0u32);
            for (k, &s) in sigma.iter().enumerate() {
                if signs >> k & 1 == 0 {
                    pos |= 1 << s;
                } else {
                    neg |= 1 << s;
                }
                prefix.push(SignedSubset::from_masks(pos, neg).unwrap());
            }
            let mut face: Face = match family {
                Family::C => prefix.iter().map(|&l| idx(l)).collect(),
                _ => {
                    let mut face: Face = prefix[..n - 2].iter().map(|&l| idx(l)).collect();
                    let last = prefix[n - 1];
                    face.push(idx(last.flip(sigma[n - 1] + 1)));
                    face.push(idx(last));
                    face
                }
            };
            debug_assert!(face.iter().all(|&v| v != u32::MAX));
            face.sort_unstable();
            facets.push(face);
        }
    });
    facets.sort_unstable();
    facets.dedup();
    let complex = SimplicialComplex::from_parts(labels, facets);
    Ok(CoxeterComplex {
        family,
        n,
        complex,
        index_of_code,
    })
}

/// Column of the characteristic matrix as a bit mask (bit `k - 1` is `e_k`).
pub(crate) fn lambda_mask(n: usize, label: SignedSubset) -> u32 {
    let full = ((1u64 << n) - 1) as u32;
    let top = 1u32 << (n - 1);
    let support = label.support();
    if label.len() < n {
        if support & top == 0 {
            support
        } else {
            full & !support
        }
    } else if label.pos_mask() & top != 0 {
        top | label.neg_mask()
    } else {
        top | label.pos_mask()
    }
}

/// The mod-2 ray generator of a vertex, as a 0/1 vector of length `n`.
pub fn lambda_mod2(family: Family, n: usize, label: SignedSubset) -> Result<Vec<u8>> {
    family.require_complex(n)?;
    if !is_vertex(family, n, label) {
        return Err(Error::InvalidVertex {
            family,
            n,
            label: label.to_string(),
        });
    }
    let mask = lambda_mask(n, label);
    Ok((0..n).map(|k| (mask >> k & 1) as u8).collect())
}

/// `n × m` matrix over GF(2) whose column `j` is the ray generator of vertex
/// `j` of the Coxeter complex.
#[derive(Debug, Clone)]
pub struct CharacteristicMatrix {
    family: Family,
    n: usize,
    matrix: BitMatrix,
}

impl CharacteristicMatrix {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.n).map(|i| self.matrix.get(i, j) as u8).collect()
    }

    pub fn rank(&self) -> usize {
        gf2_rank_rowspace(&self.matrix).rank
    }

    /// The element of the row space indexed by `s`: the GF(2) sum of the
    /// rows numbered by the elements of `s`, unpacked to one flag per vertex.
    pub fn row_sum(&self, s: Subset) -> Vec<bool> {
        let packed = self.matrix.row_sum(s.elements().into_iter().map(|i| i - 1));
        (0..self.cols())
            .map(|j| packed[j / 64] >> (j % 64) & 1 == 1)
            .collect()
    }
}

pub fn characteristic_matrix_of(k: &CoxeterComplex) -> CharacteristicMatrix {
    let n = k.n;
    let labels = k.complex.labels();
    let mut matrix = BitMatrix::zeros(n, labels.len());
    for (j, &l) in labels.iter().enumerate() {
        let mask = lambda_mask(n, l);
        for i in 0..n {
            if mask >> i & 1 == 1 {
                matrix.set(i, j, true);
            }
        }
    }
    CharacteristicMatrix {
        family: k.family,
        n,
        matrix,
    }
}

pub fn characteristic_matrix(family: Family, n: usize) -> Result<CharacteristicMatrix> {
    Ok(characteristic_matrix_of(&build_coxeter_complex(family, n)?))
}

/// The full subcomplex `K_S` on the vertices selected by the row-space
/// element indexed by `s`.
pub fn induced_subcomplex<L: Clone>(
    complex: &SimplicialComplex<L>,
    lambda: &CharacteristicMatrix,
    s: Subset,
) -> SimplicialComplex<L> {
    complex.induced(&lambda.row_sum(s))
}

fn parity(mask: u32) -> bool {
    mask.count_ones() % 2 == 1
}

/// `(V_1(S), V_2(S))` from the parity conditions on `I^±` and `I^-`,
/// evaluated without the characteristic matrix. `V_1` holds the labels with
/// `|I| < n`, `V_2` those with `|I| = n`.
pub fn vertex_partition_oracle(
    family: Family,
    n: usize,
    s: Subset,
) -> Result<(Vec<SignedSubset>, Vec<SignedSubset>)> {
    family.require_complex(n)?;
    let s_mask = s.mask();
    let n_bit = 1u32 << (n - 1);
    let n_in_s = s.contains(n);
    let odd = s.len() % 2 == 1;
    // V_1: |I^± ∩ T| odd, T = S △ {n} for |S| odd and T = S for |S| even.
    let t_small = if odd { s_mask ^ n_bit } else { s_mask };
    // V_2: parity of |I^- ∩ T'| in the four cases of |S| and n ∈ S.
    let (t_large, want_odd) = match (odd, n_in_s) {
        (true, false) => (s_mask | n_bit, true),
        (false, false) => (s_mask, true),
        (true, true) => (s_mask & !n_bit, false),
        (false, true) => (s_mask, false),
    };
    let mut v1 = Vec::new();
    let mut v2 = Vec::new();
    for label in SignedSubset::all(n).filter(|&l| is_vertex(family, n, l)) {
        if label.len() < n {
            if parity(label.support() & t_small) {
                v1.push(label);
            }
        } else if parity(label.neg_mask() & t_large) == want_odd {
            v2.push(label);
        }
    }
    Ok((v1, v2))
}

/// The involution `I ↦ I^{-n}` (|S| odd) or `I ↦ I^{-m}` with `m = min S`
/// (|S| even) relating `K_S` and `K_{S ∪ {n}}` for nonempty `S ⊆ [n-1]`.
/// The flipped coordinate must lie in `S` when `|S|` is even.
pub fn involution_phi(n: usize, s: Subset) -> impl Fn(SignedSubset) -> SignedSubset {
    let x = if s.len() % 2 == 1 { n } else { s.elements()[0] };
    move |label| label.flip(x)
}

/// The involution exchanging `±a` and `±n`, relating `K_S` and
/// `K_{S ∪ {a}}` for `|S|` odd and `a ∉ S`.
pub fn swap_psi(n: usize, a: usize) -> impl Fn(SignedSubset) -> SignedSubset {
    move |label| label.swap(a, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(e: &[i32]) -> SignedSubset {
        SignedSubset::from_elements(e).unwrap()
    }

    #[test]
    fn small_counts() {
        let c3 = build_coxeter_complex(Family::C, 3).unwrap();
        assert_eq!(c3.complex().num_vertices(), 26);
        assert_eq!(c3.complex().facets().len(), 48);
        assert_eq!(c3.complex().dimension(), 2);
        let d4 = build_coxeter_complex(Family::D, 4).unwrap();
        assert_eq!(d4.complex().num_vertices(), 48);
        assert_eq!(d4.complex().facets().len(), 192);
        assert_eq!(d4.complex().dimension(), 3);
        assert_eq!(c3.header(), "C 3 26 48");
    }

    #[test]
    fn rank_guards() {
        assert!(build_coxeter_complex(Family::C, 2).is_err());
        assert!(build_coxeter_complex(Family::D, 3).is_err());
        assert!(matches!(
            build_coxeter_complex(Family::A, 3),
            Err(Error::UnsupportedFamily(Family::A))
        ));
    }

    #[test]
    fn lambda_cases() {
        assert_eq!(lambda_mod2(Family::C, 3, ss(&[1, -2])).unwrap(), vec![1, 1, 0]);
        assert_eq!(lambda_mod2(Family::C, 3, ss(&[-3])).unwrap(), vec![1, 1, 0]);
        assert_eq!(lambda_mod2(Family::C, 3, ss(&[1, 2, 3])).unwrap(), vec![0, 0, 1]);
        assert_eq!(lambda_mod2(Family::C, 3, ss(&[1, 2, -3])).unwrap(), vec![1, 1, 1]);
        assert_eq!(lambda_mod2(Family::D, 4, ss(&[1, 2, -3, 4])).unwrap(), vec![0, 0, 1, 1]);
        assert!(matches!(
            lambda_mod2(Family::D, 4, ss(&[1, 2, 3])),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn matrix_shapes() {
        let l = characteristic_matrix(Family::C, 3).unwrap();
        assert_eq!((l.rows(), l.cols(), l.rank()), (3, 26, 3));
        let l = characteristic_matrix(Family::D, 4).unwrap();
        assert_eq!((l.rows(), l.cols(), l.rank()), (4, 48, 4));
    }

    #[test]
    fn induced_examples() {
        let k = build_coxeter_complex(Family::C, 3).unwrap();
        let l = characteristic_matrix_of(&k);
        let top = induced_subcomplex(k.complex(), &l, Subset::from_elements(&[3]));
        assert_eq!(top.num_vertices(), 8);
        assert!(top.facets().iter().all(|f| f.len() == 1));
        assert!(top.labels().iter().all(|v| v.len() == 3));
        assert!(induced_subcomplex(k.complex(), &l, Subset::EMPTY).is_empty());
        let one = induced_subcomplex(k.complex(), &l, Subset::from_elements(&[1]));
        assert_eq!(one.num_vertices(), 16);
        assert_eq!(one.labels().iter().filter(|v| v.len() == 3).count(), 4);
    }

    #[test]
    fn oracle_examples() {
        let (v1, v2) = vertex_partition_oracle(Family::C, 3, Subset::from_elements(&[1])).unwrap();
        assert_eq!((v1.len(), v2.len()), (12, 4));
        let (v1, v2) = vertex_partition_oracle(Family::C, 3, Subset::from_elements(&[3])).unwrap();
        assert_eq!((v1.len(), v2.len()), (0, 8));
        let (_, v2) = vertex_partition_oracle(Family::C, 4, Subset::from_elements(&[1, 2])).unwrap();
        assert_eq!(v2.len(), 8);
        assert!(v2.iter().all(|v| v.len() == 4 && (v.neg_mask() & 0b11).count_ones() == 1));
    }

    #[test]
    fn permutations_enumerated() {
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(4, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }
}
