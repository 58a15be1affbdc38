//! Finite posets and their order complexes.

use super::coxeter::vertex_partition_oracle;
use super::signed::SignedSubset;
use super::simplicial::{Face, SimplicialComplex};
use super::subset::Subset;
use crate::error::{Error, Result};
use crate::Family;

type Bits = Vec<u64>;

fn bit(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn ones(bits: &Bits) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

/// A strict partial order with its order complex (simplices are chains).
#[derive(Debug, Clone)]
pub struct PosetComplex<L = SignedSubset> {
    elements: Vec<L>,
    above: Vec<Bits>,
    order_complex: SimplicialComplex<L>,
}

impl<L: Clone> PosetComplex<L> {
    /// Builds from the full strict order `less(x, y)`, which must be
    /// irreflexive and transitive.
    pub fn from_relation(elements: Vec<L>, less: impl Fn(&L, &L) -> bool) -> Result<Self> {
        let m = elements.len();
        let words = m.div_ceil(64).max(1);
        let mut above = vec![vec![0u64; words]; m];
        let mut has_below = vec![false; m];
        for i in 0..m {
            if less(&elements[i], &elements[i]) {
                return Err(Error::InvalidInput(format!("relation is not irreflexive at element {i}")));
            }
            for j in 0..m {
                if i != j && less(&elements[i], &elements[j]) {
                    set_bit(&mut above[i], j);
                    has_below[j] = true;
                }
            }
        }
        for i in 0..m {
            for j in ones(&above[i]) {
                if above[j].iter().zip(&above[i]).any(|(a, b)| a & !b != 0) {
                    return Err(Error::InvalidInput(format!(
                        "relation is not transitive through elements {i} < {j}"
                    )));
                }
            }
        }
        // Covers: above(x) minus everything above something above x.
        let covers: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                let mut reach = vec![0u64; words];
                for j in ones(&above[i]) {
                    for (r, a) in reach.iter_mut().zip(&above[j]) {
                        *r |= a;
                    }
                }
                ones(&above[i]).filter(|&j| !bit(&reach, j)).collect()
            })
            .collect();
        let mut chains: Vec<Face> = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        fn walk(x: usize, covers: &[Vec<usize>], stack: &mut Vec<u32>, out: &mut Vec<Face>) {
            stack.push(x as u32);
            if covers[x].is_empty() {
                let mut chain = stack.clone();
                chain.sort_unstable();
                out.push(chain);
            } else {
                for &y in &covers[x] {
                    walk(y, covers, stack, out);
                }
            }
            stack.pop();
        }
        for x in (0..m).filter(|&x| !has_below[x]) {
            walk(x, &covers, &mut stack, &mut chains);
        }
        let order_complex = SimplicialComplex::from_parts(elements.clone(), chains);
        Ok(PosetComplex {
            elements,
            above,
            order_complex,
        })
    }

    pub fn elements(&self) -> &[L] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn less_than(&self, i: usize, j: usize) -> bool {
        bit(&self.above[i], j)
    }

    pub fn order_complex(&self) -> &SimplicialComplex<L> {
        &self.order_complex
    }
}

/// Signed subsets ordered by proper inclusion.
pub fn by_inclusion(elements: Vec<SignedSubset>) -> Result<PosetComplex> {
    PosetComplex::from_relation(elements, |a, b| a.is_proper_subset(*b))
}

/// The smaller poset homotopy equivalent to `K_S` for the representative
/// `S = {1, ..., 2r-1}`.
///
/// Type C: `U ∪ W` with `U` the labels of `V_1(S)` supported in `S ∪ {n}`
/// and `W = V_2(S)`. Type D additionally requires `|I| < n - 1` in `U` and
/// adjoins `V'`, the `(n-1)`-element intersections of adjacent labels of `W`.
pub fn reduced_poset_complex(family: Family, n: usize, r: usize) -> Result<PosetComplex> {
    family.require_complex(n)?;
    if r < 1 || 2 * r > n {
        return Err(Error::InvalidInput(format!(
            "reduced poset needs 1 <= r and 2r - 1 < n (got n = {n}, r = {r})"
        )));
    }
    let s = Subset::initial(2 * r - 1);
    let allowed = s.with(n).mask();
    let (v1, v2) = vertex_partition_oracle(family, n, s)?;
    let mut elements: Vec<SignedSubset> = v1
        .into_iter()
        .filter(|l| l.support() & !allowed == 0)
        .filter(|l| family != Family::D || l.len() < n - 1)
        .collect();
    if family == Family::D {
        let mut joins: Vec<SignedSubset> = Vec::new();
        for (i, a) in v2.iter().enumerate() {
            for b in &v2[i + 1..] {
                let meet = a.intersection(*b);
                if meet.len() == n - 1 {
                    joins.push(meet);
                }
            }
        }
        joins.sort();
        joins.dedup();
        elements.extend(joins);
    }
    elements.extend(v2);
    elements.sort();
    by_inclusion(elements)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankSelectedKind {
    /// Odd-cardinality subsets of `[2r]`.
    BooleanOdd,
    /// Odd-cardinality signed subsets of `[±2r]`.
    CrossOdd,
}

pub fn rank_selected_complex(kind: RankSelectedKind, two_r: usize) -> Result<PosetComplex> {
    if two_r < 2 || two_r % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "rank-selected poset needs an even size >= 2, got {two_r}"
        )));
    }
    let elements: Vec<SignedSubset> = match kind {
        RankSelectedKind::BooleanOdd => (1u32..(1 << two_r))
            .filter(|m| m.count_ones() % 2 == 1)
            .map(|m| SignedSubset::from_masks(m, 0).unwrap())
            .collect(),
        RankSelectedKind::CrossOdd => SignedSubset::all(two_r).filter(|l| l.len() % 2 == 1).collect(),
    };
    by_inclusion(elements)
}
