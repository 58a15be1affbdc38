//! Orbit classes of subsets `S ⊆ [n]` and the closed-form Betti vector of
//! each `K_S`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::complexes::Subset;
use crate::error::{Error, Result};
use crate::homology::{BettiVector, Coefficients};
use crate::sequences::{binomial, SequenceTable};
use crate::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// `S = ∅`.
    Empty,
    /// `S = {n}`.
    NOnly,
    /// `S ∩ [n-1]` nonempty with `⌊(|S ∩ [n-1]| + 1)/2⌋ = r`.
    R(usize),
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Empty => f.write_str("EMPTY"),
            ClassTag::NOnly => f.write_str("N_ONLY"),
            ClassTag::R(r) => write!(f, "r={r}"),
        }
    }
}

impl ClassTag {
    pub fn of(n: usize, s: Subset) -> ClassTag {
        let rest = s.without(n);
        if rest.is_empty() {
            if s.is_empty() {
                ClassTag::Empty
            } else {
                ClassTag::NOnly
            }
        } else {
            ClassTag::R(rest.len().div_ceil(2))
        }
    }

    pub fn representative(self, n: usize) -> Subset {
        match self {
            ClassTag::Empty => Subset::EMPTY,
            ClassTag::NOnly => Subset::EMPTY.with(n),
            ClassTag::R(r) => Subset::initial(2 * r - 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetClass {
    pub tag: ClassTag,
    pub representative: Subset,
    pub members: Vec<Subset>,
}

/// Partition of `2^[n]` into classes with isomorphic (type C) or homotopy
/// equivalent (type D) subcomplexes, ordered EMPTY, N_ONLY, r = 1, 2, ...
pub fn orbit_classes(family: Family, n: usize) -> Result<Vec<SubsetClass>> {
    family.require_complex(n)?;
    let mut classes: Vec<SubsetClass> = [ClassTag::Empty, ClassTag::NOnly]
        .into_iter()
        .chain((1..=n / 2).map(ClassTag::R))
        .map(|tag| SubsetClass {
            tag,
            representative: tag.representative(n),
            members: Vec::new(),
        })
        .collect();
    for s in Subset::all(n) {
        let idx = match ClassTag::of(n, s) {
            ClassTag::Empty => 0,
            ClassTag::NOnly => 1,
            ClassTag::R(r) => r + 1,
        };
        classes[idx].members.push(s);
    }
    Ok(classes)
}

/// `2·C(n, 2r)` for `r ≥ 1`, 1 for the two singleton classes.
pub fn class_size(n: usize, tag: ClassTag) -> BigInt {
    match tag {
        ClassTag::Empty | ClassTag::NOnly => BigInt::one(),
        ClassTag::R(r) => 2 * binomial(n, 2 * r as i64),
    }
}

fn to_rank(v: BigInt) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::InvalidInput(format!("Betti number {v} does not fit in 64 bits")))
}

/// Reduced rational Betti numbers of `K_S` predicted for the class of `S`.
pub fn expected_subcomplex_betti(family: Family, n: usize, s: Subset) -> Result<BettiVector> {
    family.require_complex(n)?;
    if s.mask() >> n != 0 {
        return Err(Error::InvalidInput(format!("{s} is not a subset of [{n}]")));
    }
    let seq = SequenceTable::new(n + 1);
    let pow2 = |k: usize| BigInt::one() << k;
    let mut ranks = vec![0u64; n + 3];
    match ClassTag::of(n, s) {
        ClassTag::Empty => ranks[0] = 1,
        ClassTag::NOnly => match family {
            Family::C => ranks[1] = to_rank(pow2(n) - 1)?,
            _ => ranks[2] = to_rank(seq.t(n as i64))?,
        },
        ClassTag::R(r) => {
            let a = seq.a(2 * r as i64);
            let b = seq.b(2 * r as i64);
            let shared = &a * pow2(2 * r - 1);
            ranks[r] = to_rank(&b - &shared)?;
            match family {
                Family::C => ranks[r + 1] += to_rank((pow2(n - 2 * r) - 1) * &shared)?,
                _ => ranks[r + 2] += to_rank(seq.t((n - 2 * r) as i64) * &shared)?,
            }
        }
    }
    Ok(BettiVector::from_ranks(Coefficients::Q, ranks))
}
