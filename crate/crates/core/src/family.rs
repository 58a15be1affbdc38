use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Classical root-system family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    /// Smallest rank for which the family's Betti formula applies.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
        }
    }

    pub fn check_rank(self, n: usize) -> Result<()> {
        if n < self.min_rank() {
            Err(Error::RankBelowMinimum {
                family: self,
                n,
                min: self.min_rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Families with an explicit Coxeter complex construction.
    pub fn has_complex(self) -> bool {
        matches!(self, Family::C | Family::D)
    }

    pub fn require_complex(self, n: usize) -> Result<()> {
        if !self.has_complex() {
            return Err(Error::UnsupportedFamily(self));
        }
        self.check_rank(n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidInput(format!("unknown family `{other}`"))),
        }
    }
}
