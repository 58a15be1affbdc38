use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset `S` of `[n] = {1, ..., n}`; bit `i - 1` stands for `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn from_elements(elements: &[usize]) -> Self {
        Subset(elements.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }

    /// `{1, ..., k}`.
    pub fn initial(k: usize) -> Self {
        Subset(((1u64 << k) - 1) as u32)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn elements(self) -> Vec<usize> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }

    /// All subsets of `[n]` in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..(1u32 << n)).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.elements().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        if elements.iter().any(|&i| i == 0 || i > 32) {
            return Err(serde::de::Error::custom("subset element out of range"));
        }
        Ok(Subset::from_elements(&elements))
    }
}
