use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A set of generator labels `s_i`, stored as a bitmask (bit `i` = `s_i`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_labels(labels: impl IntoIterator<Item = usize>) -> Self {
        GenSet(labels.into_iter().fold(0, |acc, l| acc | (1 << l)))
    }

    /// `{s_lo, ..., s_hi}`; empty when `hi < lo`.
    pub fn range(lo: usize, hi: isize) -> Self {
        if hi < lo as isize {
            return GenSet::EMPTY;
        }
        Self::from_labels(lo..=hi as usize)
    }

    pub fn single(label: usize) -> Self {
        GenSet(1 << label)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        self.0 & (1 << label) != 0
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn minus(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn with(self, label: usize) -> GenSet {
        GenSet(self.0 | (1 << label))
    }

    pub fn without(self, label: usize) -> GenSet {
        GenSet(self.0 & !(1 << label))
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Number of members with label `< label`.
    pub fn count_below(self, label: usize) -> usize {
        (self.0 & ((1u32 << label) - 1)).count_ones() as usize
    }

    /// Every subset of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        (0..=full).filter(move |s| s & !full == 0).map(GenSet)
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl FromStr for GenSet {
    type Err = Error;

    /// Parses `s0,s2`, `{s0,s2}`, `0,2` or the empty string.
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = GenSet::EMPTY;
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let digits = tok.strip_prefix('s').unwrap_or(tok);
            let label: usize = digits
                .parse()
                .ok()
                .filter(|l| *l < 32)
                .ok_or_else(|| Error::InvalidFiltration(format!("bad generator `{tok}`")))?;
            set = set.with(label);
        }
        Ok(set)
    }
}
