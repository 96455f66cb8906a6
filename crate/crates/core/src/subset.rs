//! Subsets of the node set of a diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported rank; subsets are stored as a single machine word.
pub const MAX_RANK: usize = 64;

/// A set of node labels. Labels are 1-based; label `k` is stored in bit `k - 1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetJ(u64);

impl SubsetJ {
    pub const EMPTY: SubsetJ = SubsetJ(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetJ(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full node set `{1, ..., rank}`.
    pub fn full(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        if rank == MAX_RANK {
            SubsetJ(u64::MAX)
        } else {
            SubsetJ((1u64 << rank) - 1)
        }
    }

    pub fn singleton(label: usize) -> Self {
        debug_assert!((1..=MAX_RANK).contains(&label));
        SubsetJ(1u64 << (label - 1))
    }

    /// Builds a subset from labels, rejecting any label outside `1..=rank`.
    pub fn from_labels<I: IntoIterator<Item = usize>>(rank: usize, labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for label in labels {
            if label == 0 || label > rank {
                return Err(Error::InvalidNode { label, rank });
            }
            bits |= 1u64 << (label - 1);
        }
        Ok(SubsetJ(bits))
    }

    /// Interval `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        (lo.max(1)..=hi).map(SubsetJ::singleton).fold(SubsetJ::EMPTY, SubsetJ::union)
    }

    pub fn contains(self, label: usize) -> bool {
        label >= 1 && label <= MAX_RANK && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn insert(&mut self, label: usize) {
        self.0 |= SubsetJ::singleton(label).0;
    }

    pub fn remove(&mut self, label: usize) {
        self.0 &= !SubsetJ::singleton(label).0;
    }

    pub fn without(mut self, label: usize) -> Self {
        self.remove(label);
        self
    }

    pub fn with(mut self, label: usize) -> Self {
        self.insert(label);
        self
    }

    pub fn union(self, other: Self) -> Self {
        SubsetJ(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetJ(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SubsetJ(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(k + 1)
        })
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels via `f`, applied to every member.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        self.iter().map(f).fold(SubsetJ::EMPTY, SubsetJ::with)
    }

    /// Shifts labels down by `offset` (global labels to component-local ones).
    pub fn shift_down(self, offset: usize) -> Self {
        SubsetJ(self.0 >> offset)
    }

    pub fn shift_up(self, offset: usize) -> Self {
        SubsetJ(self.0 << offset)
    }

    /// Every subset of `{1, ..., rank}` in ascending bit order.
    pub fn all(rank: usize) -> impl Iterator<Item = SubsetJ> {
        assert!(rank < MAX_RANK);
        (0..1u64 << rank).map(SubsetJ)
    }

    /// Every subset of `self`, ascending in bit order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetJ> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(SubsetJ(cur))
        })
    }

    /// Parses `"1,2,4"`; `"-"` or an empty string is the empty set.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(SubsetJ::EMPTY);
        }
        let mut labels = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let label: usize = part.parse().map_err(|_| Error::Syntax {
                what: "subset",
                input: text.to_string(),
                reason: format!("{part:?} is not a node label"),
            })?;
            labels.push(label);
        }
        SubsetJ::from_labels(rank, labels)
    }
}

impl fmt::Display for SubsetJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for (k, label) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

impl FromStr for SubsetJ {
    type Err = Error;

    /// Parses without a rank check; use [`SubsetJ::parse`] when the diagram is known.
    fn from_str(s: &str) -> Result<Self> {
        SubsetJ::parse(s, MAX_RANK)
    }
}

impl Serialize for SubsetJ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for SubsetJ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        SubsetJ::from_labels(MAX_RANK, labels).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let j = SubsetJ::from_labels(4, [4, 1, 2]).unwrap();
        assert_eq!(j.to_string(), "1,2,4");
        assert_eq!(SubsetJ::parse("1,2,4", 4).unwrap(), j);
        assert_eq!(SubsetJ::EMPTY.to_string(), "-");
        assert_eq!(SubsetJ::parse("-", 4).unwrap(), SubsetJ::EMPTY);
        assert_eq!(SubsetJ::parse(" 10, 11 ", 12).unwrap().labels(), vec![10, 11]);
        assert!(SubsetJ::parse("5", 4).is_err());
        assert!(SubsetJ::parse("1;2", 4).is_err());
    }

    #[test]
    fn subsets_of_mask() {
        let j = SubsetJ::from_labels(5, [2, 4]).unwrap();
        let subs: Vec<_> = j.subsets().map(|s| s.labels()).collect();
        assert_eq!(subs, vec![vec![], vec![2], vec![4], vec![2, 4]]);
        assert_eq!(SubsetJ::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn interval_and_extremes() {
        let j = SubsetJ::interval(2, 4);
        assert_eq!(j.labels(), vec![2, 3, 4]);
        assert_eq!(j.min(), Some(2));
        assert_eq!(j.max(), Some(4));
        assert!(SubsetJ::interval(3, 2).is_empty());
        assert_eq!(SubsetJ::full(3).labels(), vec![1, 2, 3]);
    }

    #[test]
    fn json_is_label_array() {
        let j = SubsetJ::from_labels(6, [6, 2]).unwrap();
        assert_eq!(serde_json::to_string(&j).unwrap(), "[2,6]");
        let back: SubsetJ = serde_json::from_str("[2,6]").unwrap();
        assert_eq!(back, j);
    }
}
