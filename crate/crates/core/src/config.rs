//! Fermionic particle configurations on a circle with `n` sites.
//!
//! Internally positions run over `1..=n`, position `n` standing for circle
//! site 0. Circle labels `0..n` are used for text input and output.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::{parse_indices, write_indices, Rank};

/// A set of occupied positions, i.e. the wedge basis vector `v(I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config {
    rank: Rank,
    /// bit `p - 1` is set when position `p` is occupied
    bits: u64,
}

impl Config {
    pub fn empty(rank: Rank) -> Self {
        Config { rank, bits: 0 }
    }

    /// From positions in `1..=n`; order is irrelevant, repeats are rejected.
    pub fn from_positions(rank: Rank, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for p in positions {
            if p == 0 || p > rank.get() {
                return Err(Error::PositionOutOfRange { position: p, rank: rank.get() });
            }
            let bit = 1u64 << (p - 1);
            if bits & bit != 0 {
                return Err(Error::DuplicatePosition(p));
            }
            bits |= bit;
        }
        Ok(Config { rank, bits })
    }

    /// From circle labels in `0..n`; label 0 is position `n`.
    pub fn from_labels(rank: Rank, labels: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut positions = Vec::new();
        for l in labels {
            if l >= rank.get() {
                return Err(Error::PositionOutOfRange { position: l, rank: rank.get() });
            }
            positions.push(if l == 0 { rank.get() } else { l });
        }
        Config::from_positions(rank, positions)
    }

    /// Parses whitespace- or comma-separated circle labels.
    pub fn parse_labels(rank: Rank, text: &str) -> Result<Self> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        Config::from_labels(rank, parse_indices(text)?)
    }

    /// All `k`-particle configurations, ordered lexicographically by their
    /// sorted circle labels.
    pub fn all_with(rank: Rank, k: usize) -> Vec<Config> {
        let n = rank.get();
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut labels: Vec<usize> = (0..k).collect();
        loop {
            out.push(Config::from_labels(rank, labels.iter().copied()).expect("labels in range"));
            // next k-combination of 0..n in lexicographic order
            let Some(p) = (0..k).rev().find(|&p| labels[p] < n - k + p) else {
                break;
            };
            labels[p] += 1;
            for q in p + 1..k {
                labels[q] = labels[q - 1] + 1;
            }
        }
        out
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, position: usize) -> bool {
        (1..=self.rank.get()).contains(&position) && self.bits & (1u64 << (position - 1)) != 0
    }

    /// Occupied positions in `1..=n`, increasing.
    pub fn positions(&self) -> Vec<usize> {
        (1..=self.rank.get()).filter(|&p| self.contains(p)).collect()
    }

    /// Occupied circle labels in `0..n`, increasing.
    pub fn labels(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.positions().into_iter().map(|p| p % self.rank.get()).collect();
        l.sort_unstable();
        l
    }

    pub(crate) fn without(self, position: usize) -> Config {
        Config { bits: self.bits & !(1u64 << (position - 1)), ..self }
    }

    pub(crate) fn with(self, position: usize) -> Config {
        Config { bits: self.bits | (1u64 << (position - 1)), ..self }
    }

    /// Comma-separated labels, e.g. `(0,2)`.
    pub fn to_label_list(&self) -> alloc::string::String {
        let labels: Vec<alloc::string::String> = self.labels().iter().map(|l| format!("{l}")).collect();
        format!("({})", labels.join(","))
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_indices(f, &self.labels(), " ")?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn label_conversion() {
        let r = Rank::new(8).unwrap();
        let c = Config::from_labels(r, [5, 0]).unwrap();
        assert_eq!(c.positions(), vec![5, 8]);
        assert_eq!(c.labels(), vec![0, 5]);
        assert_eq!(c.to_string(), "(0 5)");
        assert_eq!(c.to_label_list(), "(0,5)");
        assert_eq!(Config::parse_labels(r, "5 0").unwrap(), c);
        assert_eq!(Config::parse_labels(r, "(0 5)").unwrap(), c);
    }

    #[test]
    fn validation() {
        let r = Rank::new(4).unwrap();
        assert!(Config::from_positions(r, [0]).is_err());
        assert!(Config::from_positions(r, [5]).is_err());
        assert_eq!(Config::from_positions(r, [2, 2]), Err(Error::DuplicatePosition(2)));
        assert!(Config::from_labels(r, [4]).is_err());
    }

    #[test]
    fn enumeration() {
        let r = Rank::new(5).unwrap();
        let all = Config::all_with(r, 2);
        assert_eq!(all.len(), 10);
        assert_eq!(all[0].labels(), vec![0, 1]);
        assert_eq!(all[9].labels(), vec![3, 4]);
        assert!(all.iter().all(|c| c.len() == 2));
        assert_eq!(Config::all_with(r, 0), vec![Config::empty(r)]);
        assert_eq!(Config::all_with(r, 5).len(), 1);
    }
}
