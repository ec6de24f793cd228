//! Partitions, conjugation, majorization and the Gale-Ryser test.
//!
//! Residual margins produced by the zero-block constructions may contain
//! zeros and need not be monotone. Those are handled as plain `&[usize]`
//! slices by the `*_seq` helpers and only become a [`Partition`] through
//! [`Partition::from_unsorted`].

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A nonincreasing sequence of positive integers together with its weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        let weight = parts.iter().sum();
        Ok(Self { parts, weight })
    }

    /// Sorts into nonincreasing order and drops zero entries.
    pub fn from_unsorted(seq: &[usize]) -> Self {
        let mut parts: Vec<usize> = seq.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The conjugate partition: part `j` counts the parts that are `>= j`.
    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: conjugate_seq(&self.parts),
            weight: self.weight,
        }
    }

    /// Prefix `(R_1, ..., R_k)`; `k` is clamped to the length.
    pub fn prefix(&self, k: usize) -> &[usize] {
        &self.parts[..k.min(self.parts.len())]
    }
}

impl AsRef<[usize]> for Partition {
    fn as_ref(&self) -> &[usize] {
        &self.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses the comma-separated form, e.g. `6,5,4,3,3,2,2,1,1`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition)
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Conjugate of an arbitrary nonnegative sequence (order and zeros ignored).
pub fn conjugate_seq(seq: &[usize]) -> Vec<usize> {
    let top = seq.iter().copied().max().unwrap_or(0);
    (1..=top)
        .map(|j| seq.iter().filter(|&&x| x >= j).count())
        .collect()
}

/// `s` is majorized by `r`: every prefix sum of `s` is at most the matching
/// prefix sum of `r`, and the totals agree. Shorter inputs are padded with zeros.
pub fn majorized_by(s: &[usize], r: &[usize]) -> bool {
    let total_s: usize = s.iter().sum();
    let total_r: usize = r.iter().sum();
    if total_s != total_r {
        return false;
    }
    let len = s.len().max(r.len());
    let (mut acc_s, mut acc_r) = (0usize, 0usize);
    for k in 0..len {
        acc_s += s.get(k).copied().unwrap_or(0);
        acc_r += r.get(k).copied().unwrap_or(0);
        if acc_s > acc_r {
            return false;
        }
    }
    true
}

/// Gale-Ryser: `A(R, S)` is nonempty iff the weights agree and `S` is
/// majorized by the conjugate of `R`.
pub fn is_nonempty(r: &Partition, s: &Partition) -> bool {
    r.weight() == s.weight() && majorized_by(s.parts(), &r.conjugate().parts)
}

/// Gale-Ryser for loose margins that may contain zeros or be unsorted. The
/// number of columns is `cols.len()`; a row sum above it makes the test fail.
pub fn margins_feasible(rows: &[usize], cols: &[usize]) -> bool {
    if rows.iter().any(|&r| r > cols.len()) || cols.iter().any(|&c| c > rows.len()) {
        return false;
    }
    let mut sorted = cols.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    majorized_by(&sorted, &conjugate_seq(rows))
}
