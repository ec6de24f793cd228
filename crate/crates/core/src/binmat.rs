//! Dense (0,1)-matrices, class membership, interchanges and covers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;

#[cfg(doc)]
use crate::Partition;
use crate::{Error, Result};

/// An `m x n` matrix over {0,1} with cached row and column sums.
///
/// Values are immutable through the public API; operations return new
/// matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<bool>,
    row_sums: Vec<usize>,
    col_sums: Vec<usize>,
}

impl BinaryMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            data: vec![false; nrows * ncols],
            row_sums: vec![0; nrows],
            col_sums: vec![0; ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut a = Self::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                if f(i, j) {
                    a.set(i, j, true);
                }
            }
        }
        a
    }

    /// Builds from rows of 0/1 integers. `ncols` is only consulted when there
    /// are no rows.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R], ncols: usize) -> Result<Self> {
        let ncols = rows.first().map_or(ncols, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != ncols) {
            return Err(Error::InvalidMatrix);
        }
        if rows.iter().flat_map(|r| r.as_ref()).any(|&x| x > 1) {
            return Err(Error::InvalidMatrix);
        }
        Ok(Self::from_fn(rows.len(), ncols, |i, j| {
            rows[i].as_ref()[j] == 1
        }))
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.ncols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: bool) {
        let cell = &mut self.data[i * self.ncols + j];
        if *cell != value {
            *cell = value;
            if value {
                self.row_sums[i] += 1;
                self.col_sums[j] += 1;
            } else {
                self.row_sums[i] -= 1;
                self.col_sums[j] -= 1;
            }
        }
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[bool]> + '_ {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows()
            .map(|r| r.iter().map(|&b| u8::from(b)).collect())
            .collect()
    }

    pub fn row_sums(&self) -> &[usize] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[usize] {
        &self.col_sums
    }

    pub fn count_ones(&self) -> usize {
        self.row_sums.iter().sum()
    }

    pub fn transpose(&self) -> BinaryMatrix {
        Self::from_fn(self.ncols, self.nrows, |i, j| self.get(j, i))
    }

    /// Permutes rows and columns: entry `(i, j)` of the result is entry
    /// `(row_perm[i], col_perm[j])` of `self`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> BinaryMatrix {
        Self::from_fn(self.nrows, self.ncols, |i, j| {
            self.get(row_perm[i], col_perm[j])
        })
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub(crate) fn paste(&mut self, block: &BinaryMatrix, row: usize, col: usize) {
        for i in 0..block.nrows {
            for j in 0..block.ncols {
                self.set(row + i, col + j, block.get(i, j));
            }
        }
    }

    /// Number of cells where `self` and `other` differ. Shapes must agree.
    pub fn hamming(&self, other: &BinaryMatrix) -> usize {
        self.data
            .iter()
            .zip(&other.data)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Applies an interchange, returning the new matrix.
    pub fn apply_interchange(&self, ic: Interchange) -> Result<BinaryMatrix> {
        let Interchange { i1, i2, j1, j2 } = ic;
        if i1 == i2 || j1 == j2 || i1.max(i2) >= self.nrows || j1.max(j2) >= self.ncols {
            return Err(Error::InvalidInterchange);
        }
        let (a, b, c, d) = (
            self.get(i1, j1),
            self.get(i1, j2),
            self.get(i2, j1),
            self.get(i2, j2),
        );
        if !(a == d && b == c && a != b) {
            return Err(Error::InvalidInterchange);
        }
        let mut out = self.clone();
        out.set(i1, j1, b);
        out.set(i1, j2, a);
        out.set(i2, j1, d);
        out.set(i2, j2, c);
        Ok(out)
    }

    /// Whether every 1 lies in a covered row or a covered column.
    pub fn is_covered(&self, cover: &CoverSpec) -> bool {
        let (row_mask, col_mask) = cover.masks(self.nrows, self.ncols);
        (0..self.nrows)
            .all(|i| row_mask[i] || (0..self.ncols).all(|j| col_mask[j] || !self.get(i, j)))
    }

    /// `min { t*e + f }` over all covers with `e` rows and `f` columns, with a
    /// witness. Exhaustive over row subsets; the best column set for a fixed
    /// row set is the set of columns that still contain a 1.
    ///
    /// Ties go to the smallest `e`, then the lexicographically smallest row set.
    pub fn min_cover_value(&self, t: usize) -> CoverValue {
        let mut best: Option<CoverValue> = None;
        for e in 0..=self.nrows {
            for rows in (0..self.nrows).combinations(e) {
                let cols: Vec<usize> = (0..self.ncols)
                    .filter(|&j| (0..self.nrows).any(|i| self.get(i, j) && !rows.contains(&i)))
                    .collect();
                let value = t * e + cols.len();
                if best.as_ref().is_none_or(|b| value < b.value) {
                    best = Some(CoverValue {
                        value,
                        cover: CoverSpec::Explicit { rows, cols },
                    });
                }
            }
        }
        best.expect("the empty row set is always a candidate")
    }
}

impl fmt::Display for BinaryMatrix {
    /// One line per row, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, &x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if x { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

/// Whether `a` has dimensions `|r| x |s|` and row/column sums `r`, `s`.
/// Accepts a [`Partition`] or any loose margin slice.
pub fn in_class(a: &BinaryMatrix, r: impl AsRef<[usize]>, s: impl AsRef<[usize]>) -> bool {
    a.row_sums() == r.as_ref() && a.col_sums() == s.as_ref()
}

/// Swap of `[[1,0],[0,1]]` and `[[0,1],[1,0]]` on rows `i1, i2` and columns `j1, j2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interchange {
    pub i1: usize,
    pub i2: usize,
    pub j1: usize,
    pub j2: usize,
}

impl Interchange {
    pub fn new(i1: usize, i2: usize, j1: usize, j2: usize) -> Self {
        Self { i1, i2, j1, j2 }
    }
}

/// A set of rows and columns whose union should contain every 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoverSpec {
    /// The first `e` rows and the first `f` columns.
    Prefix { e: usize, f: usize },
    /// Explicit sorted, duplicate-free index sets.
    Explicit { rows: Vec<usize>, cols: Vec<usize> },
}

impl CoverSpec {
    pub fn prefix(e: usize, f: usize) -> Self {
        CoverSpec::Prefix { e, f }
    }

    /// Validates the index sets against an `m x n` shape.
    pub fn explicit(
        mut rows: Vec<usize>,
        mut cols: Vec<usize>,
        m: usize,
        n: usize,
    ) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        let dup = |v: &[usize]| v.windows(2).any(|w| w[0] == w[1]);
        if dup(&rows) || dup(&cols) {
            return Err(Error::BadRange);
        }
        if rows.last().is_some_and(|&i| i >= m) || cols.last().is_some_and(|&j| j >= n) {
            return Err(Error::BadRange);
        }
        Ok(CoverSpec::Explicit { rows, cols })
    }

    /// Number of rows `e`.
    pub fn e(&self) -> usize {
        match self {
            CoverSpec::Prefix { e, .. } => *e,
            CoverSpec::Explicit { rows, .. } => rows.len(),
        }
    }

    /// Number of columns `f`.
    pub fn f(&self) -> usize {
        match self {
            CoverSpec::Prefix { f, .. } => *f,
            CoverSpec::Explicit { cols, .. } => cols.len(),
        }
    }

    fn masks(&self, m: usize, n: usize) -> (Vec<bool>, Vec<bool>) {
        match self {
            CoverSpec::Prefix { e, f } => (
                (0..m).map(|i| i < *e).collect(),
                (0..n).map(|j| j < *f).collect(),
            ),
            CoverSpec::Explicit { rows, cols } => {
                let mut rm = vec![false; m];
                let mut cm = vec![false; n];
                rows.iter().filter(|&&i| i < m).for_each(|&i| rm[i] = true);
                cols.iter().filter(|&&j| j < n).for_each(|&j| cm[j] = true);
                (rm, cm)
            }
        }
    }
}

/// Result of [`BinaryMatrix::min_cover_value`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverValue {
    pub value: usize,
    pub cover: CoverSpec,
}
