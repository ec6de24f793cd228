//! Constructive algorithms: Ryser's canonical matrix, interchange paths, and
//! the column-shifting constructions of matrices with prescribed zero blocks.
//!
//! Every shifting step follows the same rule: the 1s moved into a column come
//! from the rows with the largest current sum, and among equal sums the rows
//! with the largest index win.

use alloc::vec::Vec;

use crate::binmat::in_class;
use crate::flow::t_term_rank;
use crate::partition::{is_nonempty, margins_feasible};
use crate::structure::ClassTables;
use crate::{BinaryMatrix, Error, Interchange, Partition, Result};

/// A permutation that sorts a sequence into nonincreasing order, stable on
/// ties: position `i` of the sorted sequence holds entry `sigma[i]` of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortPermutation {
    sigma: Vec<usize>,
}

impl SortPermutation {
    pub fn descending(seq: &[usize]) -> Self {
        let mut sigma: Vec<usize> = (0..seq.len()).collect();
        sigma.sort_by(|&a, &b| seq[b].cmp(&seq[a]));
        Self { sigma }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn apply(&self, seq: &[usize]) -> Vec<usize> {
        self.sigma.iter().map(|&i| seq[i]).collect()
    }
}

/// Starting from rows whose 1s are left-justified, moves the final 1s of the
/// chosen rows into columns `n-1, n-2, .., f` (0-based), one column at a time.
/// Returns the `rows.len() x (n - f)` block of shifted 1s.
fn shift_columns(rows: &[usize], col_sums: &[usize], f: usize) -> Result<BinaryMatrix> {
    let n = col_sums.len();
    let mut live = rows.to_vec();
    if live.iter().any(|&x| x > n) {
        return Err(Error::InfeasibleShift {
            column: n.saturating_sub(1),
        });
    }
    let mut block = BinaryMatrix::zeros(rows.len(), n - f);
    let mut order: Vec<usize> = (0..rows.len()).collect();
    for col in (f..n).rev() {
        let need = col_sums[col];
        order.sort_by(|&a, &b| live[b].cmp(&live[a]).then(b.cmp(&a)));
        if need > order.len() || order[..need].iter().any(|&i| live[i] == 0) {
            return Err(Error::InfeasibleShift { column: col });
        }
        for &i in &order[..need] {
            block.set(i, col - f, true);
            live[i] -= 1;
        }
        // What is left must fit in columns 0..col.
        if live.iter().any(|&x| x > col) {
            return Err(Error::InfeasibleShift { column: col });
        }
    }
    Ok(block)
}

/// Ryser's canonical matrix of `A(R, S)`.
pub fn ryser_canonical(r: &Partition, s: &Partition) -> Result<BinaryMatrix> {
    if !is_nonempty(r, s) {
        return Err(Error::EmptyClass);
    }
    shift_columns(r.parts(), s.parts(), 0)
}

/// Canonical matrix for arbitrary margins (zeros allowed, any order): sort
/// both margins with stable [`SortPermutation`]s, run Ryser's algorithm on the
/// sorted class, then undo the permutations.
pub fn canonical_for_margins(rows: &[usize], cols: &[usize]) -> Result<BinaryMatrix> {
    if !margins_feasible(rows, cols) {
        return Err(Error::EmptyClass);
    }
    let row_perm = SortPermutation::descending(rows);
    let col_perm = SortPermutation::descending(cols);
    let sorted = shift_columns(&row_perm.apply(rows), &col_perm.apply(cols), 0)?;
    Ok(unsort(&sorted, &row_perm, &col_perm))
}

fn unsort(sorted: &BinaryMatrix, rows: &SortPermutation, cols: &SortPermutation) -> BinaryMatrix {
    let mut out = BinaryMatrix::zeros(sorted.nrows(), sorted.ncols());
    for (i, &oi) in rows.as_slice().iter().enumerate() {
        for (j, &oj) in cols.as_slice().iter().enumerate() {
            if sorted.get(i, j) {
                out.set(oi, oj, true);
            }
        }
    }
    out
}

/// The shifted block of the modified Ryser algorithm and its row sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnBlock {
    pub block: BinaryMatrix,
    pub row_sums: Vec<usize>,
}

/// The canonical column `f`-submatrix: keep the first `e` left-justified
/// rows of `R`, shift 1s into columns `n..f+1` (1-based) as in Ryser's
/// algorithm, and return the `e x (n - f)` block of shifted 1s.
///
/// Calling it with the roles of `R` and `S` swapped gives the block used for
/// the bottom-left of the zero-block constructions.
pub fn canonical_column_submatrix(
    r: &Partition,
    s: &Partition,
    e: usize,
    f: usize,
) -> Result<ColumnBlock> {
    if e > r.len() || f > s.len() {
        return Err(Error::BadRange);
    }
    let block = shift_columns(r.prefix(e), s.parts(), f)?;
    let row_sums = block.row_sums().to_vec();
    Ok(ColumnBlock { block, row_sums })
}

/// Intermediate pieces of a zero-block construction for covers `(e1, f1)`
/// and `(e2, f2)` with `e1 <= e2`, `f1 >= f2`. The assembled matrix is
///
/// ```text
/// [ core (e2 x f1)              | top.block (e1 x (n-f1)) ]
/// [ left.block^T ((m-e2) x f2)  | 0                       ]
/// ```
///
/// where `top` is the canonical column `f1`-submatrix of `(R, S, e1)`, `left`
/// the canonical column `e2`-submatrix of `(S, R, f2)`, and `core` the
/// canonical matrix of the residual margins `(r_bar, s_bar)` with the sorting
/// permutations undone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroBlockParts {
    pub m: usize,
    pub n: usize,
    pub e2: usize,
    pub f1: usize,
    pub top: ColumnBlock,
    pub left: ColumnBlock,
    /// `R^(e2) - R̂`, with `R̂` padded by zeros to length `e2`.
    pub r_bar: Vec<usize>,
    /// `S^(f1) - Ŝ`, with `Ŝ` padded by zeros to length `f1`.
    pub s_bar: Vec<usize>,
    pub core: BinaryMatrix,
}

impl ZeroBlockParts {
    pub fn assemble(&self) -> BinaryMatrix {
        let mut a = BinaryMatrix::zeros(self.m, self.n);
        a.paste(&self.core, 0, 0);
        a.paste(&self.top.block, 0, self.f1);
        a.paste(&self.left.block.transpose(), self.e2, 0);
        a
    }
}

/// Runs the shifting steps and the residual canonical construction.
pub fn zero_block_parts(
    r: &Partition,
    s: &Partition,
    (e1, f1): (usize, usize),
    (e2, f2): (usize, usize),
) -> Result<ZeroBlockParts> {
    let (m, n) = (r.len(), s.len());
    if !(e1 <= e2 && e2 <= m && f2 <= f1 && f1 <= n) {
        return Err(Error::BadRange);
    }
    if r.weight() != s.weight() {
        return Err(Error::WeightMismatch {
            rows: r.weight(),
            cols: s.weight(),
        });
    }
    let top = canonical_column_submatrix(r, s, e1, f1)?;
    let left = canonical_column_submatrix(s, r, f2, e2)?;
    let r_bar: Vec<usize> = (0..e2)
        .map(|i| r.parts()[i] - top.row_sums.get(i).copied().unwrap_or(0))
        .collect();
    let s_bar: Vec<usize> = (0..f1)
        .map(|j| s.parts()[j] - left.row_sums.get(j).copied().unwrap_or(0))
        .collect();
    let core = canonical_for_margins(&r_bar, &s_bar).map_err(|_| Error::ResidualInfeasible)?;
    Ok(ZeroBlockParts {
        m,
        n,
        e2,
        f1,
        top,
        left,
        r_bar,
        s_bar,
        core,
    })
}

fn zero_block_construct(
    r: &Partition,
    s: &Partition,
    e1: usize,
    f1: usize,
    e2: usize,
    f2: usize,
) -> Result<BinaryMatrix> {
    let a = zero_block_parts(r, s, (e1, f1), (e2, f2))?.assemble();
    if !in_class(&a, r, s) {
        return Err(Error::VerificationFailed);
    }
    Ok(a)
}

/// Modified Ryser algorithm: a member of `A(R, S)` with every 1 in the first
/// `e` rows or the first `f` columns.
pub fn modified_ryser(r: &Partition, s: &Partition, e: usize, f: usize) -> Result<BinaryMatrix> {
    if e > r.len() || f > s.len() {
        return Err(Error::BadRange);
    }
    zero_block_construct(r, s, e, f, e, f)
}

/// Member of `A(R, S)` carrying two prefix covers at once. The covers may be
/// given in either order; after normalisation `cover1` has fewer rows and
/// more columns than `cover2`. Covers where one dominates the other are
/// rejected with [`Error::BadCoverOrder`]; use [`modified_ryser`] for those.
pub fn two_cover_construct(
    r: &Partition,
    s: &Partition,
    cover_a: (usize, usize),
    cover_b: (usize, usize),
) -> Result<BinaryMatrix> {
    let ((e1, f1), (e2, f2)) = normalize_covers(cover_a, cover_b)?;
    if e2 > r.len() || f1 > s.len() {
        return Err(Error::BadRange);
    }
    zero_block_construct(r, s, e1, f1, e2, f2)
}

/// Orders two covers as `(e1, f1), (e2, f2)` with `e1 < e2` and `f1 > f2`.
pub fn normalize_covers(
    a: (usize, usize),
    b: (usize, usize),
) -> Result<((usize, usize), (usize, usize))> {
    if a.0 < b.0 && a.1 > b.1 {
        Ok((a, b))
    } else if b.0 < a.0 && b.1 > a.1 {
        Ok((b, a))
    } else {
        Err(Error::BadCoverOrder)
    }
}

/// A member realising every minimum t-term rank for `k = 1..=t`, built from
/// the covers `(1, f')` and `(2, f)` when
/// [`ClassTables::uniform_minimizer_hypotheses`] holds. `None` when the
/// hypotheses fail (including classes that are empty or too small).
pub fn uniform_minimizer(r: &Partition, s: &Partition, t: usize) -> Result<Option<BinaryMatrix>> {
    if t == 0 {
        return Err(Error::BadRange);
    }
    let tables = match ClassTables::new(r, s) {
        Ok(tables) => tables,
        Err(Error::EmptyClass | Error::WeightMismatch { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let hyp = match tables.uniform_minimizer_hypotheses(t) {
        Ok(h) => h,
        Err(Error::DimensionTooSmall) => return Ok(None),
        Err(e) => return Err(e),
    };
    if !hyp.holds {
        return Ok(None);
    }
    let a = two_cover_construct(r, s, (1, hyp.f_prime), (2, hyp.f))?;
    for k in 1..=t {
        if t_term_rank(&a, k) != tables.min_t_term_rank(k)?.value {
            return Err(Error::VerificationFailed);
        }
    }
    Ok(Some(a))
}

/// Greedy interchanges taking `a` to `target`: each step applies the first
/// interchange that most reduces the number of differing cells.
fn reduce_to(a: &BinaryMatrix, target: &BinaryMatrix) -> Result<Vec<Interchange>> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut current = a.clone();
    let mut path = Vec::new();
    while current != *target {
        let mut best: Option<(usize, Interchange)> = None;
        for i1 in 0..m {
            for i2 in i1 + 1..m {
                for j1 in 0..n {
                    for j2 in j1 + 1..n {
                        let (p, q) = (current.get(i1, j1), current.get(i1, j2));
                        if p == q || current.get(i2, j1) != q || current.get(i2, j2) != p {
                            continue;
                        }
                        let cells = [(i1, j1), (i1, j2), (i2, j1), (i2, j2)];
                        // Every cell flips: `fixed` of them start agreeing with the
                        // target and the rest stop, so the distance drops by 2*fixed - 4.
                        let fixed = cells
                            .iter()
                            .filter(|&&(i, j)| current.get(i, j) != target.get(i, j))
                            .count();
                        if fixed >= 3 && best.is_none_or(|(f, _)| fixed > f) {
                            best = Some((fixed, Interchange::new(i1, i2, j1, j2)));
                        }
                    }
                }
            }
        }
        let (_, ic) = best.ok_or(Error::VerificationFailed)?;
        current = current.apply_interchange(ic)?;
        path.push(ic);
    }
    Ok(path)
}

/// A sequence of interchanges turning `a` into `b`, routed through the
/// canonical member of their common class.
pub fn interchange_path(a: &BinaryMatrix, b: &BinaryMatrix) -> Result<Vec<Interchange>> {
    if a.nrows() != b.nrows()
        || a.ncols() != b.ncols()
        || a.row_sums() != b.row_sums()
        || a.col_sums() != b.col_sums()
    {
        return Err(Error::NotSameClass);
    }
    if a == b {
        return Ok(Vec::new());
    }
    let canonical = canonical_for_margins(a.row_sums(), a.col_sums())?;
    let mut path = reduce_to(a, &canonical)?;
    let mut back = reduce_to(b, &canonical)?;
    back.reverse();
    path.extend(back);
    Ok(path)
}
