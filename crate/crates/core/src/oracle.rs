//! Brute-force ground truth: exhaustive class enumeration, brute-force
//! t-term ranks and class minima, and the search for a single matrix that
//! realises every minimum at once.
//!
//! Nothing here calls into [`crate::flow`] or [`crate::structure`]; the
//! point is to check those modules against something independent.

use alloc::vec;
use alloc::vec::Vec;

use crate::flow::t_term_rank;
use crate::partition::margins_feasible;
use crate::{BinaryMatrix, ClassTables, Error, Partition, Result};

/// Default cap on the number of matrices an enumeration-based search visits.
pub const DEFAULT_BUDGET: usize = 1_000_000;

struct Frame {
    // rows with remaining capacity when this column was opened
    eligible: Vec<usize>,
    // current combination, as strictly increasing positions into `eligible`
    pos: Vec<usize>,
}

/// Streams every member of `A(R, S)` exactly once.
///
/// Columns are filled left to right; each column picks `S_j` rows among those
/// with remaining capacity, combinations in lexicographic order. A choice is
/// kept only if the residual margins still pass Gale-Ryser, so every branch
/// that is opened leads to at least one matrix.
pub struct ClassEnumeration {
    rows: Vec<usize>,
    cols: Vec<usize>,
    remaining: Vec<usize>,
    stack: Vec<Frame>,
    budget: Option<usize>,
    yielded: usize,
    started: bool,
    done: bool,
    truncated: bool,
}

impl ClassEnumeration {
    pub fn new(r: &Partition, s: &Partition, budget: Option<usize>) -> Self {
        let rows = r.parts().to_vec();
        let cols = s.parts().to_vec();
        let done = !margins_feasible(&rows, &cols);
        Self {
            remaining: rows.clone(),
            rows,
            cols,
            stack: Vec::new(),
            budget,
            yielded: 0,
            started: false,
            done,
            truncated: false,
        }
    }

    /// Number of matrices yielded so far.
    pub fn yielded(&self) -> usize {
        self.yielded
    }

    /// True once the budget stopped the stream while matrices remained.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn apply(&mut self, depth: usize, sign: bool) {
        let frame = &self.stack[depth];
        for &p in &frame.pos {
            let i = frame.eligible[p];
            if sign {
                self.remaining[i] -= 1;
            } else {
                self.remaining[i] += 1;
            }
        }
    }

    fn residual_ok(&self, depth: usize) -> bool {
        margins_feasible(&self.remaining, &self.cols[depth + 1..])
    }

    /// Moves the top frame to its next admissible combination (applied), or
    /// pops frames until one advances. False when the search is exhausted.
    fn bump(&mut self) -> bool {
        while let Some(depth) = self.stack.len().checked_sub(1) {
            self.apply(depth, false);
            loop {
                let frame = &mut self.stack[depth];
                if !next_combination(&mut frame.pos, frame.eligible.len()) {
                    break;
                }
                self.apply(depth, true);
                if self.residual_ok(depth) {
                    return true;
                }
                self.apply(depth, false);
            }
            self.stack.pop();
        }
        false
    }

    /// Opens frames until every column has a choice.
    fn descend(&mut self) -> bool {
        while self.stack.len() < self.cols.len() {
            let depth = self.stack.len();
            let eligible: Vec<usize> = (0..self.rows.len())
                .filter(|&i| self.remaining[i] > 0)
                .collect();
            let need = self.cols[depth];
            if need > eligible.len() {
                if !self.bump() {
                    return false;
                }
                continue;
            }
            self.stack.push(Frame {
                eligible,
                pos: (0..need).collect(),
            });
            self.apply(depth, true);
            if !self.residual_ok(depth) && !self.bump() {
                return false;
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.descend()
        } else {
            self.bump() && self.descend()
        }
    }

    fn current(&self) -> BinaryMatrix {
        let mut a = BinaryMatrix::zeros(self.rows.len(), self.cols.len());
        for (j, frame) in self.stack.iter().enumerate() {
            for &p in &frame.pos {
                a.set(frame.eligible[p], j, true);
            }
        }
        a
    }
}

impl Iterator for ClassEnumeration {
    type Item = BinaryMatrix;

    fn next(&mut self) -> Option<BinaryMatrix> {
        if self.done {
            return None;
        }
        if self.budget.is_some_and(|b| self.yielded >= b) {
            self.truncated = self.advance();
            self.done = true;
            return None;
        }
        if !self.advance() {
            self.done = true;
            return None;
        }
        self.yielded += 1;
        Some(self.current())
    }
}

/// Lexicographic successor of a `k`-combination of `0..len`.
fn next_combination(pos: &mut [usize], len: usize) -> bool {
    let k = pos.len();
    for idx in (0..k).rev() {
        if pos[idx] < len - k + idx {
            pos[idx] += 1;
            for t in idx + 1..k {
                pos[t] = pos[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn enumerate_class(r: &Partition, s: &Partition, budget: Option<usize>) -> ClassEnumeration {
    ClassEnumeration::new(r, s, budget)
}

/// The t-term rank by exhaustive search: every column is either left out or
/// assigned to one row holding a 1 in it, with at most `t` columns per row.
pub fn brute_t_term_rank(a: &BinaryMatrix, t: usize) -> usize {
    fn go(
        a: &BinaryMatrix,
        t: usize,
        j: usize,
        used: &mut [usize],
        count: usize,
        best: &mut usize,
    ) {
        if count + (a.ncols() - j) <= *best {
            return;
        }
        if j == a.ncols() {
            *best = count;
            return;
        }
        for i in 0..a.nrows() {
            if a.get(i, j) && used[i] < t {
                used[i] += 1;
                go(a, t, j + 1, used, count + 1, best);
                used[i] -= 1;
            }
        }
        go(a, t, j + 1, used, count, best);
    }
    let mut best = 0;
    go(a, t, 0, &mut vec![0; a.nrows()], 0, &mut best);
    best
}

/// Minimum of [`brute_t_term_rank`] over the whole class.
pub fn brute_min_t_term_rank(r: &Partition, s: &Partition, t: usize) -> Result<usize> {
    enumerate_class(r, s, None)
        .map(|a| brute_t_term_rank(&a, t))
        .min()
        .ok_or(Error::EmptyClass)
}

/// Outcome of [`find_uniform_minimizer`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(BinaryMatrix),
    /// The whole class was searched and no member qualifies.
    Absent,
    /// The class is larger than the budget.
    Undetermined,
}

/// First enumerated member whose t-term ranks equal `ρ̃_k` for all
/// `k = 1..=t_max`. `Absent` only when the whole class was searched.
pub fn find_uniform_minimizer(
    r: &Partition,
    s: &Partition,
    t_max: usize,
    budget: usize,
) -> Result<Search> {
    let tables = ClassTables::new(r, s)?;
    let minima = (1..=t_max)
        .map(|k| tables.min_t_term_rank(k).map(|mr| mr.value))
        .collect::<Result<Vec<_>>>()?;
    let mut stream = enumerate_class(r, s, Some(budget));
    let hit = stream.by_ref().find(|a| {
        minima
            .iter()
            .zip(1..)
            .all(|(&target, k)| t_term_rank(a, k) == target)
    });
    Ok(match hit {
        Some(a) => Search::Found(a),
        None if stream.truncated() => Search::Undetermined,
        None => Search::Absent,
    })
}
