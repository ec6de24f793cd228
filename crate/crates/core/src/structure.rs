//! The structure matrix `T`, the `Φ` table, the two-cover quantity `ψ`, and
//! the existence criteria built from them.
//!
//! With `R = (R_1..R_m)` and `S = (S_1..S_n)`:
//!
//! ```text
//! t(k,l) = k*l - (S_1 + .. + S_l) + (R_{k+1} + .. + R_m)       0 <= k <= m, 0 <= l <= n
//! φ(k,l) = min t(i1, l+j2) + t(k+i2, j1) + (k-i1)(l-j1)
//!          over 0 <= i1 <= k <= k+i2 <= m and 0 <= j1 <= l <= l+j2 <= n
//! ```
//!
//! Some member of the class is covered by its first `e` rows and first `f`
//! columns exactly when `φ(e,f) = t(e,f)`, and the minimum t-term rank of the
//! class is the least `t*e + f` over such cells. `Φ` and `ψ` are evaluated by
//! direct minimisation over their index tuples.

use alloc::vec::Vec;
use core::fmt;

use crate::partition::is_nonempty;
use crate::{Error, Partition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// The structure matrix `T`.
    Structure,
    /// The `Φ` table.
    Phi,
}

/// An `(m+1) x (n+1)` integer table indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureTable {
    m: usize,
    n: usize,
    values: Vec<i64>,
    kind: TableKind,
}

impl StructureTable {
    fn from_fn(
        m: usize,
        n: usize,
        kind: TableKind,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        let mut values = Vec::with_capacity((m + 1) * (n + 1));
        for k in 0..=m {
            for l in 0..=n {
                values.push(f(k, l));
            }
        }
        Self { m, n, values, kind }
    }

    #[inline]
    pub fn get(&self, k: usize, l: usize) -> i64 {
        assert!(
            k <= self.m && l <= self.n,
            "table index ({k},{l}) out of range"
        );
        self.values[k * (self.n + 1) + l]
    }

    /// `m`, so the table has `m + 1` rows.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `n`, so the table has `n + 1` columns.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn min_entry(&self) -> i64 {
        self.values.iter().copied().min().unwrap_or(0)
    }

    pub fn row(&self, k: usize) -> &[i64] {
        &self.values[k * (self.n + 1)..(k + 1) * (self.n + 1)]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..=self.m).map(|k| self.row(k).to_vec()).collect()
    }
}

impl fmt::Display for StructureTable {
    /// Aligned grid with 0-based row and column headers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = |x: i64| {
            let mut width = if x < 0 { 2 } else { 1 };
            let mut v = x.unsigned_abs();
            while v >= 10 {
                v /= 10;
                width += 1;
            }
            width
        };
        let cell = self
            .values
            .iter()
            .map(|&v| digits(v))
            .chain([digits(self.n as i64)])
            .max()
            .unwrap_or(1);
        let head = digits(self.m as i64);
        write!(f, "{:>head$} |", "")?;
        for l in 0..=self.n {
            write!(f, " {l:>cell$}")?;
        }
        for k in 0..=self.m {
            write!(f, "\n{k:>head$} |")?;
            for v in self.row(k) {
                write!(f, " {v:>cell$}")?;
            }
        }
        Ok(())
    }
}

fn check_weights(r: &Partition, s: &Partition) -> Result<()> {
    if r.weight() != s.weight() {
        return Err(Error::WeightMismatch {
            rows: r.weight(),
            cols: s.weight(),
        });
    }
    Ok(())
}

/// The structure matrix `T(R, S)`.
pub fn structure_matrix(r: &Partition, s: &Partition) -> Result<StructureTable> {
    check_weights(r, s)?;
    let (m, n) = (r.len(), s.len());
    let mut col_prefix = Vec::with_capacity(n + 1);
    col_prefix.push(0i64);
    for &x in s.parts() {
        col_prefix.push(col_prefix.last().unwrap() + x as i64);
    }
    let mut row_suffix = Vec::with_capacity(m + 1);
    row_suffix.push(0i64);
    for &x in r.parts().iter().rev() {
        row_suffix.push(row_suffix.last().unwrap() + x as i64);
    }
    row_suffix.reverse();
    Ok(StructureTable::from_fn(
        m,
        n,
        TableKind::Structure,
        |k, l| (k * l) as i64 - col_prefix[l] + row_suffix[k],
    ))
}

/// Ford-Fulkerson criterion: the class is nonempty iff no entry of `T` is negative.
pub fn nonempty_by_structure(t: &StructureTable) -> bool {
    debug_assert_eq!(t.kind(), TableKind::Structure);
    t.min_entry() >= 0
}

fn phi_from(t: &StructureTable) -> StructureTable {
    let (m, n) = (t.m(), t.n());
    StructureTable::from_fn(m, n, TableKind::Phi, |k, l| {
        let mut best = i64::MAX;
        for i1 in 0..=k {
            for i2 in 0..=m - k {
                for j1 in 0..=l {
                    for j2 in 0..=n - l {
                        let v =
                            t.get(i1, l + j2) + t.get(k + i2, j1) + ((k - i1) * (l - j1)) as i64;
                        best = best.min(v);
                    }
                }
            }
        }
        best
    })
}

/// The `Φ` table of a nonempty class.
pub fn phi_matrix(r: &Partition, s: &Partition) -> Result<StructureTable> {
    Ok(ClassTables::new(r, s)?.phi)
}

fn psi_from(t: &StructureTable, a: usize, b: usize, c: usize, d: usize) -> Result<i64> {
    let (m, n) = (t.m(), t.n());
    if !(a < b && b <= m && c < d && d <= n) {
        return Err(Error::BadRange);
    }
    let mut best = i64::MAX;
    for i1 in 0..=a {
        for i2 in 0..=b - a {
            for i3 in 0..=m - b {
                for j1 in 0..=c {
                    for j2 in 0..=d - c {
                        for j3 in 0..=n - d {
                            let v = t.get(i1, d + j3)
                                + t.get(a + i2, c + j2)
                                + t.get(b + i3, j1)
                                + ((a - i1) * (d - c - j2)) as i64
                                + ((b - a - i2) * (c - j1)) as i64
                                + ((a - i1) * (c - j1)) as i64;
                            best = best.min(v);
                        }
                    }
                }
            }
        }
    }
    Ok(best)
}

/// `ψ(a,b; c,d)` for `0 <= a < b <= m`, `0 <= c < d <= n`.
pub fn psi(r: &Partition, s: &Partition, a: usize, b: usize, c: usize, d: usize) -> Result<i64> {
    psi_from(&structure_matrix(r, s)?, a, b, c, d)
}

/// A minimum t-term rank with a minimising cover shape `(e, f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinRank {
    pub value: usize,
    pub e: usize,
    pub f: usize,
}

/// Outcome of [`ClassTables::uniform_minimizer_hypotheses`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformHypotheses {
    pub holds: bool,
    /// Least `f` with `φ(2,f) = t(2,f)`.
    pub f: usize,
    /// Least `f'` with `φ(1,f') = t(1,f')`.
    pub f_prime: usize,
}

/// `T` and `Φ` of a nonempty class, computed once and queried many times.
#[derive(Debug, Clone)]
pub struct ClassTables {
    r: Partition,
    s: Partition,
    structure: StructureTable,
    phi: StructureTable,
}

impl ClassTables {
    /// Fails with `WeightMismatch` or `EmptyClass` (checked by Gale-Ryser first).
    pub fn new(r: &Partition, s: &Partition) -> Result<Self> {
        check_weights(r, s)?;
        if !is_nonempty(r, s) {
            return Err(Error::EmptyClass);
        }
        let structure = structure_matrix(r, s)?;
        let phi = phi_from(&structure);
        Ok(Self {
            r: r.clone(),
            s: s.clone(),
            structure,
            phi,
        })
    }

    pub fn r(&self) -> &Partition {
        &self.r
    }

    pub fn s(&self) -> &Partition {
        &self.s
    }

    pub fn m(&self) -> usize {
        self.r.len()
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    pub fn structure(&self) -> &StructureTable {
        &self.structure
    }

    pub fn phi(&self) -> &StructureTable {
        &self.phi
    }

    /// Some member of the class has all its 1s in the first `e` rows and first
    /// `f` columns.
    pub fn cover_exists(&self, e: usize, f: usize) -> Result<bool> {
        if e > self.m() || f > self.n() {
            return Err(Error::BadRange);
        }
        Ok(self.phi.get(e, f) == self.structure.get(e, f))
    }

    /// Minimum of `t*e + f` over cells with `φ(e,f) = t(e,f)`; ties go to the
    /// smallest `e`, then the smallest `f`.
    pub fn min_t_term_rank(&self, t: usize) -> Result<MinRank> {
        if t == 0 {
            return Err(Error::BadRange);
        }
        let mut best: Option<MinRank> = None;
        for e in 0..=self.m() {
            for f in 0..=self.n() {
                if self.phi.get(e, f) != self.structure.get(e, f) {
                    continue;
                }
                let value = t * e + f;
                if best.is_none_or(|b| value < b.value) {
                    best = Some(MinRank { value, e, f });
                }
            }
        }
        // (m, n) always qualifies, so `best` is set.
        Ok(best.expect("phi(m,n) = t(m,n) on a nonempty class"))
    }

    /// Every `(e, f)` attaining the minimum for `t`, in increasing `e`.
    pub fn min_rank_witnesses(&self, t: usize) -> Result<Vec<(usize, usize)>> {
        let best = self.min_t_term_rank(t)?.value;
        let mut out = Vec::new();
        for e in 0..=self.m() {
            for f in 0..=self.n() {
                if t * e + f == best && self.phi.get(e, f) == self.structure.get(e, f) {
                    out.push((e, f));
                }
            }
        }
        Ok(out)
    }

    pub fn psi(&self, a: usize, b: usize, c: usize, d: usize) -> Result<i64> {
        psi_from(&self.structure, a, b, c, d)
    }

    /// Some member is covered both by its first `e` rows and `f` columns and by
    /// its first `e'` rows and `f'` columns, where `e' < e` and `f < f'`:
    /// `ψ(e',e; f,f') >= t(e,f) + t(e',f')`.
    pub fn two_cover_exists(
        &self,
        e_prime: usize,
        e: usize,
        f: usize,
        f_prime: usize,
    ) -> Result<bool> {
        let lhs = self.psi(e_prime, e, f, f_prime)?;
        Ok(lhs >= self.structure.get(e, f) + self.structure.get(e_prime, f_prime))
    }

    fn least_cover_columns(&self, e: usize) -> usize {
        (0..=self.n())
            .find(|&f| self.phi.get(e, f) == self.structure.get(e, f))
            .expect("phi(e,n) = t(e,n) on a nonempty class")
    }

    /// Sufficient conditions under which a single member realises every
    /// minimum t-term rank for `k = 1..=t`: with `f`, `f'` the least column
    /// counts admitting covers with 2 rows and with 1 row, require
    /// `1 <= f < f' < n`, `S_f = .. = S_n = 1`, and each minimum equal to
    /// `k + f'` or `2k + f`.
    pub fn uniform_minimizer_hypotheses(&self, t: usize) -> Result<UniformHypotheses> {
        let (m, n) = (self.m(), self.n());
        if m <= 2 || n <= 2 {
            return Err(Error::DimensionTooSmall);
        }
        if t == 0 {
            return Err(Error::BadRange);
        }
        let f = self.least_cover_columns(2);
        let f_prime = self.least_cover_columns(1);
        let mut holds = 1 <= f && f < f_prime && f_prime < n;
        holds = holds && self.s.parts()[f - 1..].iter().all(|&x| x == 1);
        if holds {
            for k in 1..=t {
                let rho = self.min_t_term_rank(k)?.value;
                if rho != k + f_prime && rho != 2 * k + f {
                    holds = false;
                    break;
                }
            }
        }
        Ok(UniformHypotheses { holds, f, f_prime })
    }
}

pub fn min_t_term_rank(r: &Partition, s: &Partition, t: usize) -> Result<MinRank> {
    ClassTables::new(r, s)?.min_t_term_rank(t)
}

pub fn cover_exists(r: &Partition, s: &Partition, e: usize, f: usize) -> Result<bool> {
    ClassTables::new(r, s)?.cover_exists(e, f)
}

pub fn two_cover_exists(
    r: &Partition,
    s: &Partition,
    e_prime: usize,
    e: usize,
    f: usize,
    f_prime: usize,
) -> Result<bool> {
    ClassTables::new(r, s)?.two_cover_exists(e_prime, e, f, f_prime)
}

pub fn uniform_minimizer_hypotheses(
    r: &Partition,
    s: &Partition,
    t: usize,
) -> Result<UniformHypotheses> {
    ClassTables::new(r, s)?.uniform_minimizer_hypotheses(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn counterexample() -> (Partition, Partition) {
        (
            p(&[6, 5, 4, 3, 3, 2, 2, 1, 1]),
            p(&[7, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
        )
    }

    fn example_six() -> (Partition, Partition) {
        (p(&[4, 2, 2, 2, 1, 1, 1]), p(&[2, 2, 2, 2, 1, 1, 1, 1, 1]))
    }

    #[test]
    fn structure_anchors() {
        let (r, s) = counterexample();
        let t = structure_matrix(&r, &s).unwrap();
        assert_eq!(t.get(0, 0), 27);
        assert_eq!(t.get(3, 3), 8);
        assert_eq!(t.get(9, 15), 108);
        assert_eq!(t.get(0, 15), 0);
        assert!(nonempty_by_structure(&t));
    }

    #[test]
    fn structure_single_cell() {
        let t = structure_matrix(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(t.to_rows(), [[1, 0], [0, 0]]);
        assert!(nonempty_by_structure(&t));
    }

    #[test]
    fn structure_detects_empty_class() {
        let t = structure_matrix(&p(&[2, 2]), &p(&[3, 1])).unwrap();
        assert_eq!(t.get(0, 1), 1);
        assert_eq!(t.get(1, 1), 0);
        assert_eq!(t.get(2, 1), -1);
        assert!(!nonempty_by_structure(&t));
    }

    #[test]
    fn weight_mismatch() {
        assert_eq!(
            structure_matrix(&p(&[2]), &p(&[1])),
            Err(Error::WeightMismatch { rows: 2, cols: 1 })
        );
        assert_eq!(
            psi(&p(&[2]), &p(&[1]), 0, 1, 0, 1),
            Err(Error::WeightMismatch { rows: 2, cols: 1 })
        );
    }

    #[test]
    fn phi_anchors() {
        let (r, s) = counterexample();
        let phi = phi_matrix(&r, &s).unwrap();
        assert_eq!(phi.get(1, 9), 9);
        assert_eq!(phi.get(2, 5), 9);
        assert_eq!(phi.get(3, 3), 8);
        assert_eq!(phi.get(3, 2), 5);
        assert!(phi.row(0).iter().all(|&v| v == 0));
        let t = structure_matrix(&r, &s).unwrap();
        assert_eq!(t.get(3, 2), 8);
    }

    #[test]
    fn phi_single_cell() {
        let phi = phi_matrix(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(phi.get(1, 1), 0);
        assert_eq!(phi_matrix(&p(&[2, 2]), &p(&[3, 1])), Err(Error::EmptyClass));
    }

    #[test]
    fn counterexample_minima() {
        let (r, s) = counterexample();
        let tables = ClassTables::new(&r, &s).unwrap();
        let got: Vec<_> = (1..=6)
            .map(|t| tables.min_t_term_rank(t).unwrap())
            .collect();
        assert_eq!(
            got[0],
            MinRank {
                value: 6,
                e: 3,
                f: 3
            }
        );
        assert_eq!(
            got[2],
            MinRank {
                value: 11,
                e: 2,
                f: 5
            }
        );
        assert_eq!(got[5].value, 15);
        assert_eq!(tables.min_t_term_rank(0), Err(Error::BadRange));
    }

    #[test]
    fn counterexample_covers() {
        let (r, s) = counterexample();
        let tables = ClassTables::new(&r, &s).unwrap();
        assert!(tables.cover_exists(3, 3).unwrap());
        assert!(!tables.cover_exists(3, 2).unwrap());
        assert!(tables.cover_exists(9, 15).unwrap());
        assert_eq!(tables.cover_exists(10, 0), Err(Error::BadRange));
    }

    #[test]
    fn psi_small_regression() {
        // Frozen from exhaustive evaluation of the defining minimum.
        assert_eq!(
            psi(&p(&[2, 1]), &p(&[2, 1]), 0, 1, 0, 1).unwrap(),
            PSI_21_21_0101
        );
        assert_eq!(
            psi(&p(&[2, 1]), &p(&[2, 1]), 1, 1, 0, 1),
            Err(Error::BadRange)
        );
        assert_eq!(
            psi(&p(&[2, 1]), &p(&[2, 1]), 0, 1, 0, 3),
            Err(Error::BadRange)
        );
    }

    // Frozen from a separate evaluation of the 6-tuple minimum over
    // T = [[3,1,0],[1,0,0],[0,0,1]].
    const PSI_21_21_0101: i64 = 0;

    #[test]
    fn example_six_two_cover() {
        let (r, s) = example_six();
        let tables = ClassTables::new(&r, &s).unwrap();
        let t = tables.structure();
        assert_eq!(tables.psi(2, 3, 3, 4).unwrap(), 15);
        assert_eq!(t.get(3, 3) + t.get(2, 4), 15);
        assert!(tables.two_cover_exists(2, 3, 3, 4).unwrap());
        assert!(tables.two_cover_exists(0, 7, 0, 9).unwrap());
    }

    #[test]
    fn hypotheses_fail_on_counterexample() {
        let (r, s) = counterexample();
        let h = uniform_minimizer_hypotheses(&r, &s, 6).unwrap();
        assert!(!h.holds);
        assert_eq!((h.f, h.f_prime), (5, 9));
        assert_eq!(
            uniform_minimizer_hypotheses(&p(&[2, 1]), &p(&[2, 1]), 1),
            Err(Error::DimensionTooSmall)
        );
    }

    #[test]
    fn table_display() {
        let t = structure_matrix(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(t.to_string(), "  | 0 1\n0 | 1 0\n1 | 0 0");
    }
}
