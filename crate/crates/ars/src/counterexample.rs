//! Reproduction of the 9 x 15 class that has no uniform t-term-rank
//! minimizer.

use ars_core::flow::multi_cover_feasible;
use ars_core::partition::is_nonempty;
use ars_core::structure::nonempty_by_structure;
use ars_core::{ClassTables, CoverSpec, Partition, StructureTable};
use itertools::Itertools;
use serde::Serialize;

pub const ROWS: [usize; 9] = [6, 5, 4, 3, 3, 2, 2, 1, 1];
pub const COLS: [usize; 15] = [7, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1];

/// ρ̃_t for t = 1..=6 with the `(e, f)` of the smallest `e` attaining it.
pub const MINIMA: [(usize, usize, usize); 6] = [
    (6, 3, 3),
    (9, 2, 5),
    (11, 2, 5),
    (13, 1, 9),
    (14, 1, 9),
    (15, 0, 15),
];

const STRUCTURE: &str = include_str!("../data/counterexample_structure.txt");
const PHI: &str = include_str!("../data/counterexample_phi.txt");

pub fn class() -> (Partition, Partition) {
    (
        Partition::new(ROWS.to_vec()).unwrap(),
        Partition::new(COLS.to_vec()).unwrap(),
    )
}

pub fn golden_structure() -> Vec<Vec<i64>> {
    parse_grid(STRUCTURE)
}

pub fn golden_phi() -> Vec<Vec<i64>> {
    parse_grid(PHI)
}

fn parse_grid(src: &str) -> Vec<Vec<i64>> {
    src.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse().expect("golden table entry"))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_owned(),
            passed,
            detail: detail.into(),
        }
    }
}

fn table_check(name: &str, got: &StructureTable, want: &[Vec<i64>]) -> Check {
    let rows = got.to_rows();
    match rows
        .iter()
        .zip(want)
        .enumerate()
        .find_map(|(k, (g, w))| g.iter().zip(w).position(|(a, b)| a != b).map(|l| (k, l)))
    {
        None if rows.len() == want.len() => Check::new(
            name,
            true,
            format!("{} x {} entries match", rows.len(), rows[0].len()),
        ),
        None => Check::new(
            name,
            false,
            format!("{} rows, expected {}", rows.len(), want.len()),
        ),
        Some((k, l)) => Check::new(
            name,
            false,
            format!("entry ({k},{l}) is {}, expected {}", rows[k][l], want[k][l]),
        ),
    }
}

/// Runs every check. The class is far too large to enumerate, so absence is
/// only established for matrices covered by the minimizing prefix covers.
pub fn verify() -> Vec<Check> {
    let (r, s) = class();
    let mut checks = Vec::new();

    let tables = match ClassTables::new(&r, &s) {
        Ok(t) => t,
        Err(e) => return vec![Check::new("nonempty", false, e.to_string())],
    };
    let by_structure = nonempty_by_structure(tables.structure());
    checks.push(Check::new(
        "nonempty",
        is_nonempty(&r, &s) && by_structure,
        format!(
            "Gale-Ryser and structure matrix agree, min t = {}",
            tables.structure().min_entry()
        ),
    ));
    checks.push(table_check(
        "structure table",
        tables.structure(),
        &golden_structure(),
    ));
    checks.push(table_check("phi table", tables.phi(), &golden_phi()));

    let mut witness_sets = Vec::new();
    for (t, &(value, e, f)) in (1..).zip(&MINIMA) {
        let name = format!("min rank t={t}");
        match (tables.min_t_term_rank(t), tables.min_rank_witnesses(t)) {
            (Ok(got), Ok(witnesses)) => {
                let ok = got.value == value && (got.e, got.f) == (e, f);
                checks.push(Check::new(
                    &name,
                    ok,
                    format!(
                        "{} = {t}*{} + {}, witnesses {witnesses:?}",
                        got.value, got.e, got.f
                    ),
                ));
                witness_sets.push(witnesses);
            }
            (Err(err), _) | (_, Err(err)) => checks.push(Check::new(&name, false, err.to_string())),
        }
    }

    match tables.uniform_minimizer_hypotheses(MINIMA.len()) {
        Ok(h) => checks.push(Check::new(
            "constructive hypotheses fail",
            !h.holds,
            format!("f = {}, f' = {}", h.f, h.f_prime),
        )),
        Err(err) => checks.push(Check::new(
            "constructive hypotheses fail",
            false,
            err.to_string(),
        )),
    }

    if witness_sets.len() == MINIMA.len() {
        let mut tried = 0;
        let mut found = Vec::new();
        for combo in witness_sets.iter().multi_cartesian_product() {
            tried += 1;
            let covers: Vec<CoverSpec> = combo
                .iter()
                .map(|&&(e, f)| CoverSpec::prefix(e, f))
                .collect();
            match multi_cover_feasible(&r, &s, &covers) {
                Ok(None) => {}
                Ok(Some(_)) => found.push(format!("{combo:?}")),
                Err(err) => found.push(err.to_string()),
            }
        }
        let detail = if found.is_empty() {
            format!("{tried} witness combinations, none simultaneously coverable")
        } else {
            format!("feasible: {}", found.join("; "))
        };
        checks.push(Check::new(
            "no common prefix cover",
            found.is_empty(),
            detail,
        ));
    }
    checks
}
