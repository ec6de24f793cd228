//! Subcommand dispatch and result rendering.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use ars_core::construct::{
    modified_ryser, normalize_covers, ryser_canonical, two_cover_construct, uniform_minimizer,
};
use ars_core::flow::t_term_rank;
use ars_core::oracle::{
    brute_t_term_rank, enumerate_class, find_uniform_minimizer, Search, DEFAULT_BUDGET,
};
use ars_core::partition::is_nonempty;
use ars_core::structure::{nonempty_by_structure, phi_matrix, psi, structure_matrix};
use ars_core::{BinaryMatrix, ClassTables, Error, Partition, StructureTable, TableKind};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::counterexample::{self, Check};
use crate::format::{self, MatrixJson};

/// Largest side for which `rank` also runs the exhaustive check.
pub const BRUTE_LIMIT: usize = 6;

pub const BUDGET_VAR: &str = "ARS_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "ars",
    version,
    about = "Minimum t-term ranks of (0,1)-matrix classes A(R,S)"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Class {
    /// Row sums, nonincreasing, comma-separated.
    #[arg(short, value_name = "PARTS")]
    r: Partition,
    /// Column sums, nonincreasing, comma-separated.
    #[arg(short, value_name = "PARTS")]
    s: Partition,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether A(R,S) is nonempty.
    Nonempty(Class),
    /// Ryser's canonical member of A(R,S).
    Canonical(Class),
    /// The structure table t(k,l).
    Structure(Class),
    /// The table φ(k,l).
    Phi(Class),
    /// ψ(a,b;c,d) for a < b <= m and c < d <= n.
    Psi {
        #[command(flatten)]
        class: Class,
        #[arg(short)]
        a: usize,
        #[arg(short)]
        b: usize,
        #[arg(short)]
        c: usize,
        #[arg(short)]
        d: usize,
    },
    /// Minimum t-term rank over the class, with the minimizing (e,f).
    MinRank {
        #[command(flatten)]
        class: Class,
        #[arg(short)]
        t: usize,
    },
    /// t-term rank of one matrix.
    Rank {
        #[arg(short)]
        t: usize,
        /// Matrix file in text or JSON format, `-` for stdin.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Member whose 1s lie in the first e rows and first f columns.
    ConstructCover {
        #[command(flatten)]
        class: Class,
        #[arg(short)]
        e: usize,
        #[arg(short)]
        f: usize,
    },
    /// Member covered by two prefix covers at once.
    ConstructTwoCover {
        #[command(flatten)]
        class: Class,
        /// A cover `e,f`; give exactly two.
        #[arg(long, value_name = "E,F", value_parser = parse_pair, num_args = 1)]
        cover: Vec<(usize, usize)>,
    },
    /// List (or count) the members of the class.
    Enumerate {
        #[command(flatten)]
        class: Class,
        #[arg(long)]
        budget: Option<usize>,
        /// Report only the count.
        #[arg(long)]
        count: bool,
    },
    /// Member attaining the minimum t-term rank for every t <= tmax.
    UniformMin {
        #[command(flatten)]
        class: Class,
        /// Defaults to the largest row sum.
        #[arg(long)]
        tmax: Option<usize>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Recompute the tables and minima of the 9 x 15 counterexample class.
    VerifyCounterexample,
}

fn parse_pair(src: &str) -> Result<(usize, usize), String> {
    let (e, f) = src
        .split_once(',')
        .ok_or_else(|| format!("expected `e,f`, found `{src}`"))?;
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad number `{x}`"))
    };
    Ok((num(e)?, num(f)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Infeasible,
    Undetermined,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Matrix(MatrixJson),
    Table {
        table: &'static str,
        m: usize,
        n: usize,
        rows: Vec<Vec<i64>>,
        #[serde(skip)]
        grid: String,
    },
    Integer {
        value: i64,
    },
    MinRank {
        t: usize,
        value: usize,
        e: usize,
        f: usize,
    },
    Rank {
        t: usize,
        value: usize,
        brute_checked: bool,
    },
    Nonempty {
        gale_ryser: bool,
        structure_nonnegative: bool,
        min_structure_entry: Option<i64>,
    },
    Enumeration {
        count: usize,
        truncated: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        matrices: Option<Vec<MatrixJson>>,
    },
    Report {
        checks: Vec<Check>,
    },
    Message {
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
    /// Usage error rather than a failed computation.
    #[serde(skip)]
    pub usage: bool,
}

impl CommandResult {
    fn ok(payload: Payload) -> Self {
        Self {
            status: Status::Ok,
            payload,
            usage: false,
        }
    }

    fn with(status: Status, text: impl Into<String>) -> Self {
        Self {
            status,
            payload: Payload::Message { text: text.into() },
            usage: false,
        }
    }

    fn usage(text: impl Into<String>) -> Self {
        Self {
            usage: true,
            ..Self::with(Status::Error, text)
        }
    }

    /// 0 unless the tool itself failed: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Error if self.usage => 2,
            Status::Error => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("payloads always serialize")
    }

    pub fn to_human(&self) -> String {
        match &self.payload {
            Payload::Matrix(m) => matrix_text(m),
            Payload::Table { grid, .. } => grid.clone(),
            Payload::Integer { value } => value.to_string(),
            Payload::MinRank { t, value, e, f } => format!("{value}\n= {t}*{e} + {f}"),
            Payload::Rank { value, .. } => value.to_string(),
            Payload::Nonempty {
                gale_ryser,
                structure_nonnegative,
                min_structure_entry,
            } => {
                let verdict = if *gale_ryser { "nonempty" } else { "empty" };
                let mut out = format!("{verdict}\nGale-Ryser: {gale_ryser}\nstructure nonnegative: {structure_nonnegative}");
                if let Some(v) = min_structure_entry {
                    let _ = write!(out, "\nmin structure entry: {v}");
                }
                out
            }
            Payload::Enumeration {
                count,
                truncated,
                matrices,
            } => {
                let mut out = format!(
                    "count {count}{}",
                    if *truncated { " (budget reached)" } else { "" }
                );
                for m in matrices.iter().flatten() {
                    out.push_str("\n\n");
                    out.push_str(&matrix_text(m));
                }
                out
            }
            Payload::Report { checks } => {
                let lines: Vec<String> = checks
                    .iter()
                    .map(|c| {
                        format!(
                            "{} {}: {}",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        )
                    })
                    .collect();
                lines.join("\n")
            }
            Payload::Message { text } => text.clone(),
        }
    }
}

fn matrix_text(m: &MatrixJson) -> String {
    let a: BinaryMatrix = m
        .clone()
        .try_into()
        .expect("payload matrices are well formed");
    format::to_text(&a)
}

fn matrix(a: &BinaryMatrix) -> CommandResult {
    CommandResult::ok(Payload::Matrix(a.into()))
}

fn table(t: &StructureTable) -> CommandResult {
    let table = match t.kind() {
        TableKind::Structure => "structure",
        TableKind::Phi => "phi",
    };
    CommandResult::ok(Payload::Table {
        table,
        m: t.m(),
        n: t.n(),
        rows: t.to_rows(),
        grid: t.to_string(),
    })
}

fn from_error(err: Error) -> CommandResult {
    match err {
        Error::EmptyClass
        | Error::WeightMismatch { .. }
        | Error::InfeasibleShift { .. }
        | Error::ResidualInfeasible => {
            CommandResult::with(Status::Infeasible, format!("infeasible: {err}"))
        }
        Error::VerificationFailed => CommandResult::with(Status::Error, err.to_string()),
        _ => CommandResult::usage(err.to_string()),
    }
}

fn budget(flag: Option<usize>) -> Result<usize, CommandResult> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CommandResult::usage(format!("{BUDGET_VAR}: bad budget `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Parses `argv` (program name first) and runs the subcommand. Never panics
/// on bad input; problems come back as `Status::Error`.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => dispatch(cli.command).unwrap_or_else(|r| r),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            CommandResult::ok(Payload::Message {
                text: e.to_string().trim_end().to_owned(),
            })
        }
        Err(e) => {
            let text = e.to_string();
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("usage error");
            CommandResult::usage(line.trim_start_matches("error: ").to_owned())
        }
    }
}

/// Whether `--json` appears before any `--` separator.
pub fn wants_json<T: AsRef<std::ffi::OsStr>>(argv: &[T]) -> bool {
    argv.iter()
        .map(AsRef::as_ref)
        .take_while(|a| *a != "--")
        .any(|a| a == "--json")
}

fn dispatch(command: Command) -> Result<CommandResult, CommandResult> {
    Ok(match command {
        Command::Nonempty(Class { r, s }) => {
            let gale_ryser = is_nonempty(&r, &s);
            let (structure_nonnegative, min_structure_entry) = match structure_matrix(&r, &s) {
                Ok(t) => (nonempty_by_structure(&t), Some(t.min_entry())),
                Err(_) => (false, None),
            };
            if gale_ryser != structure_nonnegative {
                return Err(CommandResult::with(
                    Status::Error,
                    "Gale-Ryser and structure matrix disagree",
                ));
            }
            let payload = Payload::Nonempty {
                gale_ryser,
                structure_nonnegative,
                min_structure_entry,
            };
            let status = if gale_ryser {
                Status::Ok
            } else {
                Status::Infeasible
            };
            CommandResult {
                status,
                payload,
                usage: false,
            }
        }
        Command::Canonical(Class { r, s }) => matrix(&ryser_canonical(&r, &s).map_err(from_error)?),
        Command::Structure(Class { r, s }) => table(&structure_matrix(&r, &s).map_err(from_error)?),
        Command::Phi(Class { r, s }) => table(&phi_matrix(&r, &s).map_err(from_error)?),
        Command::Psi {
            class: Class { r, s },
            a,
            b,
            c,
            d,
        } => CommandResult::ok(Payload::Integer {
            value: psi(&r, &s, a, b, c, d).map_err(from_error)?,
        }),
        Command::MinRank {
            class: Class { r, s },
            t,
        } => {
            let tables = ClassTables::new(&r, &s).map_err(from_error)?;
            let got = tables.min_t_term_rank(t).map_err(from_error)?;
            CommandResult::ok(Payload::MinRank {
                t,
                value: got.value,
                e: got.e,
                f: got.f,
            })
        }
        Command::Rank { t, matrix } => {
            if t == 0 {
                return Err(CommandResult::usage("t must be at least 1"));
            }
            let a =
                format::read_matrix(&matrix).map_err(|e| CommandResult::usage(format!("{e:#}")))?;
            let value = t_term_rank(&a, t);
            let brute_checked = a.nrows() <= BRUTE_LIMIT && a.ncols() <= BRUTE_LIMIT;
            if brute_checked && brute_t_term_rank(&a, t) != value {
                return Err(CommandResult::with(
                    Status::Error,
                    "flow and exhaustive ranks disagree",
                ));
            }
            CommandResult::ok(Payload::Rank {
                t,
                value,
                brute_checked,
            })
        }
        Command::ConstructCover {
            class: Class { r, s },
            e,
            f,
        } => {
            let tables = ClassTables::new(&r, &s).map_err(from_error)?;
            if !tables.cover_exists(e, f).map_err(from_error)? {
                return Err(CommandResult::with(
                    Status::Infeasible,
                    format!("no member is covered by ({e},{f})"),
                ));
            }
            matrix(&modified_ryser(&r, &s, e, f).map_err(from_error)?)
        }
        Command::ConstructTwoCover {
            class: Class { r, s },
            cover,
        } => {
            let [first, second] = cover[..] else {
                return Err(CommandResult::usage(format!(
                    "expected two --cover values, found {}",
                    cover.len()
                )));
            };
            let ((e_prime, f_prime), (e, f)) =
                normalize_covers(first, second).map_err(from_error)?;
            let tables = ClassTables::new(&r, &s).map_err(from_error)?;
            if !tables
                .two_cover_exists(e_prime, e, f, f_prime)
                .map_err(from_error)?
            {
                return Err(CommandResult::with(
                    Status::Infeasible,
                    format!("no member is covered by both ({e_prime},{f_prime}) and ({e},{f})"),
                ));
            }
            matrix(&two_cover_construct(&r, &s, first, second).map_err(from_error)?)
        }
        Command::Enumerate {
            class: Class { r, s },
            budget: flag,
            count,
        } => {
            let budget = budget(flag)?;
            let mut stream = enumerate_class(&r, &s, Some(budget));
            let matrices: Vec<MatrixJson> = if count {
                stream.by_ref().for_each(drop);
                Vec::new()
            } else {
                stream.by_ref().map(|a| MatrixJson::from(&a)).collect()
            };
            let truncated = stream.truncated();
            let count_value = stream.yielded();
            let status = match (truncated, count_value) {
                (true, _) => Status::Undetermined,
                (false, 0) => Status::Infeasible,
                (false, _) => Status::Ok,
            };
            let matrices = (!count).then_some(matrices);
            CommandResult {
                status,
                payload: Payload::Enumeration {
                    count: count_value,
                    truncated,
                    matrices,
                },
                usage: false,
            }
        }
        Command::UniformMin {
            class: Class { r, s },
            tmax,
            budget: flag,
        } => {
            let budget = budget(flag)?;
            let tmax = tmax.unwrap_or(r.largest()).max(1);
            if !is_nonempty(&r, &s) {
                return Err(CommandResult::with(
                    Status::Infeasible,
                    "infeasible: the class is empty",
                ));
            }
            if let Some(a) = uniform_minimizer(&r, &s, tmax).map_err(from_error)? {
                return Ok(matrix(&a));
            }
            match find_uniform_minimizer(&r, &s, tmax, budget).map_err(from_error)? {
                Search::Found(a) => matrix(&a),
                Search::Absent => CommandResult::with(Status::Infeasible, format!("absent: no member attains every minimum for t <= {tmax}")),
                Search::Undetermined => CommandResult::with(
                    Status::Undetermined,
                    format!("undetermined by enumeration: the class exceeds the budget of {budget} members"),
                ),
            }
        }
        Command::VerifyCounterexample => {
            let checks = counterexample::verify();
            let status = if checks.iter().all(|c| c.passed) {
                Status::Ok
            } else {
                Status::Error
            };
            CommandResult {
                status,
                payload: Payload::Report { checks },
                usage: false,
            }
        }
    })
}
