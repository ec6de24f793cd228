use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A sequence is not a partition (increasing somewhere, or has a zero part).
    InvalidPartition,
    /// Rows of different lengths, or an entry outside {0,1}.
    InvalidMatrix,
    /// `R` and `S` have different sums.
    WeightMismatch { rows: usize, cols: usize },
    /// The class `A(R, S)` has no members.
    EmptyClass,
    /// The 2x2 submatrix is not `[[1,0],[0,1]]` or `[[0,1],[1,0]]`.
    InvalidInterchange,
    /// Index arguments out of their admissible range.
    BadRange,
    /// Shapes of the inputs do not agree.
    DimensionMismatch,
    /// A column-shifting step ran out of ones, or a row overflowed its live columns.
    InfeasibleShift { column: usize },
    /// The residual margins of a zero-block construction admit no matrix.
    ResidualInfeasible,
    /// The two covers are not strictly ordered (one dominates the other).
    BadCoverOrder,
    /// Both matrices must lie in the same class.
    NotSameClass,
    /// `m > 2` and `n > 2` are required.
    DimensionTooSmall,
    /// A constructed matrix failed its own verification.
    VerificationFailed,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition => {
                f.write_str("not a partition: parts must be positive and nonincreasing")
            }
            Error::InvalidMatrix => f.write_str("not a rectangular (0,1)-matrix"),
            Error::WeightMismatch { rows, cols } => {
                write!(f, "row sums total {rows} but column sums total {cols}")
            }
            Error::EmptyClass => f.write_str("the class A(R,S) is empty"),
            Error::InvalidInterchange => f.write_str("submatrix is not an interchange pattern"),
            Error::BadRange => f.write_str("index arguments out of range"),
            Error::DimensionMismatch => f.write_str("dimension mismatch"),
            Error::InfeasibleShift { column } => {
                write!(f, "column shift infeasible at column {column}")
            }
            Error::ResidualInfeasible => f.write_str("residual margins are infeasible"),
            Error::BadCoverOrder => f.write_str(
                "covers must satisfy e1 < e2 and f1 > f2 (one cover dominates the other)",
            ),
            Error::NotSameClass => f.write_str("matrices are not in the same class"),
            Error::DimensionTooSmall => f.write_str("requires more than two rows and two columns"),
            Error::VerificationFailed => f.write_str("constructed matrix failed verification"),
        }
    }
}

impl core::error::Error for Error {}
