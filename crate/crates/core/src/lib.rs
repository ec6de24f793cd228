//! Analysis and construction of (0,1)-matrices with prescribed row and column
//! sums, centred on the minimum t-term ranks of a class `A(R, S)`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact integer
//! arithmetic.
//!
//! * [`partition`]: partitions, conjugation, majorization, Gale-Ryser.
//! * [`binmat`]: the matrix value type, interchanges and covers.
//! * [`structure`]: the structure matrix `T`, the `Φ` table, `ψ` and the
//!   existence criteria built on them.
//! * [`flow`]: max-flow computation of t-term ranks and bounded feasibility.
//! * [`construct`]: Ryser's canonical matrix, interchange paths and the
//!   zero-block constructions.
//! * [`oracle`]: brute-force ground truth used to cross-check everything else.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod binmat;
pub mod construct;
mod error;
pub mod flow;
pub mod oracle;
pub mod partition;
pub mod structure;

pub use binmat::{BinaryMatrix, CoverSpec, Interchange};
pub use error::Error;
pub use partition::Partition;
pub use structure::{ClassTables, StructureTable, TableKind};

pub type Result<T, E = Error> = core::result::Result<T, E>;
