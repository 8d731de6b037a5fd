//! Exact combinatorics of parking functions and their relatives.
//!
//! The crate simulates the standard parking procedure and its interval
//! variant, classifies preference lists into the families built on top of it
//! (rational parking functions, `l`-interval parking functions, Fubini
//! rankings, ...), counts every family with exact big-integer arithmetic, and
//! realizes the bijections with bounded-height Dyck paths and (barred)
//! preferential arrangements. An exhaustive desk-scale oracle cross-checks
//! all formulas and bijections.
//!
//! Spot and car indices are 1-based at every public boundary. All counts are
//! arbitrary-precision; there is no floating point anywhere.

pub mod arrange;
pub mod classify;
pub mod count;
pub mod error;
pub mod lattice;
pub mod numbers;
pub mod oracle;
pub mod simulate;
pub mod tuple;

pub use error::{Error, Result};
pub use numbers::Count;
