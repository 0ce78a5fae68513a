//! Graded Frobenius images of orbit harmonics rings for rook placement
//! loci `Z_{n,m,r}`, upper rook loci `UZ_{n,m,r}` and involution loci
//! `M_{n,a}`.
//!
//! The crate has two independent halves. [`formulas`] evaluates closed-form
//! Schur expansions (signed, sign-free via lattice paths, upper-rook,
//! involution). [`repr`] recomputes the same graded characters from scratch by
//! exact linear algebra on the finite loci and symmetric-group character
//! theory. [`conjectures`] compares graded pieces across parameters.

pub mod cli;
pub mod conjectures;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod loci;
pub mod partitions;
pub mod report;
pub mod repr;
pub mod selftest;
pub mod symfunc;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use symfunc::{DoublySchurExpansion, QPoly, SchurExpansion};
