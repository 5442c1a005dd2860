//! Diagram algebras: the partition algebra `P_k(n)` and its standard
//! subalgebras (Brauer, rook-Brauer, rook, Temperley-Lieb, Motzkin,
//! planar rook, planar partition, symmetric group).
//!
//! Modules build on each other bottom-up:
//!
//! * [`partitions`]: integer partitions, divisors, Stirling/Bell numbers, index sets.
//! * [`diagrams`]: set-partition diagrams, concatenation, families, enumeration.
//! * [`coeff`]: exact Laurent polynomials in `n` and linear combinations of diagrams.
//! * [`symrep`]: Young's natural representation of `S_m` and its characters.
//! * [`irreps`]: irreducible modules on symmetric m-diagrams and on set-partition tableaux.
//! * [`characters`]: class diagrams, fixed points, closed-form characters and tables.
//! * [`verify`]: self-check suites shared by the command-line tool.
//! * [`cli`]: the `diagramalg` command-line front end.

pub mod characters;
pub mod cli;
pub mod coeff;
pub mod diagrams;
mod error;
pub mod irreps;
pub mod partitions;
pub mod symrep;
pub mod verify;

pub use error::{Error, Result};
