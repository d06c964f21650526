//! Exact combinatorics for symbols of Weyl groups of types B and D.
//!
//! The crate enumerates the symbol sets `Sym_n`, `Sym'_n` and `Sym''_n`,
//! splits them into families, singles out the special and antispecial
//! members of each family, and carries the oriented cell graphs together
//! with the unitriangular system that counts left cells.
//!
//! Numeric routines that do not depend on the symbol machinery
//! ([`tableaux::catalan`], [`graphs::solve_left_cell_counts`]) are generic
//! over the scalar type; the aliases below fix the scalar used by default.

pub mod exceptional;
pub mod f2_lattice;
pub mod family;
pub mod graphs;
pub mod lifting;
pub mod limits;
pub mod symbols_b;
pub mod symbols_d;
pub mod tableaux;
pub mod text;
pub mod verify;

pub use exceptional::{ExceptionalFamily, UnknownSize};
pub use f2_lattice::{F2Subspace, LatticeError, SubspaceCatalog};
pub use family::{Family, FamilyReport};
pub use graphs::{CellGraph, GraphError, MultiplicitySolution, Vertex};
pub use lifting::{LiftError, LiftPair};
pub use limits::Limits;
pub use symbols_b::{BSymbol, DescentData, SymbolError};
pub use symbols_d::{DDescentData, DKind, DSymbol};
pub use tableaux::{TableauError, TwoRowTableau};

/// Exact count type used for Catalan numbers and binomials.
pub type Count = num_bigint::BigUint;

/// Left-cell counts in machine integers; adequate for every shipped catalog.
pub type LeftCellCounts = MultiplicitySolution<i64>;

/// Left-cell counts in arbitrary precision, for user-supplied graphs with
/// large dimensions.
pub type ExactLeftCellCounts = MultiplicitySolution<num_bigint::BigInt>;
