//! Knot-theoretic flocks and their link invariants.
//!
//! A *flock* is a para-associative ternary quasigroup; the knot-theoretic ones
//! (those satisfying the left/right nesting conditions) are exactly the tables
//! `[xyz] = x·y⁻¹·z·b` over a finite group with `b` central of order ≤ 2. This
//! crate builds them, classifies them up to isomorphism, colors closed-braid
//! diagrams by regions, and evaluates cocycle invariants with optional
//! orbit refinement under group actions on the coloring set.
//!
//! The crate is `no_std` (alloc required); all IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braid;
pub mod classify;
pub mod cochain;
pub mod coloring;
pub mod families;
pub mod group;
pub mod homology;
pub mod invariant;
pub mod loops;
pub mod matrix;
pub mod perm;
pub mod ternary;

pub use braid::{BraidError, BraidWord, ClosedBraidDiagram, CrossingRecord};
pub use classify::{CatalogEntry, CatalogError, FlockClass, GroupCatalog};
pub use cochain::{CochainError, CochainTable};
pub use coloring::{ActionSpec, Coloring, ColoringError, OrbitPartition};
pub use group::{FiniteGroup, GroupError, GroupIso, Permutation};
pub use homology::{Chain, HomologyError};
pub use invariant::{InvariantPolynomial, RefinedInvariant};
pub use loops::{LoopError, LoopTable};
pub use matrix::IntMatrix;
pub use ternary::{Axiom, FlockSpec, TernaryError, TernaryTable, Witness};
