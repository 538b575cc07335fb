//! Finite groups, their power graphs, and connectivity invariants.
//!
//! The crate is organized around four layers:
//!
//! * [`groups`] — validated Cayley tables, group families, element orders,
//!   cyclic subgroups and structural classification.
//! * [`graph`] / [`powergraph`] — simple undirected graphs, power graph
//!   construction and graph surgery.
//! * [`connectivity`] — vertex/edge connectivity, minimum separating sets,
//!   minimal-(edge-)connectivity predicates, and brute-force oracles.
//! * [`theorems`] — executable statements of the characterization theorems
//!   and lemmas, plus catalog sweeps.

#![forbid(unsafe_code)]

pub mod connectivity;
pub mod graph;
pub mod groups;
pub mod powergraph;
pub mod theorems;

pub use connectivity::{analyze, AnalysisCaps, ConnectivityReport};
pub use graph::SimpleGraph;
pub use groups::{FiniteGroup, GroupError, GroupSpec};
pub use powergraph::PowerGraph;
pub use theorems::{sweep, CatalogSweepReport, StatementId, TheoremVerdict};
