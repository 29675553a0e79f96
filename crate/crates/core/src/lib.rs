//! Local antimagic total labelings of graphs.
//!
//! The crate builds graphs from named families, checks total and edge
//! labelings against the local antimagic condition (adjacent vertices get
//! different weights), constructs explicit labelings, moves labelings
//! between a graph and its cones, and computes the minimum number of
//! distinct weights exactly by branch and bound. Every labeling the crate
//! emits can be written out as a self-contained JSON certificate.

pub mod bounds;
pub mod cache;
pub mod cert;
pub mod cli;
pub mod constructions;
pub mod graph;
pub mod labeling;
pub mod solver;
pub mod transforms;

pub use graph::{FamilySpec, Graph};
pub use labeling::{EdgeLabeling, Labeling, Mode, TotalLabeling};
