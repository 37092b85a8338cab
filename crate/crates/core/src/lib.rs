//! Constructive (Δ−1)-coloring of (P5, gem)-free graphs.

pub mod classify;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod instances;
pub mod pattern;
pub mod reductions;
pub mod solver;
pub mod structure;
pub mod trace;

pub use coloring::{verify_coloring, Coloring};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
