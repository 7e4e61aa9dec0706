//! Minimum neighborhood total dominating sets.
//!
//! A set `D` is a neighborhood total dominating set (NTD-set) when it
//! dominates the graph and the subgraph induced by `N(D)` has no isolated
//! vertex. The crate offers an exhaustive solver for small graphs, a linear
//! solver for proper interval graphs, a greedy approximation, and the
//! hardness constructions with their certificate maps.

pub mod approx;
pub mod cli;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pig;
pub mod reductions;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use verify::{Kind, VerifyReport};
