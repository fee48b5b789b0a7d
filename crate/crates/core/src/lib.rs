//! Ordered Ramsey numbers: ordered graphs, edge colorings, order-preserving
//! containment, explicit avoiding colorings, exact search and closed-form
//! bounds.

pub mod analysis;
pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod containment;
pub mod embedding;
pub mod error;
pub mod format;
pub mod graph;
pub mod scheme;
pub mod solver;

pub use coloring::{Color, EdgeColoring};
pub use containment::{Avoidance, Demand, Embedding};
pub use error::{Error, Result};
pub use graph::OrderedGraph;
pub use scheme::{build_scheme, C4Ordering, SchemeSpec};
