//! Graph classes given by connected node sets on subdivided pattern graphs
//! (H-graphs): representations and their verification, the Helly bound,
//! maximum clique on Helly and cactus H-graphs, the hardness construction,
//! and tree-decomposition based solvers for k-clique and list coloring.

pub mod clique;
pub mod error;
pub mod fpt;
pub mod generate;
pub mod graph;
pub mod pattern;
pub mod representation;

pub use error::{Error, Result};
pub use graph::{Multigraph, SimpleGraph, Vertex};
