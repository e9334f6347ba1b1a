//! Simple graphs, pattern multigraphs, subdivision and complement
//! constructions, color lists, and the brute-force oracles.

mod lists;
mod multi;
pub mod oracle;
mod simple;
mod subdivision;

pub use lists::{is_valid_list_coloring, Color, ColorLists};
pub use multi::Multigraph;
pub use oracle::{list_coloring_bruteforce, max_clique_bruteforce, OracleConfig};
pub(crate) use simple::{better_clique, sort_sets};
pub use simple::{complement, SimpleGraph, Vertex};
pub use subdivision::{two_subdivision, LabeledTwoSubdivision};
