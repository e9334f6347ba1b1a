//! Maximum clique on H-graphs: capped maximal-clique enumeration, the Helly
//! bound test, clique-cutset decomposition, circular-arc models and the
//! cactus pipeline.

mod arcs;
mod atoms;
mod cactus;
mod enumerate;
mod helly;

pub use arcs::{carc_max_clique, Arc, ArcKind, ArcModel};
pub use atoms::{clique_cutset_decomposition, minimal_elimination_ordering, AtomDecomposition};
pub use cactus::{cactus_atom_arc_model, clique_cactus};
pub use enumerate::{
    max_clique_within, maximal_cliques, maximal_cliques_capped, CliqueEnumeration,
};
pub use helly::{clique_helly, helly_clique_bound, HellyCliqueResult};
