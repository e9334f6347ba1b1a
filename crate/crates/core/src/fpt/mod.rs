//! Tree decompositions and the treewidth-based solvers for k-clique and
//! list k-coloring.

mod coloring;
mod decomposition;
mod kclique;
mod nice;
mod width;

pub use coloring::{list_k_coloring, solve_list_coloring};
pub(crate) use decomposition::is_subset;
pub use decomposition::{from_elimination_ordering, TreeDecomposition};
pub use kclique::{k_clique, k_clique_in_class, max_clique_in_bags, KCliqueOutcome};
pub use nice::{make_nice, NiceKind, NiceNode, NiceTreeDecomposition};
pub use width::{
    contraction_degeneracy, degeneracy, exact_treewidth, heuristic_decomposition,
    min_fill_ordering, tree_decomposition, treewidth_lower_bound, DecompositionAttempt,
    DecompositionConfig,
};
