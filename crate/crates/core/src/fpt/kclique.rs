use crate::clique::max_clique_within;
use crate::error::Result;
use crate::fpt::decomposition::TreeDecomposition;
use crate::fpt::width::{tree_decomposition, DecompositionAttempt, DecompositionConfig};
use crate::graph::{better_clique, SimpleGraph, Vertex};

/// Finds a clique of exactly `k` vertices, or `None` if `g` has none.
///
/// The vertices of a clique carry pairwise intersecting subtrees of the
/// decomposition tree, which share a bag, so searching bag by bag is complete.
pub fn k_clique(g: &SimpleGraph, k: usize, d: &TreeDecomposition) -> Result<Option<Vec<Vertex>>> {
    d.validate(g)?;
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    for bag in d.bags() {
        if bag.len() < k {
            continue;
        }
        let mut clique = max_clique_within(g, bag);
        if clique.len() >= k {
            clique.truncate(k);
            assert!(g.is_clique(&clique));
            return Ok(Some(clique));
        }
    }
    Ok(None)
}

/// Maximum clique of `g` by scanning the bags of `d`.
pub fn max_clique_in_bags(g: &SimpleGraph, d: &TreeDecomposition) -> Result<Vec<Vertex>> {
    d.validate(g)?;
    let mut best: Vec<Vertex> = Vec::new();
    for bag in d.bags() {
        if bag.len() < best.len() {
            continue;
        }
        let clique = max_clique_within(g, bag);
        if better_clique(&clique, &best) {
            best = clique;
        }
    }
    assert!(g.is_clique(&best));
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KCliqueOutcome {
    Found(Vec<Vertex>),
    Absent,
    /// No decomposition of width `f(k)` exists (treewidth is at least
    /// `lower_bound`). If `g` belongs to the class `tw <= f(omega)`, it must then
    /// contain a `k`-clique; no witness is produced.
    PromisedByClass {
        lower_bound: usize,
    },
}

/// k-clique on a treewidth-bounded class with bound function `f`.
pub fn k_clique_in_class<F>(
    g: &SimpleGraph,
    k: usize,
    f: F,
    cfg: &DecompositionConfig,
) -> Result<KCliqueOutcome>
where
    F: Fn(usize) -> usize,
{
    match tree_decomposition(g, f(k), cfg) {
        DecompositionAttempt::WidthExceeded { lower_bound } => {
            Ok(KCliqueOutcome::PromisedByClass { lower_bound })
        }
        DecompositionAttempt::Found { decomposition, .. } => {
            Ok(match k_clique(g, k, &decomposition)? {
                Some(c) => KCliqueOutcome::Found(c),
                None => KCliqueOutcome::Absent,
            })
        }
    }
}
