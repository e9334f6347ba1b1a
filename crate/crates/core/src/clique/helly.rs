use crate::clique::{maximal_cliques_capped, CliqueEnumeration};
use crate::graph::{better_clique, Multigraph, SimpleGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HellyCliqueResult {
    MaxClique(Vec<Vertex>),
    /// More maximal cliques were found than the bound allows; the count is
    /// the number emitted before stopping.
    NotHellyCertificate(usize),
}

/// The bound `|V(H)| + |E(H)| * |V(G)|` on the maximal cliques of a Helly H-graph.
pub fn helly_clique_bound(g: &SimpleGraph, h: &Multigraph) -> usize {
    h.node_count()
        .saturating_add(h.edge_count().saturating_mul(g.n()))
}

/// Maximum clique of a Helly H-graph without a representation: list the
/// maximal cliques up to the bound and keep the largest. Running past the
/// bound shows `g` has no Helly H-representation.
pub fn clique_helly(g: &SimpleGraph, h: &Multigraph) -> HellyCliqueResult {
    let bound = helly_clique_bound(g, h).max(1);
    match maximal_cliques_capped(g, bound) {
        CliqueEnumeration::Exceeded { found, .. } => {
            HellyCliqueResult::NotHellyCertificate(found.len())
        }
        CliqueEnumeration::Complete(cliques) => {
            let mut best: Vec<Vertex> = Vec::new();
            for c in cliques {
                if better_clique(&c, &best) {
                    best = c;
                }
            }
            assert!(
                g.is_clique(&best),
                "reported clique must be pairwise adjacent"
            );
            HellyCliqueResult::MaxClique(best)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_on_triangle() {
        let g = SimpleGraph::cycle(6);
        let h = Multigraph::complete(3);
        assert_eq!(helly_clique_bound(&g, &h), 21);
        assert_eq!(
            clique_helly(&g, &h),
            HellyCliqueResult::MaxClique(vec![0, 1])
        );
    }

    #[test]
    fn cocktail_party_is_rejected() {
        let g = SimpleGraph::cocktail_party(12);
        let h = Multigraph::complete(3);
        assert_eq!(helly_clique_bound(&g, &h), 75);
        assert_eq!(
            clique_helly(&g, &h),
            HellyCliqueResult::NotHellyCertificate(76)
        );
    }

    #[test]
    fn edgeless_graph() {
        let g = SimpleGraph::new(3);
        let h = Multigraph::new(1, vec![]).unwrap();
        // three disjoint sets need three pattern nodes
        assert_eq!(
            clique_helly(&g, &h),
            HellyCliqueResult::NotHellyCertificate(2)
        );
        let h3 = Multigraph::new(3, vec![]).unwrap();
        assert_eq!(clique_helly(&g, &h3), HellyCliqueResult::MaxClique(vec![0]));
        assert_eq!(
            clique_helly(&SimpleGraph::new(0), &h),
            HellyCliqueResult::MaxClique(vec![])
        );
    }
}
