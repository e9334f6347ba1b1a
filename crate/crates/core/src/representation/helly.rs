use crate::clique::{maximal_cliques_capped, CliqueEnumeration};
use crate::graph::Vertex;
use crate::representation::HRepresentation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HellyReport {
    Helly,
    /// Pairwise intersecting node sets with no common node.
    Violation(Vec<Vertex>),
    /// The intersection graph has more than `cap` maximal cliques.
    Exceeded(usize),
}

/// Checks the Helly property of the node sets of `r`.
///
/// Every pairwise intersecting family is a clique of the intersection graph
/// and sits inside a maximal clique, so it suffices that every maximal clique
/// has a common node. The first failing maximal clique (lexicographically) is
/// reported.
pub fn helly_check(r: &HRepresentation, cap: usize) -> HellyReport {
    let g = r.intersection_graph();
    match maximal_cliques_capped(&g, cap.max(1)) {
        CliqueEnumeration::Exceeded { cap, .. } => HellyReport::Exceeded(cap),
        CliqueEnumeration::Complete(cliques) => cliques
            .into_iter()
            .find(|c| r.common_nodes(c).is_empty())
            .map_or(HellyReport::Helly, HellyReport::Violation),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::ArcModel;
    use crate::generate::{arc_model_representation, cycle_pattern};
    use crate::graph::Multigraph;
    use crate::representation::SubdividedPattern;

    #[test]
    fn tree_patterns_are_helly() {
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let pattern = SubdividedPattern::new(star, vec![1, 2, 0]).unwrap();
        // nodes: 0 hub, 1..3 leaves, 4 on edge 0, 5 6 on edge 1
        let r = HRepresentation::new(
            pattern,
            vec![
                vec![0, 4],
                vec![0, 5],
                vec![0, 3],
                vec![4, 1],
                vec![5, 6, 2],
            ],
        )
        .unwrap();
        assert_eq!(helly_check(&r, 100), HellyReport::Helly);
    }

    #[test]
    fn three_arcs_violate() {
        // K3 with every edge subdivided once: cycle 0 - 3 - 1 - 5 - 2 - 4 - 0
        let pattern = SubdividedPattern::new(Multigraph::complete(3), vec![1, 1, 1]).unwrap();
        let r = HRepresentation::new(pattern, vec![vec![0, 3, 1], vec![1, 5, 2], vec![2, 4, 0]])
            .unwrap();
        assert_eq!(helly_check(&r, 100), HellyReport::Violation(vec![0, 1, 2]));
    }

    #[test]
    fn cocktail_party_exceeds_cap() {
        let model = ArcModel::cocktail_party(10);
        let r = arc_model_representation(&model, &cycle_pattern(model.len));
        assert_eq!(helly_check(&r, 50), HellyReport::Exceeded(50));
    }
}
