use crate::error::{Error, Result};
use crate::fpt::{from_elimination_ordering, TreeDecomposition};
use crate::graph::SimpleGraph;
use crate::pattern::PatternProfile;
use crate::representation::{verify_representation, HRepresentation, SubdividedPattern, Verdict};

/// Tree decomposition of `g` derived from an H-representation.
///
/// A decomposition of the subdivided pattern is built first: width 1 when it
/// is a forest, otherwise the pattern decomposition of `profile` with a chain
/// of width-2 bags hung off a bag holding both ends of every subdivided edge.
/// Each node bag is then replaced by the vertices whose sets meet it.
pub fn td_from_representation(
    g: &SimpleGraph,
    r: &HRepresentation,
    profile: &PatternProfile,
) -> Result<TreeDecomposition> {
    if profile.pattern != *r.pattern().base() {
        return Err(Error::InvalidRepresentation(
            "profile was computed for a different pattern".into(),
        ));
    }
    match verify_representation(g, r)? {
        Verdict::Ok => {}
        bad => return Err(Error::VerificationFailed(bad)),
    }
    let skeleton = r.pattern().skeleton();
    let node_td = if skeleton.is_forest() {
        forest_decomposition(skeleton)
    } else {
        subdivided_decomposition(r.pattern(), &profile.decomposition)
    };
    debug_assert!(node_td.validate(skeleton).is_ok());
    let holders = r.holders();
    let td = node_td.map_bags(|bag| {
        let mut vs: Vec<usize> = bag
            .iter()
            .flat_map(|&x| holders[x].iter().copied())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    });
    Ok(td.compress())
}

/// Width-1 decomposition of a forest: eliminate every node after its BFS
/// descendants, so each bag is a node with its parent.
fn forest_decomposition(f: &SimpleGraph) -> TreeDecomposition {
    let mut order = Vec::with_capacity(f.n());
    for comp in f.components() {
        let mut seen = vec![false; f.n()];
        let mut queue = std::collections::VecDeque::from([comp[0]]);
        seen[comp[0]] = true;
        let mut bfs = Vec::with_capacity(comp.len());
        while let Some(x) = queue.pop_front() {
            bfs.push(x);
            for y in f.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        order.extend(bfs.into_iter().rev());
    }
    from_elimination_ordering(f, &order)
}

fn subdivided_decomposition(
    pattern: &SubdividedPattern,
    base: &TreeDecomposition,
) -> TreeDecomposition {
    let mut bags: Vec<Vec<usize>> = base.bags().to_vec();
    let mut edges: Vec<(usize, usize)> = base.tree_edges().to_vec();
    for (e, &t) in pattern.subdivisions().iter().enumerate() {
        if t == 0 {
            continue;
        }
        let (u, v) = pattern.base().endpoints(e);
        let host = bags
            .iter()
            .position(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
            .expect("adjacent pattern nodes share a bag");
        let x = |i: usize| pattern.path_node(e, u, i);
        let mut prev = host;
        let mut push = |bag: Vec<usize>, bags: &mut Vec<Vec<usize>>| {
            let mut bag = bag;
            bag.sort_unstable();
            bags.push(bag);
            edges.push((prev, bags.len() - 1));
            prev = bags.len() - 1;
        };
        push(vec![u, v, x(1)], &mut bags);
        for i in 1..t {
            push(vec![x(i), x(i + 1), v], &mut bags);
        }
    }
    TreeDecomposition::new(bags, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use crate::pattern::find_tripartition;
    use crate::representation::generate_hard_instance;

    #[test]
    fn path_pattern_gives_interval_decomposition() {
        let pattern = SubdividedPattern::new(Multigraph::complete(2), vec![3]).unwrap();
        // path 0 - 2 - 3 - 4 - 1
        let r = HRepresentation::new(
            pattern,
            vec![vec![0, 2], vec![2, 3, 4], vec![4, 1], vec![3]],
        )
        .unwrap();
        let g = r.intersection_graph();
        let profile = PatternProfile::new(&Multigraph::complete(2)).unwrap();
        let td = td_from_representation(&g, &r, &profile).unwrap();
        td.validate(&g).unwrap();
        assert!(td.width() <= 2);
    }

    #[test]
    fn hard_instance_width_within_bound() {
        let h = Multigraph::double_triangle();
        let part = find_tripartition(&h, 15).unwrap().unwrap();
        let inst = generate_hard_instance(&SimpleGraph::cycle(5), &h, &part).unwrap();
        let profile = PatternProfile::new(&h).unwrap();
        let td = td_from_representation(&inst.target, &inst.representation, &profile).unwrap();
        td.validate(&inst.target).unwrap();
        let omega = crate::graph::max_clique_bruteforce(&inst.target, &Default::default())
            .unwrap()
            .len();
        assert!(td.width() <= profile.bound(omega));
    }

    #[test]
    fn rejects_bad_representation() {
        let pattern = SubdividedPattern::unsubdivided(Multigraph::complete(2));
        let r = HRepresentation::new(pattern, vec![vec![0], vec![1]]).unwrap();
        let g = SimpleGraph::complete(2);
        let profile = PatternProfile::new(&Multigraph::complete(2)).unwrap();
        assert!(matches!(
            td_from_representation(&g, &r, &profile),
            Err(Error::VerificationFailed(Verdict::Mismatch(_)))
        ));
    }
}
