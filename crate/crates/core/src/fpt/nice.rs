use crate::fpt::decomposition::TreeDecomposition;
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NiceKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted; this is the canonical vertex order for DP states.
    pub bag: Vec<Vertex>,
    pub children: Vec<usize>,
}

/// Rooted nice tree decomposition. Children always precede their parent in
/// `nodes`, so a forward scan is a valid bottom-up order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
    root: usize,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &NiceNode {
        &self.nodes[i]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Checks the structural rules of the nice form: empty leaf and root bags,
    /// single-vertex introduce/forget steps, and joins over equal bags.
    pub fn check_shape(&self) -> Result<(), String> {
        if !self.nodes[self.root].bag.is_empty() {
            return Err("root bag is not empty".into());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= i) {
                return Err(format!("node {i} has a child that does not precede it"));
            }
            let child_bag = |j: usize| &self.nodes[node.children[j]].bag;
            let ok = match node.kind {
                NiceKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NiceKind::Introduce(v) => {
                    node.children.len() == 1 && {
                        let mut expect = child_bag(0).clone();
                        !expect.contains(&v) && {
                            expect.push(v);
                            expect.sort_unstable();
                            expect == node.bag
                        }
                    }
                }
                NiceKind::Forget(v) => {
                    node.children.len() == 1 && {
                        let mut expect = node.bag.clone();
                        !expect.contains(&v) && {
                            expect.push(v);
                            expect.sort_unstable();
                            &expect == child_bag(0)
                        }
                    }
                }
                NiceKind::Join => {
                    node.children.len() == 2
                        && child_bag(0) == &node.bag
                        && child_bag(1) == &node.bag
                }
            };
            if !ok {
                return Err(format!(
                    "node {i} ({:?}) breaks the nice-form rules",
                    node.kind
                ));
            }
        }
        Ok(())
    }

    /// Plain decomposition over the same nodes and bags.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition::new(bags, edges)
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceKind, bag: Vec<Vertex>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Forgets `from \ to`, then introduces `to \ from`, above node `at`.
    fn morph(&mut self, mut at: usize, to: &[Vertex]) -> usize {
        let mut bag = self.nodes[at].bag.clone();
        let forget: Vec<Vertex> = bag.iter().copied().filter(|v| !to.contains(v)).collect();
        for v in forget {
            bag.retain(|&x| x != v);
            at = self.push(NiceKind::Forget(v), bag.clone(), vec![at]);
        }
        for &v in to {
            if !bag.contains(&v) {
                bag.push(v);
                bag.sort_unstable();
                at = self.push(NiceKind::Introduce(v), bag.clone(), vec![at]);
            }
        }
        at
    }
}

/// Converts a valid decomposition into nice form rooted at bag 0.
///
/// Widths are preserved: every intermediate bag is a subset of an original bag.
pub fn make_nice(d: &TreeDecomposition) -> NiceTreeDecomposition {
    let adj = d.tree_adjacency();
    let b = d.bag_count();
    let mut b_parent = vec![usize::MAX; b];
    let mut order = Vec::with_capacity(b);
    let mut seen = vec![false; b];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                b_parent[y] = x;
                stack.push(y);
            }
        }
    }

    let mut builder = Builder { nodes: Vec::new() };
    let mut top = vec![usize::MAX; b];
    for &x in order.iter().rev() {
        let bag = d.bag(x).to_vec();
        let children: Vec<usize> = adj[x]
            .iter()
            .copied()
            .filter(|&y| b_parent[y] == x && y != b_parent[x])
            .collect();
        let mut branches: Vec<usize> = children
            .iter()
            .map(|&c| builder.morph(top[c], &bag))
            .collect();
        if branches.is_empty() {
            let leaf = builder.push(NiceKind::Leaf, Vec::new(), Vec::new());
            branches.push(builder.morph(leaf, &bag));
        }
        let mut acc = branches[0];
        for &next in &branches[1..] {
            acc = builder.push(NiceKind::Join, bag.clone(), vec![acc, next]);
        }
        top[x] = acc;
    }
    let root = builder.morph(top[0], &[]);
    NiceTreeDecomposition {
        nodes: builder.nodes,
        root,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn single_bag_chain() {
        let d = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]);
        let nice = make_nice(&d);
        nice.check_shape().unwrap();
        let kinds: Vec<NiceKind> = nice.nodes().iter().map(|n| n.kind).collect();
        assert_eq!(
            kinds,
            vec![
                NiceKind::Leaf,
                NiceKind::Introduce(0),
                NiceKind::Introduce(1),
                NiceKind::Introduce(2),
                NiceKind::Forget(0),
                NiceKind::Forget(1),
                NiceKind::Forget(2),
            ]
        );
        assert_eq!(nice.width(), 2);
    }

    #[test]
    fn star_gets_binary_joins() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = TreeDecomposition::new(
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]],
            vec![(0, 1), (0, 2), (0, 3)],
        );
        d.validate(&g).unwrap();
        let nice = make_nice(&d);
        nice.check_shape().unwrap();
        let joins = nice
            .nodes()
            .iter()
            .filter(|n| n.kind == NiceKind::Join)
            .count();
        assert_eq!(joins, 2);
        assert_eq!(nice.width(), d.width());
        nice.to_tree_decomposition().validate(&g).unwrap();
    }
}
