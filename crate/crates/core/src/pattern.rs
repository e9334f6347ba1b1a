//! Structural analysis of pattern graphs: cactus recognition, exact treewidth
//! of small patterns, and the three-way split used by the hardness construction.

use crate::error::{Error, Result};
use crate::fpt::{exact_treewidth, TreeDecomposition};
use crate::graph::{Multigraph, Vertex};

/// Default size limit for `treewidth_exact_small`.
pub const EXACT_TREEWIDTH_LIMIT: usize = 12;
/// Default size limit for `find_tripartition`.
pub const TRIPARTITION_LIMIT: usize = 15;

/// True iff every block of `h` is a single edge or a cycle. A pair of parallel
/// edges is a cycle of length two; loops are ignored.
pub fn is_cactus(h: &Multigraph) -> bool {
    blocks(h).iter().all(|block| {
        let mut nodes: Vec<usize> = block
            .iter()
            .flat_map(|&e| {
                let (u, v) = h.endpoints(e);
                [u, v]
            })
            .collect();
        nodes.sort_unstable();
        nodes.dedup();
        block.len() == 1 || block.len() == nodes.len()
    })
}

/// Biconnected components of `h` as sets of edge indices (loops excluded).
pub fn blocks(h: &Multigraph) -> Vec<Vec<usize>> {
    struct Dfs<'a> {
        h: &'a Multigraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: Vertex, via: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            let incident: Vec<(usize, Vertex)> = self.h.incident(u).collect();
            for (e, w) in incident {
                if Some(e) == via {
                    continue;
                }
                if self.disc[w] == 0 {
                    self.stack.push(e);
                    self.visit(w, Some(e));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = Vec::new();
                        while let Some(f) = self.stack.pop() {
                            block.push(f);
                            if f == e {
                                break;
                            }
                        }
                        block.sort_unstable();
                        self.out.push(block);
                    }
                } else if self.disc[w] < self.disc[u] {
                    self.stack.push(e);
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let n = h.node_count();
    let mut dfs = Dfs {
        h,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for s in 0..n {
        if dfs.disc[s] == 0 {
            dfs.visit(s, None);
        }
    }
    dfs.out
}

/// Exact treewidth of the simple skeleton of `h` with a witnessing decomposition.
pub fn treewidth_exact_small(h: &Multigraph, limit: usize) -> Result<(usize, TreeDecomposition)> {
    exact_treewidth(&h.skeleton(), limit)
}

/// A pattern together with its treewidth and the bound function
/// `f(omega) = (tw + 1) * omega - 1` on the treewidth of its H-graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternProfile {
    pub pattern: Multigraph,
    /// Treewidth of the skeleton, raised to 2 when parallel edges close a
    /// cycle in an otherwise acyclic skeleton (subdividing them yields a
    /// genuine cycle).
    pub tw: usize,
    /// Decomposition of the skeleton witnessing its exact treewidth.
    pub decomposition: TreeDecomposition,
}

impl PatternProfile {
    pub fn new(pattern: &Multigraph) -> Result<Self> {
        let (skeleton_tw, decomposition) = treewidth_exact_small(pattern, EXACT_TREEWIDTH_LIMIT)?;
        let tw = if pattern.is_forest() {
            skeleton_tw
        } else {
            skeleton_tw.max(2)
        };
        Ok(PatternProfile {
            pattern: pattern.clone(),
            tw,
            decomposition,
        })
    }

    /// `(tw + 1) * omega - 1`, saturating at 0 for `omega = 0`.
    pub fn bound(&self, omega: usize) -> usize {
        ((self.tw + 1) * omega).saturating_sub(1)
    }
}

/// Split of one connected component of a pattern into three connected parts
/// with at least two edges between every pair of parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriPartition {
    /// Sorted node sets `H1`, `H2`, `H3`.
    pub parts: [Vec<usize>; 3],
    /// Connecting edge indices for the pairs (1,2), (1,3), (2,3), ascending.
    pub links: [Vec<usize>; 3],
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl TriPartition {
    /// Index into `links` for the parts `i < j`.
    pub fn pair_index(i: usize, j: usize) -> usize {
        PAIRS.iter().position(|&p| p == (i, j)).expect("i < j < 3")
    }

    /// Re-checks every invariant against `h` from scratch.
    pub fn check(&self, h: &Multigraph) -> std::result::Result<(), String> {
        let n = h.node_count();
        let mut owner = vec![None; n];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(format!("part {} is empty", i + 1));
            }
            for &v in part {
                if v >= n {
                    return Err(format!("node {v} is not in the pattern"));
                }
                if owner[v].replace(i).is_some() {
                    return Err(format!("node {v} is in two parts"));
                }
            }
        }
        for (i, part) in self.parts.iter().enumerate() {
            let mut reached = vec![part[0]];
            let mut k = 0;
            while k < reached.len() {
                let u = reached[k];
                k += 1;
                for (_, w) in h.incident(u) {
                    if owner[w] == Some(i) && !reached.contains(&w) {
                        reached.push(w);
                    }
                }
            }
            if reached.len() != part.len() {
                return Err(format!("part {} is not connected", i + 1));
            }
        }
        let mut found: [Vec<usize>; 3] = Default::default();
        for (e, &(u, v)) in h.edges().iter().enumerate() {
            if u == v {
                continue;
            }
            match (owner[u], owner[v]) {
                (Some(a), Some(b)) if a != b => {
                    found[TriPartition::pair_index(a.min(b), a.max(b))].push(e)
                }
                (Some(_), None) | (None, Some(_)) => {
                    return Err(format!("edge {e} leaves the partitioned component"))
                }
                _ => {}
            }
        }
        for (p, (i, j)) in PAIRS.iter().enumerate() {
            if found[p].len() < 2 {
                return Err(format!(
                    "only {} edges join parts {} and {}",
                    found[p].len(),
                    i + 1,
                    j + 1
                ));
            }
            if found[p] != self.links[p] {
                return Err(format!(
                    "connecting edges of parts {} and {} are misreported",
                    i + 1,
                    j + 1
                ));
            }
        }
        Ok(())
    }
}

/// Exhaustive search, component by component, for a `TriPartition`.
///
/// Labelings are enumerated as restricted growth strings over the nodes of a
/// component in index order, which visits every partition once and in
/// lexicographic labeling order; the first valid one is returned.
pub fn find_tripartition(h: &Multigraph, limit: usize) -> Result<Option<TriPartition>> {
    let n = h.node_count();
    if n > limit {
        return Err(Error::SearchLimitExceeded { n, limit });
    }
    for comp in h.components() {
        if comp.len() < 3 {
            continue;
        }
        if let Some(p) = search_component(h, &comp) {
            debug_assert_eq!(p.check(h), Ok(()));
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn search_component(h: &Multigraph, comp: &[Vertex]) -> Option<TriPartition> {
    let n = h.node_count();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let edges: Vec<(usize, usize, usize)> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| u != v && local[u] != usize::MAX)
        .map(|(e, &(u, v))| (e, local[u], local[v]))
        .collect();
    let mut adj = vec![0u32; comp.len()];
    for &(_, a, b) in &edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let connected = |mask: u32| -> bool {
        let start = mask & mask.wrapping_neg();
        let mut reach = start;
        loop {
            let mut grown = reach;
            let mut it = reach;
            while it != 0 {
                grown |= adj[it.trailing_zeros() as usize] & mask;
                it &= it - 1;
            }
            if grown == reach {
                return reach == mask;
            }
            reach = grown;
        }
    };

    fn rec(
        i: usize,
        used: usize,
        labels: &mut Vec<usize>,
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == labels.len() {
            return used == 3 && accept(labels);
        }
        let remaining = labels.len() - i;
        for label in 0..=used.min(2) {
            let now = used.max(label + 1);
            if now + remaining - 1 < 3 {
                continue;
            }
            labels[i] = label;
            if rec(i + 1, now, labels, accept) {
                return true;
            }
        }
        false
    }

    let mut labels = vec![0; comp.len()];
    let mut accept = |labels: &[usize]| -> bool {
        let mut masks = [0u32; 3];
        for (i, &l) in labels.iter().enumerate() {
            masks[l] |= 1 << i;
        }
        let mut counts = [0usize; 3];
        for &(_, a, b) in &edges {
            let (la, lb) = (labels[a], labels[b]);
            if la != lb {
                counts[TriPartition::pair_index(la.min(lb), la.max(lb))] += 1;
            }
        }
        counts.iter().all(|&c| c >= 2) && masks.iter().all(|&m| connected(m))
    };
    if !rec(0, 0, &mut labels, &mut accept) {
        return None;
    }
    let mut parts: [Vec<usize>; 3] = Default::default();
    for (i, &l) in labels.iter().enumerate() {
        parts[l].push(comp[i]);
    }
    let mut links: [Vec<usize>; 3] = Default::default();
    for &(e, a, b) in &edges {
        let (la, lb) = (labels[a], labels[b]);
        if la != lb {
            links[TriPartition::pair_index(la.min(lb), la.max(lb))].push(e);
        }
    }
    Some(TriPartition { parts, links })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn diamond() -> Multigraph {
        Multigraph::new(4, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn cactus_examples() {
        let tree = Multigraph::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(is_cactus(&tree));
        assert!(is_cactus(&Multigraph::complete(3)));
        assert!(!is_cactus(&diamond()));
        assert!(!is_cactus(&Multigraph::double_triangle()));
        assert!(!is_cactus(&Multigraph::complete(4)));
        // figure eight: two triangles at node 0
        let eight =
            Multigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(is_cactus(&eight));
        let digon = Multigraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert!(is_cactus(&digon));
        let triple = Multigraph::new(2, vec![(0, 1), (1, 0), (0, 1)]).unwrap();
        assert!(!is_cactus(&triple));
        let with_loop = Multigraph::new(3, vec![(0, 0), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_cactus(&with_loop));
    }

    #[test]
    fn treewidth_examples() {
        let tree = Multigraph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(treewidth_exact_small(&tree, 12).unwrap().0, 1);
        assert_eq!(
            treewidth_exact_small(&Multigraph::complete(4), 12)
                .unwrap()
                .0,
            3
        );
        let (w, td) = treewidth_exact_small(&Multigraph::cycle(5), 12).unwrap();
        assert_eq!(w, 2);
        td.validate(&SimpleGraph::cycle(5)).unwrap();
        assert_eq!(
            treewidth_exact_small(&Multigraph::double_triangle(), 12)
                .unwrap()
                .0,
            2
        );
        assert!(treewidth_exact_small(&Multigraph::cycle(13), 12).is_err());
    }

    #[test]
    fn profile_bound() {
        let k2 = PatternProfile::new(&Multigraph::complete(2)).unwrap();
        assert_eq!(k2.tw, 1);
        assert_eq!(k2.bound(3), 5);
        let digon =
            PatternProfile::new(&Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap()).unwrap();
        assert_eq!(digon.tw, 2);
        let w4 = PatternProfile::new(&Multigraph::wheel(4)).unwrap();
        assert_eq!(w4.tw, 3);
        assert_eq!(w4.bound(0), 0);
    }

    #[test]
    fn tripartition_double_triangle() {
        let h = Multigraph::double_triangle();
        let p = find_tripartition(&h, 15).unwrap().unwrap();
        assert_eq!(p.parts, [vec![0], vec![1], vec![2]]);
        assert_eq!(p.links, [vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert_eq!(p.check(&h), Ok(()));
    }

    #[test]
    fn tripartition_wheel() {
        let h = Multigraph::wheel(4);
        let p = find_tripartition(&h, 15).unwrap().unwrap();
        assert_eq!(p.parts, [vec![0], vec![1, 2], vec![3, 4]]);
        assert_eq!(p.check(&h), Ok(()));
    }

    #[test]
    fn tripartition_absent() {
        assert_eq!(
            find_tripartition(&Multigraph::complete(4), 15).unwrap(),
            None
        );
        assert_eq!(find_tripartition(&diamond(), 15).unwrap(), None);
        assert_eq!(
            find_tripartition(&Multigraph::complete(3), 15).unwrap(),
            None
        );
        assert!(matches!(
            find_tripartition(&Multigraph::cycle(16), 15),
            Err(Error::SearchLimitExceeded { n: 16, limit: 15 })
        ));
    }

    #[test]
    fn tripartition_in_second_component() {
        // an isolated edge, then a double triangle on nodes 2..5
        let h = Multigraph::new(
            5,
            vec![(0, 1), (2, 3), (3, 2), (2, 4), (4, 2), (3, 4), (4, 3)],
        )
        .unwrap();
        let p = find_tripartition(&h, 15).unwrap().unwrap();
        assert_eq!(p.parts, [vec![2], vec![3], vec![4]]);
        assert_eq!(p.check(&h), Ok(()));
    }

    #[test]
    fn k5_has_tripartition() {
        // {0}, {1, 2}, {3, 4}: 2, 2 and 4 connecting edges
        let p = find_tripartition(&Multigraph::complete(5), 15)
            .unwrap()
            .unwrap();
        assert_eq!(p.check(&Multigraph::complete(5)), Ok(()));
    }

    #[test]
    fn check_rejects_tampering() {
        let h = Multigraph::double_triangle();
        let mut p = find_tripartition(&h, 15).unwrap().unwrap();
        p.links[0].pop();
        assert!(p.check(&h).is_err());
        let bad = TriPartition {
            parts: [vec![0, 1], vec![2], vec![]],
            links: Default::default(),
        };
        assert!(bad.check(&h).is_err());
    }
}
