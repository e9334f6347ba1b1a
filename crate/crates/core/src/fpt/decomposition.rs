use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};

/// Tree decomposition: bags of graph vertices joined by tree edges.
///
/// Bags are kept sorted. `validate` is the single checker for the three
/// decomposition axioms and every module goes through it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, edges }
    }

    /// One bag holding every vertex.
    pub fn trivial(n: usize) -> Self {
        TreeDecomposition::new(vec![(0..n).collect()], Vec::new())
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn bag(&self, i: usize) -> &[Vertex] {
        &self.bags[i]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one (0 for a decomposition of the empty graph).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj.iter_mut().for_each(|nb| nb.sort_unstable());
        adj
    }

    /// Checks that the bags form a tree, that every vertex occupies a
    /// non-empty connected subtree, and that every edge lies inside a bag.
    pub fn validate(&self, g: &SimpleGraph) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidDecomposition(msg));
        let b = self.bags.len();
        if b == 0 {
            return fail("no bags".into());
        }
        if self.edges.len() != b - 1 {
            return fail(format!("{} tree edges for {} bags", self.edges.len(), b));
        }
        for &(x, y) in &self.edges {
            if x >= b || y >= b || x == y {
                return fail(format!("bad tree edge ({x}, {y})"));
            }
        }
        let adj = self.tree_adjacency();
        let mut seen = vec![false; b];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return fail("bag tree is disconnected".into());
        }

        let n = g.n();
        let mut holders = vec![0usize; n];
        for bag in &self.bags {
            for &v in bag {
                if v >= n {
                    return fail(format!("bag vertex {v} outside graph on {n} vertices"));
                }
                holders[v] += 1;
            }
        }
        let mut inner = vec![0usize; n];
        for &(x, y) in &self.edges {
            for_each_common(&self.bags[x], &self.bags[y], |v| inner[v] += 1);
        }
        for v in 0..n {
            if holders[v] == 0 {
                return fail(format!("vertex {v} is in no bag"));
            }
            // a subforest with k nodes is a subtree iff it has k - 1 edges
            if inner[v] + 1 != holders[v] {
                return fail(format!("bags holding vertex {v} are not connected"));
            }
        }

        let mut covered: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for bag in &self.bags {
            for (i, &u) in bag.iter().enumerate() {
                for &v in &bag[i + 1..] {
                    if g.has_edge(u, v) {
                        covered.insert((u, v));
                    }
                }
            }
        }
        if let Some((u, v)) = g.edges().find(|e| !covered.contains(e)) {
            return fail(format!("edge ({u}, {v}) is in no bag"));
        }
        Ok(())
    }

    /// Contracts every tree edge whose one bag is a subset of the other.
    /// Validity is preserved and the width does not change.
    pub fn compress(&self) -> TreeDecomposition {
        let b = self.bags.len();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); b];
        for &(x, y) in &self.edges {
            adj[x].insert(y);
            adj[y].insert(x);
        }
        let mut alive = vec![true; b];
        loop {
            let mut merge = None;
            'search: for x in 0..b {
                if !alive[x] {
                    continue;
                }
                for &y in &adj[x] {
                    if is_subset(&self.bags[x], &self.bags[y]) {
                        merge = Some((x, y));
                        break 'search;
                    }
                }
            }
            let Some((x, y)) = merge else { break };
            alive[x] = false;
            let moved: Vec<usize> = std::mem::take(&mut adj[x]).into_iter().collect();
            for z in moved {
                adj[z].remove(&x);
                if z != y {
                    adj[z].insert(y);
                    adj[y].insert(z);
                }
            }
        }
        let mut index = vec![usize::MAX; b];
        let mut bags = Vec::new();
        for x in 0..b {
            if alive[x] {
                index[x] = bags.len();
                bags.push(self.bags[x].clone());
            }
        }
        let mut edges = Vec::new();
        for x in 0..b {
            for &y in &adj[x] {
                if alive[x] && x < y {
                    edges.push((index[x], index[y]));
                }
            }
        }
        TreeDecomposition { bags, edges }
    }

    /// Maps every bag through `f` (each vertex to a set of new vertices).
    pub fn map_bags<F>(&self, mut f: F) -> TreeDecomposition
    where
        F: FnMut(&[Vertex]) -> Vec<Vertex>,
    {
        TreeDecomposition::new(self.bags.iter().map(|b| f(b)).collect(), self.edges.clone())
    }
}

pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn for_each_common(a: &[Vertex], b: &[Vertex], mut f: impl FnMut(Vertex)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Decomposition induced by an elimination ordering: the bag of `v` holds `v`
/// and its later neighbors in the filled graph, and hangs below the bag of the
/// earliest of those neighbors. Component roots are chained into one tree.
pub fn from_elimination_ordering(g: &SimpleGraph, order: &[Vertex]) -> TreeDecomposition {
    let n = g.n();
    assert_eq!(order.len(), n, "ordering must list every vertex once");
    if n == 0 {
        return TreeDecomposition::new(vec![Vec::new()], Vec::new());
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut fill: Vec<BTreeSet<Vertex>> = g.vertices().map(|v| g.neighbor_set(v).clone()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n - 1);
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<Vertex> = fill[v].iter().copied().filter(|&w| pos[w] > i).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                fill[x].insert(y);
                fill[y].insert(x);
            }
        }
        match later.iter().map(|&w| pos[w]).min() {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges)
}
