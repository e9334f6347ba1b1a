use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Vertex of a graph, a dense 0-based index.
pub type Vertex = usize;

/// Undirected simple graph on the vertices `0..n`.
///
/// Neighbor sets are kept sorted, so every iteration order in the crate is
/// lexicographic by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<Vertex>>,
    m: usize,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::path(n);
        if n >= 3 {
            g.insert(n - 1, 0);
        }
        g
    }

    /// Complete multipartite graph with `parts` classes of size two
    /// (the cocktail-party graph). Vertices `2i` and `2i + 1` form class `i`.
    pub fn cocktail_party(parts: usize) -> Self {
        let n = 2 * parts;
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if u / 2 != v / 2 {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        SimpleGraph::from_edges(10, &edges).expect("static edge list")
    }

    /// Adds the edge `uv`; returns whether it was new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        Ok(self.insert(u, v))
    }

    fn insert(&mut self, u: Vertex, v: Vertex) -> bool {
        let fresh = self.adj[u].insert(v);
        if fresh {
            self.adj[v].insert(u);
            self.m += 1;
        }
        fresh
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> impl DoubleEndedIterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Neighborhoods as bitsets, one per vertex.
    pub fn adjacency_bits(&self) -> Vec<FixedBitSet> {
        let n = self.n();
        self.adj
            .iter()
            .map(|nb| {
                let mut bits = FixedBitSet::with_capacity(n);
                nb.iter().for_each(|&v| bits.insert(v));
                bits
            })
            .collect()
    }

    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> SimpleGraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && i < j {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Connected components of the graph minus the vertices flagged in `removed`.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the vertices in `set` induce a connected subgraph.
    /// The empty set counts as disconnected.
    pub fn is_connected_set(&self, set: &[Vertex]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == set.len()
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }
}

/// Complement: `uv` is an edge iff `u != v` and `uv` is not an edge of `g`.
pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    let mut out = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.insert(u, v);
            }
        }
    }
    out
}

/// Sorts each set and the list of sets lexicographically.
pub(crate) fn sort_sets(sets: &mut [Vec<Vertex>]) {
    sets.iter_mut().for_each(|s| s.sort_unstable());
    sets.sort();
}

/// `a` beats `b` if it is larger, or equal in size and lexicographically smaller.
pub(crate) fn better_clique(a: &[Vertex], b: &[Vertex]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a < b)
}
