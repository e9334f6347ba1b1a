use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};

/// Undirected multigraph with indexed edges, used for pattern graphs.
///
/// Parallel edges are distinct entries of the edge list. Loops are accepted
/// but every algorithm skips them: with node-sharing intersection semantics a
/// loop never changes which subgraphs meet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
        }
        Ok(Multigraph { n, edges })
    }

    /// Three nodes with two parallel edges between every pair.
    pub fn double_triangle() -> Self {
        Multigraph {
            n: 3,
            edges: vec![(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)],
        }
    }

    /// Wheel with hub 0 and rim `1..=rim` in cyclic order.
    pub fn wheel(rim: usize) -> Self {
        let mut edges: Vec<_> = (1..=rim).map(|r| (0, r)).collect();
        edges.extend((1..=rim).map(|r| (r, r % rim + 1)));
        Multigraph { n: rim + 1, edges }
    }

    pub fn complete(n: usize) -> Self {
        Multigraph::from(&SimpleGraph::complete(n))
    }

    pub fn cycle(n: usize) -> Self {
        Multigraph::from(&SimpleGraph::cycle(n))
    }

    pub fn path(n: usize) -> Self {
        Multigraph::from(&SimpleGraph::path(n))
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge count with loops excluded.
    pub fn proper_edge_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u != v).count()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Indices of the non-loop edges incident to `v`, with the opposite endpoint.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = (usize, Vertex)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(move |(e, &(a, b))| match (a == v, b == v) {
                (true, false) => Some((e, b)),
                (false, true) => Some((e, a)),
                _ => None,
            })
    }

    /// Simple graph with parallel edges collapsed and loops dropped.
    pub fn skeleton(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for &(u, v) in &self.edges {
            if u != v {
                g.add_edge(u, v)
                    .expect("endpoints validated on construction");
            }
        }
        g
    }

    /// Forest in the multigraph sense: no cycles, and no pair of parallel edges.
    pub fn is_forest(&self) -> bool {
        let skeleton = self.skeleton();
        skeleton.m() == self.proper_edge_count() && skeleton.is_forest()
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.skeleton().components()
    }
}

impl From<&SimpleGraph> for Multigraph {
    fn from(g: &SimpleGraph) -> Self {
        Multigraph {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}
