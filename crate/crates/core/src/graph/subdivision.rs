use crate::graph::{SimpleGraph, Vertex};

/// The 2-subdivision `G*` of a graph `G`, with the labels of the new vertices.
///
/// Edges of `G` are numbered `0..m` in lexicographic order. Edge `k = v_l v_r`
/// with `l < r` becomes the path `v_l - a_k - b_k - v_r`. In `G*` the original
/// vertices keep their indices, `a_k = n + k` and `b_k = n + m + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTwoSubdivision {
    pub base: SimpleGraph,
    pub result: SimpleGraph,
    /// `left[k] = l(k)`, the smaller endpoint of edge `k`.
    pub left: Vec<Vertex>,
    /// `right[k] = r(k)`, the larger endpoint of edge `k`.
    pub right: Vec<Vertex>,
}

impl LabeledTwoSubdivision {
    pub fn edge_count(&self) -> usize {
        self.left.len()
    }

    pub fn a(&self, k: usize) -> Vertex {
        self.base.n() + k
    }

    pub fn b(&self, k: usize) -> Vertex {
        self.base.n() + self.edge_count() + k
    }

    /// The three vertex classes `C_v`, `C_a`, `C_b`. Each one is a clique in
    /// the complement of `G*`.
    pub fn clique_cover(&self) -> [Vec<Vertex>; 3] {
        let n = self.base.n();
        let m = self.edge_count();
        [
            (0..n).collect(),
            (n..n + m).collect(),
            (n + m..n + 2 * m).collect(),
        ]
    }
}

pub fn two_subdivision(g: &SimpleGraph) -> LabeledTwoSubdivision {
    let n = g.n();
    let (left, right): (Vec<_>, Vec<_>) = g.edges().unzip();
    let m = left.len();
    let mut result = SimpleGraph::new(n + 2 * m);
    for k in 0..m {
        let (a, b) = (n + k, n + m + k);
        for (u, v) in [(left[k], a), (a, b), (b, right[k])] {
            result.add_edge(u, v).expect("fresh vertices");
        }
    }
    LabeledTwoSubdivision {
        base: g.clone(),
        result,
        left,
        right,
    }
}
