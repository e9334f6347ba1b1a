//! H-representations: subdivided patterns, connected node sets per vertex,
//! verification, the Helly check, the hardness construction, and the
//! decomposition derived from a representation.

mod hard;
mod helly;
mod td;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, SimpleGraph, Vertex};

pub use hard::{generate_hard_instance, HardInstance};
pub use helly::{helly_check, HellyReport};
pub use td::td_from_representation;

/// Node of a subdivided pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternNode {
    /// A node of the base pattern.
    Branch(usize),
    /// The `index`-th internal node (1-based) on the path replacing `edge`,
    /// counted from the edge's first endpoint.
    Sub { edge: usize, index: usize },
}

/// A pattern multigraph with every edge replaced by a path of `t_e` internal
/// nodes. Nodes are numbered densely: branch nodes first, then the internal
/// nodes edge by edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdividedPattern {
    base: Multigraph,
    subdivisions: Vec<usize>,
    offsets: Vec<usize>,
    skeleton: SimpleGraph,
}

impl SubdividedPattern {
    pub fn new(base: Multigraph, subdivisions: Vec<usize>) -> Result<Self> {
        if subdivisions.len() != base.edge_count() {
            return Err(Error::InvalidSubdivision(format!(
                "{} subdivision counts for {} edges",
                subdivisions.len(),
                base.edge_count()
            )));
        }
        if let Some(e) = (0..base.edge_count()).find(|&e| base.is_loop(e) && subdivisions[e] > 0) {
            return Err(Error::InvalidSubdivision(format!(
                "loop edge {e} cannot be subdivided"
            )));
        }
        let mut offsets = Vec::with_capacity(subdivisions.len());
        let mut next = base.node_count();
        for &t in &subdivisions {
            offsets.push(next);
            next += t;
        }
        let mut skeleton = SimpleGraph::new(next);
        for (e, &(u, v)) in base.edges().iter().enumerate() {
            if u == v {
                continue;
            }
            let t = subdivisions[e];
            let mut prev = u;
            for i in 0..t {
                let x = offsets[e] + i;
                skeleton.add_edge(prev, x)?;
                prev = x;
            }
            skeleton.add_edge(prev, v)?;
        }
        Ok(SubdividedPattern {
            base,
            subdivisions,
            offsets,
            skeleton,
        })
    }

    pub fn unsubdivided(base: Multigraph) -> Self {
        let m = base.edge_count();
        SubdividedPattern::new(base, vec![0; m]).expect("no subdivisions")
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn subdivisions(&self) -> &[usize] {
        &self.subdivisions
    }

    pub fn node_count(&self) -> usize {
        self.skeleton.n()
    }

    /// Adjacency between nodes of the subdivision.
    pub fn skeleton(&self) -> &SimpleGraph {
        &self.skeleton
    }

    pub fn node(&self, id: usize) -> PatternNode {
        let n = self.base.node_count();
        if id < n {
            return PatternNode::Branch(id);
        }
        let e = (0..self.offsets.len())
            .find(|&f| self.offsets[f] <= id && id < self.offsets[f] + self.subdivisions[f])
            .expect("id within node range");
        PatternNode::Sub {
            edge: e,
            index: id - self.offsets[e] + 1,
        }
    }

    pub fn index(&self, node: PatternNode) -> Option<usize> {
        match node {
            PatternNode::Branch(h) => (h < self.base.node_count()).then_some(h),
            PatternNode::Sub { edge, index } => {
                let t = *self.subdivisions.get(edge)?;
                (1..=t)
                    .contains(&index)
                    .then(|| self.offsets[edge] + index - 1)
            }
        }
    }

    /// The `i`-th internal node (1-based) of edge `e` counted from endpoint `from`.
    pub fn path_node(&self, e: usize, from: usize, i: usize) -> usize {
        let (u, v) = self.base.endpoints(e);
        let t = self.subdivisions[e];
        assert!((1..=t).contains(&i), "position {i} outside 1..={t}");
        assert!(
            from == u || from == v,
            "node {from} is not an endpoint of edge {e}"
        );
        let index = if from == u { i } else { t + 1 - i };
        self.offsets[e] + index - 1
    }
}

/// One connected node set of a subdivided pattern per graph vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRepresentation {
    pattern: SubdividedPattern,
    sets: Vec<Vec<usize>>,
}

impl HRepresentation {
    /// Sorts and dedups each node set and checks node ids are in range.
    pub fn new(pattern: SubdividedPattern, sets: Vec<Vec<usize>>) -> Result<Self> {
        let nodes = pattern.node_count();
        let mut sets = sets;
        for (v, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&x) = set.iter().find(|&&x| x >= nodes) {
                return Err(Error::InvalidRepresentation(format!(
                    "vertex {v} uses node {x} but the pattern has {nodes} nodes"
                )));
            }
        }
        Ok(HRepresentation { pattern, sets })
    }

    pub fn pattern(&self) -> &SubdividedPattern {
        &self.pattern
    }

    pub fn vertex_count(&self) -> usize {
        self.sets.len()
    }

    pub fn set(&self, v: Vertex) -> &[usize] {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Representation of the subgraph induced by `vertices`, reindexed in order.
    pub fn restrict(&self, vertices: &[Vertex]) -> HRepresentation {
        HRepresentation {
            pattern: self.pattern.clone(),
            sets: vertices.iter().map(|&v| self.sets[v].clone()).collect(),
        }
    }

    /// Vertices whose node set contains each node.
    pub fn holders(&self) -> Vec<Vec<Vertex>> {
        let mut holders = vec![Vec::new(); self.pattern.node_count()];
        for (v, set) in self.sets.iter().enumerate() {
            for &x in set {
                holders[x].push(v);
            }
        }
        holders
    }

    /// Graph on the vertices where `uv` is an edge iff their node sets meet.
    pub fn intersection_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.sets.len());
        for holders in self.holders() {
            for (i, &u) in holders.iter().enumerate() {
                for &v in &holders[i + 1..] {
                    g.add_edge(u, v).expect("distinct holders");
                }
            }
        }
        g
    }

    /// Nodes shared by every set in `vertices`.
    pub fn common_nodes(&self, vertices: &[Vertex]) -> Vec<usize> {
        let Some((&first, rest)) = vertices.split_first() else {
            return (0..self.pattern.node_count()).collect();
        };
        let mut common = self.sets[first].clone();
        for &v in rest {
            common.retain(|x| self.sets[v].binary_search(x).is_ok());
        }
        common
    }
}

/// A vertex pair whose adjacency in the graph disagrees with the representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairMismatch {
    pub u: Vertex,
    pub v: Vertex,
    /// Adjacent in the graph.
    pub expected: bool,
    /// Node sets intersect.
    pub actual: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Ok,
    /// The first vertex whose node set is empty or induces a disconnected subgraph.
    Disconnected(Vertex),
    /// Every disagreeing pair, in lexicographic order; never empty.
    Mismatch(Vec<PairMismatch>),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Ok => write!(f, "ok"),
            Verdict::Disconnected(v) => write!(f, "node set of vertex {v} is not connected"),
            Verdict::Mismatch(pairs) => {
                write!(f, "{} mismatched pairs:", pairs.len())?;
                for p in pairs {
                    let name = |b: bool| if b { "edge" } else { "non-edge" };
                    write!(
                        f,
                        " ({}, {}): expected {}, got {};",
                        p.u,
                        p.v,
                        name(p.expected),
                        name(p.actual)
                    )?;
                }
                Ok(())
            }
        }
    }
}

/// Checks that `r` is an H-representation of `g`: every node set is a
/// non-empty connected subgraph, and node sets meet exactly on the edges of `g`.
pub fn verify_representation(g: &SimpleGraph, r: &HRepresentation) -> Result<Verdict> {
    if r.vertex_count() != g.n() {
        return Err(Error::DomainMismatch {
            graph: g.n(),
            rep: r.vertex_count(),
        });
    }
    let skeleton = r.pattern().skeleton();
    if let Some(v) = g.vertices().find(|&v| !skeleton.is_connected_set(r.set(v))) {
        return Ok(Verdict::Disconnected(v));
    }
    let actual = r.intersection_graph();
    let mut mismatches = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.n() {
            let (expected, got) = (g.has_edge(u, v), actual.has_edge(u, v));
            if expected != got {
                mismatches.push(PairMismatch {
                    u,
                    v,
                    expected,
                    actual: got,
                });
            }
        }
    }
    Ok(if mismatches.is_empty() {
        Verdict::Ok
    } else {
        Verdict::Mismatch(mismatches)
    })
}
