//! Random instance generators for tests, benchmarks and the command line.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::clique::{Arc, ArcKind, ArcModel};
use crate::graph::{Multigraph, SimpleGraph};
use crate::representation::{HRepresentation, SubdividedPattern};

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct in-range vertices");
            }
        }
    }
    g
}

/// Random tree on `n` nodes: node `i` hangs below a uniform earlier node.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Multigraph {
    let edges = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Multigraph::new(n.max(1), edges).expect("valid endpoints")
}

/// Random connected cactus built from `blocks` pieces, each an edge or a
/// cycle of length 2 to 5 (length 2 is a pair of parallel edges) glued at a
/// uniform existing node.
pub fn random_cactus<R: Rng + ?Sized>(blocks: usize, rng: &mut R) -> Multigraph {
    let mut n = 1;
    let mut edges = Vec::new();
    for _ in 0..blocks {
        let at = rng.gen_range(0..n);
        let len = rng.gen_range(1..=5);
        if len == 1 {
            edges.push((at, n));
            n += 1;
            continue;
        }
        let mut prev = at;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, at));
    }
    Multigraph::new(n, edges).expect("valid endpoints")
}

/// Subdivides every non-loop edge of `base` a uniform number of times in `0..=max_t`.
pub fn random_subdivision<R: Rng + ?Sized>(
    base: &Multigraph,
    max_t: usize,
    rng: &mut R,
) -> SubdividedPattern {
    let counts = (0..base.edge_count())
        .map(|e| {
            if base.is_loop(e) {
                0
            } else {
                rng.gen_range(0..=max_t)
            }
        })
        .collect();
    SubdividedPattern::new(base.clone(), counts).expect("loops are left alone")
}

/// A connected node set grown from a uniform start node by adding uniform
/// frontier nodes, with a uniform size in `1..=max_size`.
pub fn random_connected_set<R: Rng + ?Sized>(
    skeleton: &SimpleGraph,
    max_size: usize,
    rng: &mut R,
) -> Vec<usize> {
    let n = skeleton.n();
    assert!(n > 0, "pattern has no nodes");
    let size = rng.gen_range(1..=max_size.clamp(1, n));
    let mut inside = vec![false; n];
    let start = rng.gen_range(0..n);
    inside[start] = true;
    let mut set = vec![start];
    let mut frontier: Vec<usize> = skeleton.neighbors(start).collect();
    while set.len() < size && !frontier.is_empty() {
        let x = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        if inside[x] {
            continue;
        }
        inside[x] = true;
        set.push(x);
        frontier.extend(skeleton.neighbors(x).filter(|&y| !inside[y]));
    }
    set.sort_unstable();
    set
}

/// `n` random connected node sets on `pattern`.
pub fn random_representation<R: Rng + ?Sized>(
    pattern: &SubdividedPattern,
    n: usize,
    max_size: usize,
    rng: &mut R,
) -> HRepresentation {
    let sets = (0..n)
        .map(|_| random_connected_set(pattern.skeleton(), max_size, rng))
        .collect();
    HRepresentation::new(pattern.clone(), sets).expect("nodes in range")
}

/// Random arc model with `arcs` arcs on `len` positions; on a cycle roughly
/// one arc in ten covers everything.
pub fn random_arc_model<R: Rng + ?Sized>(
    kind: ArcKind,
    arcs: usize,
    len: usize,
    rng: &mut R,
) -> ArcModel {
    assert!(len > 0, "model needs positions");
    let arcs = (0..arcs)
        .map(|_| match kind {
            ArcKind::Cycle if rng.gen_bool(0.1) => Arc::Full,
            ArcKind::Cycle => {
                let start = rng.gen_range(0..len);
                let span = rng.gen_range(0..len.saturating_sub(1).max(1));
                Arc::Span {
                    start,
                    end: (start + span) % len,
                }
            }
            ArcKind::Path => {
                let mut ends = [rng.gen_range(0..len), rng.gen_range(0..len)];
                ends.sort_unstable();
                Arc::Span {
                    start: ends[0],
                    end: ends[1],
                }
            }
        })
        .collect();
    ArcModel { kind, len, arcs }
}

/// A triangle subdivided into a cycle of `len >= 3` nodes.
pub fn cycle_pattern(len: usize) -> SubdividedPattern {
    assert!(len >= 3, "a cycle pattern needs at least 3 nodes");
    let (q, r) = ((len - 3) / 3, (len - 3) % 3);
    let counts = vec![q + usize::from(r > 0), q + usize::from(r > 1), q];
    SubdividedPattern::new(Multigraph::complete(3), counts).expect("three edges")
}

/// An edge subdivided into a path of `len >= 1` nodes.
pub fn path_pattern(len: usize) -> SubdividedPattern {
    assert!(len >= 1, "a path pattern needs a node");
    if len == 1 {
        return SubdividedPattern::unsubdivided(Multigraph::new(1, Vec::new()).expect("no edges"));
    }
    SubdividedPattern::new(Multigraph::complete(2), vec![len - 2]).expect("one edge")
}

/// Nodes of a path or cycle skeleton in walking order: a path from its
/// smallest end, a cycle from node 0 towards its smaller neighbor.
pub fn skeleton_order(pattern: &SubdividedPattern) -> Vec<usize> {
    let s = pattern.skeleton();
    let n = s.n();
    assert!(
        s.is_connected() && s.vertices().all(|v| s.degree(v) <= 2),
        "skeleton must be a path or a cycle"
    );
    let start = s.vertices().find(|&v| s.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().expect("non-empty");
        let next = s
            .neighbors(cur)
            .find(|&y| y != prev)
            .expect("walk continues");
        prev = cur;
        order.push(next);
    }
    order
}

/// The representation realizing `model` on a path or cycle pattern with
/// exactly `model.len` nodes, position `p` being the `p`-th node in
/// [`skeleton_order`].
pub fn arc_model_representation(model: &ArcModel, pattern: &SubdividedPattern) -> HRepresentation {
    let order = skeleton_order(pattern);
    assert_eq!(order.len(), model.len, "pattern size must match the model");
    let sets = model
        .arcs
        .iter()
        .map(|&a| model.positions(a).into_iter().map(|p| order[p]).collect())
        .collect();
    HRepresentation::new(pattern.clone(), sets).expect("nodes in range")
}

/// A uniformly shuffled copy of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
