use crate::error::{Error, Result};
use crate::fpt::decomposition::{from_elimination_ordering, TreeDecomposition};
use crate::graph::{SimpleGraph, Vertex};

/// Knobs for `tree_decomposition`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionConfig {
    /// Approximation factor `c`: a found decomposition is within budget when
    /// its width is at most `c * t`.
    pub approx_factor: usize,
    /// Graphs up to this many vertices get an exact decomposition.
    pub exact_limit: usize,
}

impl Default for DecompositionConfig {
    fn default() -> Self {
        DecompositionConfig {
            approx_factor: 5,
            exact_limit: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionAttempt {
    Found {
        decomposition: TreeDecomposition,
        width: usize,
        /// The width exceeds `c * t`; the decomposition is still valid.
        over_budget: bool,
    },
    /// Treewidth is certified to be at least `lower_bound`, which exceeds `t`.
    WidthExceeded { lower_bound: usize },
}

/// Tries to decompose `g` with width about `t`.
///
/// Small graphs are solved exactly, larger ones with the min-fill heuristic.
/// `WidthExceeded` is only returned with a certified lower bound above `t`.
pub fn tree_decomposition(
    g: &SimpleGraph,
    t: usize,
    cfg: &DecompositionConfig,
) -> DecompositionAttempt {
    let lower = treewidth_lower_bound(g);
    if lower > t {
        return DecompositionAttempt::WidthExceeded { lower_bound: lower };
    }
    let decomposition = if g.n() <= cfg.exact_limit {
        let (width, td) = exact_treewidth(g, cfg.exact_limit).expect("size checked");
        if width > t {
            return DecompositionAttempt::WidthExceeded { lower_bound: width };
        }
        td
    } else {
        from_elimination_ordering(g, &min_fill_ordering(g))
    };
    let width = decomposition.width();
    DecompositionAttempt::Found {
        decomposition,
        width,
        over_budget: width > cfg.approx_factor.saturating_mul(t),
    }
}

/// Best available decomposition regardless of any target width.
pub fn heuristic_decomposition(g: &SimpleGraph, cfg: &DecompositionConfig) -> TreeDecomposition {
    if g.n() <= cfg.exact_limit {
        exact_treewidth(g, cfg.exact_limit).expect("size checked").1
    } else {
        from_elimination_ordering(g, &min_fill_ordering(g))
    }
}

/// Exact treewidth by dynamic programming over vertex subsets.
///
/// `tw(S) = min over v in S of max(tw(S - v), |Q(S - v, v)|)`, where
/// `Q(S, v)` are the vertices outside `S + v` reachable from `v` through `S`.
/// The minimizing choices give an optimal elimination ordering.
pub fn exact_treewidth(g: &SimpleGraph, limit: usize) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n > limit || n > 24 {
        return Err(Error::ExactLimitExceeded { n, limit });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let neighborhood = |mask: u32| -> u32 {
        let mut out = 0u32;
        let mut it = mask;
        while it != 0 {
            out |= adj[it.trailing_zeros() as usize];
            it &= it - 1;
        }
        out
    };
    let q = |set: u32, v: usize| -> u32 {
        let mut reach = 1u32 << v;
        loop {
            let grown = reach | (neighborhood(reach) & set);
            if grown == reach {
                break;
            }
            reach = grown;
        }
        (neighborhood(reach) & !set & !(1 << v)).count_ones()
    };

    let full = if n == 0 { 0 } else { (u32::MAX) >> (32 - n) };
    let size = 1usize << n;
    let mut best = vec![u32::MAX; size];
    let mut choice = vec![0u8; size];
    best[0] = 0;
    for set in 1..size as u32 {
        let mut it = set;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let rest = set & !(1 << v);
            let cand = best[rest as usize].max(q(rest, v));
            if cand < best[set as usize] {
                best[set as usize] = cand;
                choice[set as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = choice[set as usize] as usize;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    let td = from_elimination_ordering(g, &order);
    let width = best[full as usize] as usize;
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Greedy elimination ordering: repeatedly eliminate the vertex whose
/// neighborhood needs the fewest fill edges (ties: lower degree, lower index).
pub fn min_fill_ordering(g: &SimpleGraph) -> Vec<Vertex> {
    let n = g.n();
    let mut adj = g.adjacency_bits();
    let mut alive = fixedbitset::FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut pick: Option<(usize, usize, Vertex)> = None;
        for v in alive.ones() {
            let nb: Vec<usize> = adj[v].intersection(&alive).collect();
            let mut fill = 0;
            for (i, &x) in nb.iter().enumerate() {
                fill += nb[i + 1..].iter().filter(|&&y| !adj[x].contains(y)).count();
            }
            let key = (fill, nb.len(), v);
            if pick.is_none_or(|p| key < p) {
                pick = Some(key);
            }
        }
        let (_, _, v) = pick.expect("alive vertex remains");
        let nb: Vec<usize> = adj[v].intersection(&alive).collect();
        for &x in &nb {
            for &y in &nb {
                if x != y {
                    adj[x].insert(y);
                }
            }
        }
        alive.set(v, false);
        order.push(v);
    }
    order
}

/// Degeneracy: the largest minimum degree seen while deleting min-degree vertices.
pub fn degeneracy(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("alive vertex remains");
        best = best.max(deg[v]);
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Contraction degeneracy heuristic: contract a min-degree vertex into its
/// min-degree neighbor, recording the largest minimum degree. Minors never
/// have larger treewidth, so this is a treewidth lower bound.
pub fn contraction_degeneracy(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<Vertex>> =
        g.vertices().map(|v| g.neighbor_set(v).clone()).collect();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (adj[v].len(), v))
            .expect("alive vertex remains");
        best = best.max(adj[v].len());
        let target = adj[v].iter().copied().min_by_key(|&w| (adj[w].len(), w));
        let nb: Vec<Vertex> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &w in &nb {
            adj[w].remove(&v);
        }
        if let Some(u) = target {
            for &w in &nb {
                if w != u {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
            }
        }
        alive[v] = false;
    }
    best
}

pub fn treewidth_lower_bound(g: &SimpleGraph) -> usize {
    degeneracy(g).max(contraction_degeneracy(g))
}
