use fixedbitset::FixedBitSet;

use crate::graph::{better_clique, sort_sets, SimpleGraph, Vertex};

/// Outcome of a capped maximal-clique enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueEnumeration {
    /// All maximal cliques, each sorted, listed lexicographically.
    Complete(Vec<Vec<Vertex>>),
    /// More than `cap` maximal cliques exist; `found` holds the first `cap + 1`.
    Exceeded { cap: usize, found: Vec<Vec<Vertex>> },
}

impl CliqueEnumeration {
    pub fn cliques(&self) -> &[Vec<Vertex>] {
        match self {
            CliqueEnumeration::Complete(c) => c,
            CliqueEnumeration::Exceeded { found, .. } => found,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, CliqueEnumeration::Complete(_))
    }
}

struct Enumerator<'a> {
    adj: &'a [FixedBitSet],
    cap: usize,
    out: Vec<Vec<Vertex>>,
}

impl Enumerator<'_> {
    /// Bron–Kerbosch with Tomita pivoting. Returns `true` once the cap is passed.
    fn expand(&mut self, r: &mut Vec<Vertex>, mut p: FixedBitSet, mut x: FixedBitSet) -> bool {
        if p.is_clear() {
            if x.is_clear() {
                self.out.push(r.clone());
                return self.out.len() > self.cap;
            }
            return false;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| (p.intersection(&self.adj[u]).count(), std::cmp::Reverse(u)))
            .expect("p is non-empty");
        let mut branch = p.clone();
        branch.difference_with(&self.adj[pivot]);
        for v in branch.ones() {
            r.push(v);
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.adj[v]);
            let stop = self.expand(r, np, nx);
            r.pop();
            if stop {
                return true;
            }
            p.set(v, false);
            x.insert(v);
        }
        false
    }
}

/// Enumerates the maximal cliques of `g`, stopping after `cap + 1` of them.
pub fn maximal_cliques_capped(g: &SimpleGraph, cap: usize) -> CliqueEnumeration {
    let n = g.n();
    if n == 0 {
        return CliqueEnumeration::Complete(Vec::new());
    }
    let adj = g.adjacency_bits();
    let mut e = Enumerator {
        adj: &adj,
        cap,
        out: Vec::new(),
    };
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let exceeded = e.expand(&mut Vec::new(), p, FixedBitSet::with_capacity(n));
    let mut cliques = e.out;
    sort_sets(&mut cliques);
    for c in &cliques {
        assert!(g.is_clique(c));
    }
    if exceeded {
        CliqueEnumeration::Exceeded {
            cap,
            found: cliques,
        }
    } else {
        CliqueEnumeration::Complete(cliques)
    }
}

/// All maximal cliques with no cap.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<Vec<Vertex>> {
    match maximal_cliques_capped(g, usize::MAX - 1) {
        CliqueEnumeration::Complete(c) => c,
        CliqueEnumeration::Exceeded { found, .. } => found,
    }
}

/// Maximum clique among `candidates` by branch and bound.
///
/// Cliques are visited in lexicographic order and only strictly larger ones
/// replace the incumbent, so ties go to the lexicographically smallest set.
pub fn max_clique_within(g: &SimpleGraph, candidates: &[Vertex]) -> Vec<Vertex> {
    fn grow(g: &SimpleGraph, current: &mut Vec<Vertex>, pool: &[Vertex], best: &mut Vec<Vertex>) {
        if better_clique(current, best) {
            *best = current.clone();
        }
        for (i, &v) in pool.iter().enumerate() {
            // later pools only shrink, so this bound holds for every remaining branch
            if current.len() + pool.len() - i <= best.len() {
                return;
            }
            let rest: Vec<Vertex> = pool[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            if current.len() + 1 + rest.len() <= best.len() {
                continue;
            }
            current.push(v);
            grow(g, current, &rest, best);
            current.pop();
        }
    }
    let mut pool = candidates.to_vec();
    pool.sort_unstable();
    pool.dedup();
    let mut best = Vec::new();
    grow(g, &mut Vec::new(), &pool, &mut best);
    best
}
