use std::collections::BTreeSet;

use crate::fpt::is_subset;
use crate::graph::{sort_sets, SimpleGraph, Vertex};

/// Clique-cutset decomposition of a graph into atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomDecomposition {
    /// Vertex sets of the atoms, each sorted.
    pub atoms: Vec<Vec<Vertex>>,
}

impl AtomDecomposition {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn induced(&self, g: &SimpleGraph, i: usize) -> SimpleGraph {
        g.induced_subgraph(&self.atoms[i])
    }
}

/// MCS-M: a minimal elimination ordering together with its minimal
/// triangulation. Returns the ordering (first eliminated first) and the
/// adjacency of the filled graph.
pub fn minimal_elimination_ordering(g: &SimpleGraph) -> (Vec<Vertex>, Vec<BTreeSet<Vertex>>) {
    let n = g.n();
    let mut filled: Vec<BTreeSet<Vertex>> =
        g.vertices().map(|v| g.neighbor_set(v).clone()).collect();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = vec![usize::MAX; n];
    for slot in (0..n).rev() {
        let v = (0..n)
            .filter(|&u| !numbered[u])
            .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)))
            .expect("unnumbered vertex remains");
        // bottleneck[u]: least possible maximum weight over the interior of a
        // path from v to u through unnumbered vertices (-1 for neighbors)
        let mut bottleneck = vec![i64::MAX; n];
        let mut done = vec![false; n];
        for w in g.neighbors(v) {
            if !numbered[w] {
                bottleneck[w] = -1;
            }
        }
        done[v] = true;
        loop {
            let next = (0..n)
                .filter(|&u| !numbered[u] && !done[u] && bottleneck[u] != i64::MAX)
                .min_by_key(|&u| (bottleneck[u], u));
            let Some(x) = next else { break };
            done[x] = true;
            let through = bottleneck[x].max(weight[x] as i64);
            for y in g.neighbors(x) {
                if !numbered[y] && !done[y] && through < bottleneck[y] {
                    bottleneck[y] = through;
                }
            }
        }
        let reached: Vec<Vertex> = (0..n)
            .filter(|&u| u != v && !numbered[u] && bottleneck[u] < weight[u] as i64)
            .collect();
        for u in reached {
            weight[u] += 1;
            filled[u].insert(v);
            filled[v].insert(u);
        }
        numbered[v] = true;
        order[slot] = v;
    }
    (order, filled)
}

/// Splits `g` along clique separators into atoms.
///
/// Vertices are scanned in a minimal elimination ordering; whenever the later
/// filled-graph neighbors `S` of a vertex `x` form a clique of `g` that
/// separates the remaining graph, the component of `x` plus `S` is split off
/// as an atom. Disconnected graphs are handled component by component.
pub fn clique_cutset_decomposition(g: &SimpleGraph) -> AtomDecomposition {
    let mut atoms = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        for atom in decompose_connected(&sub) {
            atoms.push(atom.into_iter().map(|i| comp[i]).collect());
        }
    }
    sort_sets(&mut atoms);
    AtomDecomposition { atoms }
}

fn decompose_connected(g: &SimpleGraph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let (order, filled) = minimal_elimination_ordering(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut removed = vec![false; n];
    let mut atoms = Vec::new();
    for &x in &order {
        if removed[x] {
            continue;
        }
        let sep: Vec<Vertex> = filled[x]
            .iter()
            .copied()
            .filter(|&y| pos[y] > pos[x] && !removed[y])
            .collect();
        if sep.is_empty() || !g.is_clique(&sep) {
            continue;
        }
        let mut blocked = removed.clone();
        sep.iter().for_each(|&s| blocked[s] = true);
        let comps = g.components_avoiding(&blocked);
        if comps.len() < 2 {
            continue;
        }
        let own = comps
            .into_iter()
            .find(|c| c.binary_search(&x).is_ok())
            .expect("x is outside the separator");
        let mut atom: Vec<Vertex> = own.iter().copied().chain(sep.iter().copied()).collect();
        atom.sort_unstable();
        own.iter().for_each(|&v| removed[v] = true);
        atoms.push(atom);
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| !removed[v]).collect();
    if !rest.is_empty() {
        atoms.push(rest);
    }
    // a separator can split off a piece already contained in a later atom
    let keep: Vec<bool> = (0..atoms.len())
        .map(|i| {
            !(0..atoms.len()).any(|j| {
                j != i
                    && is_subset(&atoms[i], &atoms[j])
                    && (atoms[i].len() < atoms[j].len() || j < i)
            })
        })
        .collect();
    atoms
        .into_iter()
        .zip(keep)
        .filter_map(|(a, k)| k.then_some(a))
        .collect()
}
