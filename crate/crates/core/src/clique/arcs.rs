use crate::graph::{better_clique, SimpleGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcKind {
    /// Positions on a line; arcs never wrap.
    Path,
    /// Positions on a circle; arcs run clockwise and may wrap past `len - 1`.
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arc {
    Full,
    /// Inclusive clockwise span from `start` to `end`.
    Span {
        start: usize,
        end: usize,
    },
}

/// Circular-arc (or interval) intersection model over integer positions `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcModel {
    pub kind: ArcKind,
    pub len: usize,
    pub arcs: Vec<Arc>,
}

impl ArcModel {
    pub fn covers(&self, arc: Arc, p: usize) -> bool {
        match arc {
            Arc::Full => true,
            Arc::Span { start, end } if start <= end => start <= p && p <= end,
            Arc::Span { start, end } => p >= start || p <= end,
        }
    }

    pub fn positions(&self, arc: Arc) -> Vec<usize> {
        (0..self.len).filter(|&p| self.covers(arc, p)).collect()
    }

    /// Checks positions are in range and that path models do not wrap.
    pub fn is_valid(&self) -> bool {
        self.arcs.iter().all(|&a| match a {
            Arc::Full => true,
            Arc::Span { start, end } => {
                start < self.len && end < self.len && (self.kind == ArcKind::Cycle || start <= end)
            }
        })
    }

    /// The modeled graph: arcs are adjacent iff they share a position.
    pub fn intersection_graph(&self) -> SimpleGraph {
        let n = self.arcs.len();
        let covered: Vec<Vec<bool>> = self
            .arcs
            .iter()
            .map(|&a| (0..self.len).map(|p| self.covers(a, p)).collect())
            .collect();
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if (0..self.len).any(|p| covered[u][p] && covered[v][p]) {
                    g.add_edge(u, v).expect("distinct in-range vertices");
                }
            }
        }
        g
    }

    /// Model of the cocktail-party graph on `2k` vertices: arc `2i` covers
    /// `i..i+k-1` and arc `2i+1` covers the complementary `k` positions of a
    /// circle of length `2k`. It has `2^k` maximal cliques.
    pub fn cocktail_party(k: usize) -> ArcModel {
        let len = 2 * k;
        let mut arcs = Vec::with_capacity(len);
        for i in 0..k {
            arcs.push(Arc::Span {
                start: i,
                end: (i + k - 1) % len,
            });
            arcs.push(Arc::Span {
                start: i + k,
                end: (i + 2 * k - 1) % len,
            });
        }
        ArcModel {
            kind: ArcKind::Cycle,
            len,
            arcs,
        }
    }
}

/// Maximum clique of a circular-arc model in polynomial time.
///
/// Full arcs join every clique. For a clique `K` of the other arcs, take any
/// start point `p` of an arc of `K`: the arcs of `K` missing `p` are pairwise
/// intersecting intervals of the circle cut at `p`, so they share a point, and
/// the largest of their start points is one. Hence `K` lies in
/// `S_p ∪ S_q` for two start points `p, q`, where `S_p` are the arcs through
/// `p`. That union is co-bipartite; its maximum clique is the complement of a
/// minimum vertex cover of the bipartite "disjoint arcs" graph between
/// `S_p` and `S_q \ S_p`, found with König's theorem.
pub fn carc_max_clique(model: &ArcModel) -> Vec<Vertex> {
    let n = model.arcs.len();
    let full: Vec<Vertex> = (0..n).filter(|&v| model.arcs[v] == Arc::Full).collect();
    let spans: Vec<Vertex> = (0..n).filter(|&v| model.arcs[v] != Arc::Full).collect();
    let covered: Vec<Vec<bool>> = model
        .arcs
        .iter()
        .map(|&a| (0..model.len).map(|p| model.covers(a, p)).collect())
        .collect();
    let meets = |u: Vertex, v: Vertex| (0..model.len).any(|p| covered[u][p] && covered[v][p]);

    let mut starts: Vec<usize> = spans
        .iter()
        .map(|&v| match model.arcs[v] {
            Arc::Span { start, .. } => start,
            Arc::Full => unreachable!(),
        })
        .collect();
    starts.sort_unstable();
    starts.dedup();

    let mut best: Vec<Vertex> = Vec::new();
    for (i, &p) in starts.iter().enumerate() {
        let on_p: Vec<Vertex> = spans.iter().copied().filter(|&v| covered[v][p]).collect();
        for &q in &starts[i..] {
            let only_q: Vec<Vertex> = spans
                .iter()
                .copied()
                .filter(|&v| covered[v][q] && !covered[v][p])
                .collect();
            let clique = cobipartite_max_clique(&on_p, &only_q, |a, b| !meets(a, b));
            if better_clique(&clique, &best) {
                best = clique;
            }
        }
    }
    best.extend(full);
    best.sort_unstable();
    assert!(
        best.iter()
            .enumerate()
            .all(|(i, &u)| best[i + 1..].iter().all(|&v| meets(u, v))),
        "reported clique must be pairwise intersecting"
    );
    best
}

/// Maximum clique in a co-bipartite graph given by two cliques `left` and
/// `right` and the cross non-adjacency relation `disjoint`. Returned sorted.
fn cobipartite_max_clique<F>(left: &[Vertex], right: &[Vertex], disjoint: F) -> Vec<Vertex>
where
    F: Fn(Vertex, Vertex) -> bool,
{
    let conflicts: Vec<Vec<usize>> = left
        .iter()
        .map(|&a| {
            (0..right.len())
                .filter(|&j| disjoint(a, right[j]))
                .collect()
        })
        .collect();
    let matching = max_bipartite_matching(&conflicts, right.len());
    let (cover_left, cover_right) = konig_cover(&conflicts, right.len(), &matching);
    let mut clique: Vec<Vertex> = left
        .iter()
        .enumerate()
        .filter(|&(i, _)| !cover_left[i])
        .map(|(_, &v)| v)
        .chain(
            right
                .iter()
                .enumerate()
                .filter(|&(j, _)| !cover_right[j])
                .map(|(_, &v)| v),
        )
        .collect();
    clique.sort_unstable();
    clique
}

/// Kuhn's augmenting-path matching. `adj[i]` lists right neighbors of left
/// vertex `i`. Returns, for each left vertex, its matched right vertex.
pub(crate) fn max_bipartite_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    fn augment(
        i: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if match_right[j].is_none_or(|k| augment(k, adj, seen, match_right)) {
                match_right[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut match_right = vec![None; right];
    for i in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(i, adj, &mut seen, &mut match_right);
    }
    let mut match_left = vec![None; adj.len()];
    for (j, m) in match_right.iter().enumerate() {
        if let Some(i) = *m {
            match_left[i] = Some(j);
        }
    }
    match_left
}

/// Minimum vertex cover from a maximum matching (König): with `Z` the
/// vertices reachable from unmatched left vertices by alternating paths, the
/// cover is `(L \ Z) ∪ (R ∩ Z)`.
pub(crate) fn konig_cover(
    adj: &[Vec<usize>],
    right: usize,
    match_left: &[Option<usize>],
) -> (Vec<bool>, Vec<bool>) {
    let mut match_right = vec![None; right];
    for (i, m) in match_left.iter().enumerate() {
        if let Some(j) = *m {
            match_right[j] = Some(i);
        }
    }
    let mut z_left = vec![false; adj.len()];
    let mut z_right = vec![false; right];
    let mut stack: Vec<usize> = (0..adj.len())
        .filter(|&i| match_left[i].is_none())
        .collect();
    stack.iter().for_each(|&i| z_left[i] = true);
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !z_right[j] && match_left[i] != Some(j) {
                z_right[j] = true;
                if let Some(k) = match_right[j] {
                    if !z_left[k] {
                        z_left[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
    }
    (z_left.iter().map(|&z| !z).collect(), z_right)
}
