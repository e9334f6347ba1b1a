//! Exhaustive reference solvers. They share no code with the
//! polynomial-time and FPT paths they are used to check.

use crate::error::{Error, Result};
use crate::graph::{Color, ColorLists, SimpleGraph, Vertex};

/// Size limits for the exhaustive oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub clique_limit: usize,
    pub coloring_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            clique_limit: 20,
            coloring_limit: 12,
        }
    }
}

/// Maximum clique by exhaustive subset search over bitmasks.
///
/// Subsets are visited include-first in vertex order and only strictly larger
/// cliques replace the incumbent, so ties resolve to the lexicographically
/// smallest vertex set.
pub fn max_clique_bruteforce(g: &SimpleGraph, cfg: &OracleConfig) -> Result<Vec<Vertex>> {
    let n = g.n();
    if n > cfg.clique_limit || n > 63 {
        return Err(Error::OracleLimitExceeded {
            n,
            limit: cfg.clique_limit,
        });
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect();

    fn search(adj: &[u64], v: usize, chosen: u64, allowed: u64, best: &mut u64) {
        let n = adj.len();
        let size = chosen.count_ones();
        if size > best.count_ones() {
            *best = chosen;
        }
        if v == n {
            return;
        }
        let remaining = (allowed >> v).count_ones();
        if size + remaining <= best.count_ones() {
            return;
        }
        if allowed >> v & 1 == 1 {
            search(adj, v + 1, chosen | 1 << v, allowed & adj[v], best);
        }
        search(adj, v + 1, chosen, allowed, best);
    }

    let mut best = 0u64;
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    search(&adj, 0, 0, all, &mut best);
    Ok((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

/// List coloring by backtracking over vertices in index order, colors ascending.
/// Returns `None` when no list-respecting proper coloring exists.
pub fn list_coloring_bruteforce(
    g: &SimpleGraph,
    lists: &ColorLists,
    cfg: &OracleConfig,
) -> Result<Option<Vec<Color>>> {
    let n = g.n();
    if n > cfg.coloring_limit {
        return Err(Error::OracleLimitExceeded {
            n,
            limit: cfg.coloring_limit,
        });
    }
    if lists.len() != n {
        return Err(Error::InvalidLists(format!(
            "{} lists for {} vertices",
            lists.len(),
            n
        )));
    }

    fn assign(g: &SimpleGraph, lists: &ColorLists, v: usize, colors: &mut Vec<Color>) -> bool {
        if v == g.n() {
            return true;
        }
        for &c in lists.list(v) {
            if g.neighbors(v).filter(|&w| w < v).all(|w| colors[w] != c) {
                colors.push(c);
                if assign(g, lists, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }

    let mut colors = Vec::with_capacity(n);
    Ok(assign(g, lists, 0, &mut colors).then_some(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_valid_list_coloring;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn clique_oracle_examples() {
        assert_eq!(
            max_clique_bruteforce(&SimpleGraph::complete(4), &cfg()).unwrap(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            max_clique_bruteforce(&SimpleGraph::cycle(5), &cfg()).unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            max_clique_bruteforce(&SimpleGraph::petersen(), &cfg())
                .unwrap()
                .len(),
            2
        );
        assert!(max_clique_bruteforce(&SimpleGraph::new(0), &cfg())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn clique_oracle_tie_break_is_lexicographic() {
        // triangles {1,2,3} and {0,4,5}: {0,4,5} < {1,2,3}
        let g =
            SimpleGraph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(max_clique_bruteforce(&g, &cfg()).unwrap(), vec![0, 4, 5]);
    }

    #[test]
    fn clique_oracle_limit() {
        let limited = OracleConfig {
            clique_limit: 5,
            ..cfg()
        };
        assert_eq!(
            max_clique_bruteforce(&SimpleGraph::new(6), &limited),
            Err(Error::OracleLimitExceeded { n: 6, limit: 5 })
        );
    }

    #[test]
    fn coloring_oracle_examples() {
        let tri = SimpleGraph::complete(3);
        let two = ColorLists::uniform(3, 2);
        assert_eq!(list_coloring_bruteforce(&tri, &two, &cfg()).unwrap(), None);

        let edge = SimpleGraph::complete(2);
        let lists = ColorLists::new(2, vec![vec![1], vec![1, 2]]).unwrap();
        assert_eq!(
            list_coloring_bruteforce(&edge, &lists, &cfg()).unwrap(),
            Some(vec![1, 2])
        );

        let c5 = SimpleGraph::cycle(5);
        let three = ColorLists::uniform(5, 3);
        let col = list_coloring_bruteforce(&c5, &three, &cfg())
            .unwrap()
            .unwrap();
        assert!(is_valid_list_coloring(&c5, &three, &col));
        assert_eq!(
            list_coloring_bruteforce(&c5, &ColorLists::uniform(5, 2), &cfg()).unwrap(),
            None
        );
    }

    #[test]
    fn coloring_oracle_limit() {
        let g = SimpleGraph::new(13);
        let lists = ColorLists::uniform(13, 1);
        assert!(matches!(
            list_coloring_bruteforce(&g, &lists, &cfg()),
            Err(Error::OracleLimitExceeded { n: 13, limit: 12 })
        ));
    }

    #[test]
    fn oracles_are_deterministic() {
        let g = SimpleGraph::petersen();
        let a = max_clique_bruteforce(&g, &cfg()).unwrap();
        let b = max_clique_bruteforce(&g, &cfg()).unwrap();
        assert_eq!(a, b);
    }
}
