use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::fpt::decomposition::TreeDecomposition;
use crate::fpt::kclique::k_clique;
use crate::fpt::nice::{make_nice, NiceKind};
use crate::fpt::width::{heuristic_decomposition, DecompositionConfig};
use crate::graph::{is_valid_list_coloring, Color, ColorLists, SimpleGraph};

/// One DP row: colors of the bag vertices in canonical (sorted) order, plus
/// the rows of the children it was derived from.
struct Row {
    colors: Vec<Color>,
    from: [usize; 2],
}

/// List k-coloring by dynamic programming over a nice form of `d`.
///
/// Rows at a node are the proper, list-respecting colorings of its bag that
/// extend to the subtree below. Returns `None` when no coloring exists.
pub fn list_k_coloring(
    g: &SimpleGraph,
    lists: &ColorLists,
    k: Color,
    d: &TreeDecomposition,
) -> Result<Option<Vec<Color>>> {
    d.validate(g)?;
    if lists.len() != g.n() {
        return Err(Error::InvalidLists(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    for v in g.vertices() {
        if let Some(&color) = lists.list(v).iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ListColorOutOfRange {
                vertex: v,
                color,
                k,
            });
        }
    }

    let nice = make_nice(d);
    let mut tables: Vec<Vec<Row>> = Vec::with_capacity(nice.len());
    for node in nice.nodes() {
        let rows = match node.kind {
            NiceKind::Leaf => vec![Row {
                colors: Vec::new(),
                from: [0, 0],
            }],
            NiceKind::Introduce(v) => {
                let child = &tables[node.children[0]];
                let at = node
                    .bag
                    .binary_search(&v)
                    .expect("introduced vertex in bag");
                let mut rows = Vec::new();
                for (ri, row) in child.iter().enumerate() {
                    for &c in lists.list(v) {
                        // the child bag is node.bag without v, in the same order
                        let clash = node
                            .bag
                            .iter()
                            .filter(|&&w| w != v)
                            .zip(&row.colors)
                            .any(|(&w, &cw)| cw == c && g.has_edge(v, w));
                        if !clash {
                            let mut colors = row.colors.clone();
                            colors.insert(at, c);
                            rows.push(Row {
                                colors,
                                from: [ri, 0],
                            });
                        }
                    }
                }
                rows
            }
            NiceKind::Forget(v) => {
                let child_node = nice.node(node.children[0]);
                let at = child_node
                    .bag
                    .binary_search(&v)
                    .expect("forgotten vertex in child bag");
                let mut seen: HashSet<Vec<Color>> = HashSet::new();
                let mut rows = Vec::new();
                for (ri, row) in tables[node.children[0]].iter().enumerate() {
                    let mut colors = row.colors.clone();
                    colors.remove(at);
                    if seen.insert(colors.clone()) {
                        rows.push(Row {
                            colors,
                            from: [ri, 0],
                        });
                    }
                }
                rows
            }
            NiceKind::Join => {
                let (left, right) = (&tables[node.children[0]], &tables[node.children[1]]);
                let index: HashMap<&[Color], usize> = right
                    .iter()
                    .enumerate()
                    .map(|(i, r)| (r.colors.as_slice(), i))
                    .collect();
                left.iter()
                    .enumerate()
                    .filter_map(|(li, row)| {
                        index.get(row.colors.as_slice()).map(|&ri| Row {
                            colors: row.colors.clone(),
                            from: [li, ri],
                        })
                    })
                    .collect()
            }
        };
        tables.push(rows);
    }

    if tables[nice.root()].is_empty() {
        return Ok(None);
    }
    let mut coloring: Vec<Color> = vec![0; g.n()];
    let mut stack = vec![(nice.root(), 0usize)];
    while let Some((i, r)) = stack.pop() {
        let node = nice.node(i);
        let row = &tables[i][r];
        for (&v, &c) in node.bag.iter().zip(&row.colors) {
            coloring[v] = c;
        }
        for (slot, &child) in node.children.iter().enumerate() {
            stack.push((child, row.from[slot]));
        }
    }
    assert!(
        is_valid_list_coloring(g, lists, &coloring),
        "reconstructed coloring must be proper and list-respecting"
    );
    Ok(Some(coloring))
}

/// List k-coloring without a supplied decomposition: reject when a
/// `(k + 1)`-clique exists, otherwise run the DP on the best decomposition
/// the heuristics find.
pub fn solve_list_coloring(
    g: &SimpleGraph,
    lists: &ColorLists,
    k: Color,
    cfg: &DecompositionConfig,
) -> Result<Option<Vec<Color>>> {
    let d = heuristic_decomposition(g, cfg);
    if k_clique(g, k as usize + 1, &d)?.is_some() {
        return Ok(None);
    }
    list_k_coloring(g, lists, k, &d)
}
