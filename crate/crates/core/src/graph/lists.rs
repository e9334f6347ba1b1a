use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};

pub type Color = u32;

/// Per-vertex color lists over the palette `1..=k`.
///
/// A pre-coloring is expressed by giving the pre-colored vertices singleton
/// lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorLists {
    k: Color,
    lists: Vec<Vec<Color>>,
}

impl ColorLists {
    /// Validates and normalizes (sorts, dedups) the lists.
    pub fn new(k: Color, lists: Vec<Vec<Color>>) -> Result<Self> {
        let mut lists = lists;
        for (vertex, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(Error::InvalidLists(format!(
                    "vertex {vertex} has an empty list"
                )));
            }
            if let Some(&color) = list.iter().find(|&&c| c == 0 || c > k) {
                return Err(Error::ListColorOutOfRange { vertex, color, k });
            }
        }
        Ok(ColorLists { k, lists })
    }

    /// Every vertex may use every color in `1..=k`.
    pub fn uniform(n: usize, k: Color) -> Self {
        ColorLists {
            k,
            lists: vec![(1..=k).collect(); n],
        }
    }

    /// Full lists, except that each `(vertex, color)` pair is fixed.
    pub fn precoloring(n: usize, k: Color, fixed: &[(Vertex, Color)]) -> Result<Self> {
        let mut lists = vec![(1..=k).collect::<Vec<_>>(); n];
        for &(v, c) in fixed {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            lists[v] = vec![c];
        }
        ColorLists::new(k, lists)
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn allows(&self, v: Vertex, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// The same lists read against a larger palette.
    pub fn with_palette(&self, k: Color) -> Result<Self> {
        ColorLists::new(k, self.lists.clone())
    }
}

/// Whether `coloring` is proper on `g` and draws every color from its list.
pub fn is_valid_list_coloring(g: &SimpleGraph, lists: &ColorLists, coloring: &[Color]) -> bool {
    coloring.len() == g.n()
        && lists.len() == g.n()
        && g.vertices().all(|v| lists.allows(v, coloring[v]))
        && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ColorLists::new(2, vec![vec![1], vec![]]).is_err());
        assert_eq!(
            ColorLists::new(2, vec![vec![3]]),
            Err(Error::ListColorOutOfRange {
                vertex: 0,
                color: 3,
                k: 2
            })
        );
        let l = ColorLists::new(3, vec![vec![3, 1, 3]]).unwrap();
        assert_eq!(l.list(0), &[1, 3]);
    }

    #[test]
    fn precoloring_fixes_singletons() {
        let l = ColorLists::precoloring(3, 3, &[(1, 2)]).unwrap();
        assert_eq!(l.list(0), &[1, 2, 3]);
        assert_eq!(l.list(1), &[2]);
    }
}
