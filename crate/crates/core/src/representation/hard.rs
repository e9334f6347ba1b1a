use crate::error::{Error, Result};
use crate::graph::{complement, two_subdivision, LabeledTwoSubdivision, Multigraph, SimpleGraph};
use crate::pattern::TriPartition;
use crate::representation::{HRepresentation, SubdividedPattern};

/// The complement of a 2-subdivision together with an H-representation of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HardInstance {
    pub target: SimpleGraph,
    pub subdivision: LabeledTwoSubdivision,
    pub representation: HRepresentation,
}

/// Walks one subdivided connecting edge from its end in a given part.
struct Track<'a> {
    pattern: &'a SubdividedPattern,
    edge: usize,
    from: usize,
}

impl Track<'_> {
    /// Nodes at positions `lo..=hi` (1-based, counted from the `from` end).
    fn span(&self, lo: usize, hi: usize) -> impl Iterator<Item = usize> + '_ {
        (lo..=hi).map(move |i| self.pattern.path_node(self.edge, self.from, i))
    }
}

/// Builds an H-representation of the complement of the 2-subdivision of `g`.
///
/// Two edges between `H1` and `H2` become paths `P12`, `Q12` with `n` internal
/// nodes, two between `H1` and `H3` become `P13`, `Q13` with `n` internal
/// nodes, and two between `H2` and `H3` become `P23`, `Q23` with `m` internal
/// nodes; positions on each path count from the lower-numbered part. Then,
/// with `l(k) < r(k)` the endpoints of edge `k` (1-based):
///
/// * `v_i = H1 + P12[1..=i] + Q12[1..=n-i] + P13[1..=i] + Q13[1..=n-i]`
/// * `a_k = H2 + P12[l+1..=n] + Q12[n-l+1..=n] + P23[1..=k] + Q23[1..=m-k]`
/// * `b_k = H3 + P13[r+1..=n] + Q13[n-r+1..=n] + P23[k+1..=m] + Q23[m-k+1..=m]`
///
/// so `v_i` misses `a_k` exactly when `i = l(k)`, misses `b_k` exactly when
/// `i = r(k)`, and `a_k` misses `b_j` exactly when `k = j`.
pub fn generate_hard_instance(
    g: &SimpleGraph,
    h: &Multigraph,
    part: &TriPartition,
) -> Result<HardInstance> {
    part.check(h).map_err(Error::InvalidPartition)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidPartition(
            "the input graph needs at least one vertex".into(),
        ));
    }
    let sub = two_subdivision(g);
    let m = sub.edge_count();

    let [p12, q12] = [part.links[0][0], part.links[0][1]];
    let [p13, q13] = [part.links[1][0], part.links[1][1]];
    let [p23, q23] = [part.links[2][0], part.links[2][1]];
    let mut counts = vec![0; h.edge_count()];
    for e in [p12, q12, p13, q13] {
        counts[e] = n;
    }
    for e in [p23, q23] {
        counts[e] = m;
    }
    let pattern = SubdividedPattern::new(h.clone(), counts)?;

    // the endpoint of edge e inside part i
    let end_in = |e: usize, i: usize| -> usize {
        let (u, v) = h.endpoints(e);
        if part.parts[i].binary_search(&u).is_ok() {
            u
        } else {
            v
        }
    };
    let track = |e: usize, i: usize| Track {
        pattern: &pattern,
        edge: e,
        from: end_in(e, i),
    };
    let (tp12, tq12) = (track(p12, 0), track(q12, 0));
    let (tp13, tq13) = (track(p13, 0), track(q13, 0));
    let (tp23, tq23) = (track(p23, 1), track(q23, 1));

    let mut sets = Vec::with_capacity(n + 2 * m);
    for i in 1..=n {
        let mut s = part.parts[0].clone();
        s.extend(tp12.span(1, i));
        s.extend(tq12.span(1, n - i));
        s.extend(tp13.span(1, i));
        s.extend(tq13.span(1, n - i));
        sets.push(s);
    }
    for k in 1..=m {
        let l = sub.left[k - 1] + 1;
        let mut s = part.parts[1].clone();
        s.extend(tp12.span(l + 1, n));
        s.extend(tq12.span(n - l + 1, n));
        s.extend(tp23.span(1, k));
        s.extend(tq23.span(1, m - k));
        sets.push(s);
    }
    for k in 1..=m {
        let r = sub.right[k - 1] + 1;
        let mut s = part.parts[2].clone();
        s.extend(tp13.span(r + 1, n));
        s.extend(tq13.span(n - r + 1, n));
        s.extend(tp23.span(k + 1, m));
        s.extend(tq23.span(m - k + 1, m));
        sets.push(s);
    }
    let representation = HRepresentation::new(pattern.clone(), sets)?;
    Ok(HardInstance {
        target: complement(&sub.result),
        subdivision: sub,
        representation,
    })
}
