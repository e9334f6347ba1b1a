use crate::clique::{carc_max_clique, clique_cutset_decomposition, Arc, ArcKind, ArcModel};
use crate::error::{Error, Result};
use crate::graph::{better_clique, SimpleGraph, Vertex};
use crate::pattern::is_cactus;
use crate::representation::{verify_representation, HRepresentation, Verdict};

/// Arc model of an atom `a` from its representation `r` on a subdivided cactus.
///
/// Repeatedly: if the union `U` of the node sets induces a path or a cycle,
/// read the model off it. Otherwise take the smallest cut node `x` of `U`.
/// The sets avoiding `x` all lie in one component `C` of `U - x` (else the
/// holders of `x` form a clique cutset), and truncating every set to
/// `C + x` keeps sets connected and preserves all intersections.
pub fn cactus_atom_arc_model(a: &SimpleGraph, r: &HRepresentation) -> Result<ArcModel> {
    if a.n() != r.vertex_count() {
        return Err(Error::DomainMismatch {
            graph: a.n(),
            rep: r.vertex_count(),
        });
    }
    if a.n() == 0 {
        return Ok(ArcModel {
            kind: ArcKind::Path,
            len: 0,
            arcs: Vec::new(),
        });
    }
    let skeleton = r.pattern().skeleton();
    let mut sets: Vec<Vec<usize>> = r.sets().to_vec();
    loop {
        let mut union: Vec<usize> = sets.iter().flatten().copied().collect();
        union.sort_unstable();
        union.dedup();
        let local = skeleton.induced_subgraph(&union);
        if !local.is_connected() {
            return Err(Error::InvalidRepresentation(
                "node sets of an atom must have a connected union".into(),
            ));
        }
        if let Some((kind, order)) = path_or_cycle(&local) {
            let model = arc_model(kind, &order, &union, &sets);
            if model.intersection_graph() != *a {
                return Err(Error::InvalidRepresentation(
                    "representation does not match the atom".into(),
                ));
            }
            return Ok(model);
        }
        let (x, comps) = smallest_cut_node(&local)
            .expect("a connected cactus that is not a path or cycle has a cut node");
        let x_node = union[x];
        let mut comp_of = vec![usize::MAX; local.n()];
        for (i, c) in comps.iter().enumerate() {
            for &y in c {
                comp_of[y] = i;
            }
        }
        let mut target = None;
        for s in &sets {
            if s.binary_search(&x_node).is_ok() {
                continue;
            }
            let y = union.binary_search(&s[0]).expect("set node in union");
            match target {
                None => target = Some(comp_of[y]),
                Some(c) if c != comp_of[y] => return Err(Error::NotAnAtom { node: x_node }),
                Some(_) => {}
            }
        }
        let keep_comp = target.unwrap_or(0);
        let keep = |node: usize| {
            node == x_node
                || comp_of[union.binary_search(&node).expect("set node in union")] == keep_comp
        };
        for s in &mut sets {
            s.retain(|&node| keep(node));
        }
    }
}

/// Classifies a connected graph as a path or a cycle, returning its vertices in order.
fn path_or_cycle(g: &SimpleGraph) -> Option<(ArcKind, Vec<usize>)> {
    let n = g.n();
    if g.vertices().any(|v| g.degree(v) > 2) {
        return None;
    }
    let (kind, start) = if g.m() + 1 == n {
        let start = g
            .vertices()
            .find(|&v| g.degree(v) <= 1)
            .expect("a path has an end");
        (ArcKind::Path, start)
    } else if g.m() == n {
        (ArcKind::Cycle, 0)
    } else {
        return None;
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = g
            .neighbors(cur)
            .find(|&y| y != prev)
            .expect("walk continues");
        prev = cur;
        cur = next;
        order.push(cur);
    }
    Some((kind, order))
}

/// Smallest cut vertex of a connected graph with the components it leaves.
fn smallest_cut_node(g: &SimpleGraph) -> Option<(usize, Vec<Vec<usize>>)> {
    let mut removed = vec![false; g.n()];
    for x in g.vertices() {
        removed[x] = true;
        let comps = g.components_avoiding(&removed);
        removed[x] = false;
        if comps.len() >= 2 {
            return Some((x, comps));
        }
    }
    None
}

fn arc_model(kind: ArcKind, order: &[usize], union: &[usize], sets: &[Vec<usize>]) -> ArcModel {
    let len = order.len();
    let mut position = vec![0; len];
    for (p, &y) in order.iter().enumerate() {
        position[y] = p;
    }
    let arcs = sets
        .iter()
        .map(|s| {
            let mut covered = vec![false; len];
            for node in s {
                covered[position[union.binary_search(node).expect("set node in union")]] = true;
            }
            to_arc(kind, &covered)
        })
        .collect();
    ArcModel { kind, len, arcs }
}

/// The arc covering exactly the marked positions, which must be contiguous.
fn to_arc(kind: ArcKind, covered: &[bool]) -> Arc {
    let len = covered.len();
    if covered.iter().all(|&c| c) {
        return match kind {
            ArcKind::Cycle => Arc::Full,
            ArcKind::Path => Arc::Span {
                start: 0,
                end: len - 1,
            },
        };
    }
    let start = match kind {
        ArcKind::Path => covered.iter().position(|&c| c),
        ArcKind::Cycle => (0..len).find(|&p| covered[p] && !covered[(p + len - 1) % len]),
    }
    .expect("non-empty set");
    let mut end = start;
    while covered[(end + 1) % len] && (kind == ArcKind::Cycle || end + 1 < len) {
        end = (end + 1) % len;
    }
    Arc::Span { start, end }
}

/// Maximum clique of an H-graph for a cactus `H`, given a representation:
/// the best over the atoms of a clique-cutset decomposition, each solved on
/// its arc model.
pub fn clique_cactus(g: &SimpleGraph, r: &HRepresentation) -> Result<Vec<Vertex>> {
    if !is_cactus(r.pattern().base()) {
        return Err(Error::NotCactus);
    }
    match verify_representation(g, r)? {
        Verdict::Ok => {}
        bad => return Err(Error::VerificationFailed(bad)),
    }
    let atoms = clique_cutset_decomposition(g);
    let mut best: Vec<Vertex> = Vec::new();
    for (i, atom) in atoms.atoms.iter().enumerate() {
        let model = cactus_atom_arc_model(&atoms.induced(g, i), &r.restrict(atom))?;
        let mut clique: Vec<Vertex> = carc_max_clique(&model)
            .into_iter()
            .map(|j| atom[j])
            .collect();
        clique.sort_unstable();
        if better_clique(&clique, &best) {
            best = clique;
        }
    }
    assert!(
        g.is_clique(&best),
        "reported clique must be pairwise adjacent"
    );
    Ok(best)
}
