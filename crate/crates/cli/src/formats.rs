//! Text formats. All vertex, node, edge and bag ids in files are 1-based.
//!
//! * `.gr`: `p tw <n> <m>` then `m` lines `<u> <v>`.
//! * `.td`: `s td <bags> <width + 1> <n>`, one `b <i> <vertices...>` per bag,
//!   then tree edges `<i> <j>`.
//! * `.hgr`: `h <n> <m>` then `m` lines `<u> <v>`; repeated pairs are parallel
//!   edges and the line order fixes the edge index.
//! * `.rep`: `r <pattern-file>`, `subdiv <edge> <t>` per subdivided edge, then
//!   `map <v> <node>...` per vertex with nodes written `b:<h>` (branch node)
//!   or `s:<e>.<i>` (`i`-th internal node of edge `e` from its first endpoint).
//! * lists: `<v>: <c>...` per vertex.
//!
//! Lines starting with `c` are comments everywhere; blank lines are ignored.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use hgraph::fpt::TreeDecomposition;
use hgraph::graph::{Color, ColorLists};
use hgraph::representation::{HRepresentation, PatternNode, SubdividedPattern};
use hgraph::{Multigraph, SimpleGraph};

use crate::error::{CliError, CliResult};

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

struct Reader<'a> {
    origin: &'a str,
    lines: std::vec::IntoIter<Line<'a>>,
    last: usize,
}

impl<'a> Reader<'a> {
    fn new(origin: &'a str, text: &'a str) -> Self {
        let lines: Vec<Line<'a>> = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let tokens: Vec<&str> = l.split_whitespace().collect();
                match tokens.first() {
                    None => None,
                    Some(&"c") => None,
                    Some(_) => Some(Line {
                        number: i + 1,
                        tokens,
                    }),
                }
            })
            .collect();
        Reader {
            origin,
            lines: lines.into_iter(),
            last: 0,
        }
    }

    fn error(&self, line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            origin: self.origin.to_string(),
            line,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Line<'a>> {
        let l = self.lines.next()?;
        self.last = l.number;
        Some(l)
    }

    fn expect(&mut self, what: &str) -> CliResult<Line<'a>> {
        let last = self.last;
        self.next().ok_or_else(|| {
            self.error(
                last + 1,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }

    fn number(&self, line: &Line, idx: usize, what: &str) -> CliResult<usize> {
        let tok = line
            .tokens
            .get(idx)
            .ok_or_else(|| self.error(line.number, format!("missing {what}")))?;
        tok.parse().map_err(|_| {
            self.error(
                line.number,
                format!("{what} must be a non-negative integer, got `{tok}`"),
            )
        })
    }

    /// A 1-based id in `1..=bound`, returned 0-based.
    fn id(&self, line: &Line, idx: usize, bound: usize, what: &str) -> CliResult<usize> {
        let x = self.number(line, idx, what)?;
        if x == 0 || x > bound {
            return Err(self.error(line.number, format!("{what} {x} outside 1..={bound}")));
        }
        Ok(x - 1)
    }

    fn arity(&self, line: &Line, n: usize) -> CliResult<()> {
        if line.tokens.len() != n {
            return Err(self.error(
                line.number,
                format!("expected {n} fields, found {}", line.tokens.len()),
            ));
        }
        Ok(())
    }

    fn header(&mut self, keyword: &[&str], fields: usize) -> CliResult<Line<'a>> {
        let shown = keyword.join(" ");
        let line = self.expect(&format!("`{shown}` header"))?;
        if line.tokens.len() < keyword.len() || line.tokens[..keyword.len()] != *keyword {
            return Err(self.error(line.number, format!("expected `{shown}` header")));
        }
        self.arity(&line, keyword.len() + fields)?;
        Ok(line)
    }

    fn finish(&mut self) -> CliResult<()> {
        match self.next() {
            None => Ok(()),
            Some(l) => Err(self.error(l.number, "unexpected trailing line")),
        }
    }
}

pub fn parse_gr(origin: &str, text: &str) -> CliResult<SimpleGraph> {
    let mut r = Reader::new(origin, text);
    let head = r.header(&["p", "tw"], 2)?;
    let n = r.number(&head, 2, "vertex count")?;
    let m = r.number(&head, 3, "edge count")?;
    let mut g = SimpleGraph::new(n);
    for _ in 0..m {
        let line = r.expect("an edge line")?;
        r.arity(&line, 2)?;
        let u = r.id(&line, 0, n, "vertex")?;
        let v = r.id(&line, 1, n, "vertex")?;
        if u == v {
            return Err(r.error(line.number, format!("loop at vertex {}", u + 1)));
        }
        if !g.add_edge(u, v)? {
            return Err(r.error(line.number, format!("repeated edge {} {}", u + 1, v + 1)));
        }
    }
    r.finish()?;
    Ok(g)
}

pub fn emit_gr(g: &SimpleGraph) -> String {
    let mut s = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "{} {}", u + 1, v + 1).unwrap();
    }
    s
}

pub fn parse_td(origin: &str, text: &str) -> CliResult<TreeDecomposition> {
    let mut r = Reader::new(origin, text);
    let head = r.header(&["s", "td"], 3)?;
    let count = r.number(&head, 2, "bag count")?;
    let size = r.number(&head, 3, "maximum bag size")?;
    let n = r.number(&head, 4, "vertex count")?;
    let mut bags = vec![None; count];
    for _ in 0..count {
        let line = r.expect("a bag line")?;
        if line.tokens[0] != "b" {
            return Err(r.error(line.number, "expected a `b` bag line"));
        }
        let i = r.id(&line, 1, count, "bag")?;
        if bags[i].is_some() {
            return Err(r.error(line.number, format!("bag {} given twice", i + 1)));
        }
        let mut bag = Vec::with_capacity(line.tokens.len() - 2);
        for idx in 2..line.tokens.len() {
            bag.push(r.id(&line, idx, n, "vertex")?);
        }
        if bag.len() > size {
            return Err(r.error(
                line.number,
                format!("bag has {} vertices, header allows {size}", bag.len()),
            ));
        }
        bags[i] = Some(bag);
    }
    let mut edges = Vec::new();
    while let Some(line) = r.next() {
        r.arity(&line, 2)?;
        edges.push((r.id(&line, 0, count, "bag")?, r.id(&line, 1, count, "bag")?));
    }
    let td = TreeDecomposition::new(
        bags.into_iter()
            .map(|b| b.expect("all bags read"))
            .collect(),
        edges,
    );
    if td.bag_count() > 0 && td.bags().iter().map(Vec::len).max() != Some(size) {
        return Err(r.error(
            head.number,
            format!("header bag size {size} does not match the bags"),
        ));
    }
    Ok(td)
}

pub fn emit_td(td: &TreeDecomposition, n: usize) -> String {
    let size = td.bags().iter().map(Vec::len).max().unwrap_or(0);
    let mut s = format!("s td {} {} {}\n", td.bag_count(), size, n);
    for (i, bag) in td.bags().iter().enumerate() {
        write!(s, "b {}", i + 1).unwrap();
        for v in bag {
            write!(s, " {}", v + 1).unwrap();
        }
        s.push('\n');
    }
    for &(x, y) in td.tree_edges() {
        writeln!(s, "{} {}", x + 1, y + 1).unwrap();
    }
    s
}

pub fn parse_hgr(origin: &str, text: &str) -> CliResult<Multigraph> {
    let mut r = Reader::new(origin, text);
    let head = r.header(&["h"], 2)?;
    let n = r.number(&head, 1, "node count")?;
    let m = r.number(&head, 2, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = r.expect("an edge line")?;
        r.arity(&line, 2)?;
        edges.push((r.id(&line, 0, n, "node")?, r.id(&line, 1, n, "node")?));
    }
    r.finish()?;
    Ok(Multigraph::new(n, edges)?)
}

pub fn emit_hgr(h: &Multigraph) -> String {
    let mut s = format!("h {} {}\n", h.node_count(), h.edge_count());
    for &(u, v) in h.edges() {
        writeln!(s, "{} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// A representation file before its pattern is loaded.
pub struct RepFile {
    pub pattern_path: String,
    body: Vec<(usize, Vec<String>)>,
    origin: String,
}

pub fn parse_rep_header(origin: &str, text: &str) -> CliResult<RepFile> {
    let mut r = Reader::new(origin, text);
    let head = r.header(&["r"], 1)?;
    let pattern_path = head.tokens[1].to_string();
    let mut body = Vec::new();
    while let Some(line) = r.next() {
        body.push((
            line.number,
            line.tokens.iter().map(|t| t.to_string()).collect(),
        ));
    }
    Ok(RepFile {
        pattern_path,
        body,
        origin: origin.to_string(),
    })
}

impl RepFile {
    /// Resolves `pattern_path` against the directory of the rep file.
    pub fn pattern_location(&self, rep_path: &Path) -> PathBuf {
        let p = Path::new(&self.pattern_path);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            rep_path.parent().unwrap_or(Path::new("")).join(p)
        }
    }

    pub fn build(&self, base: Multigraph) -> CliResult<HRepresentation> {
        let err = |line: usize, message: String| CliError::Parse {
            origin: self.origin.clone(),
            line,
            message,
        };
        let id = |line: usize, tok: &str, bound: usize, what: &str| -> CliResult<usize> {
            let x: usize = tok.parse().map_err(|_| {
                err(
                    line,
                    format!("{what} must be a positive integer, got `{tok}`"),
                )
            })?;
            if x == 0 || x > bound {
                return Err(err(line, format!("{what} {x} outside 1..={bound}")));
            }
            Ok(x - 1)
        };
        let m = base.edge_count();
        let mut counts = vec![0; m];
        let mut seen_subdiv = vec![false; m];
        let mut maps: Vec<(usize, &[String])> = Vec::new();
        for (line, tokens) in &self.body {
            let line = *line;
            match tokens[0].as_str() {
                "subdiv" => {
                    if !maps.is_empty() {
                        return Err(err(line, "`subdiv` lines must precede `map` lines".into()));
                    }
                    if tokens.len() != 3 {
                        return Err(err(
                            line,
                            format!("expected 3 fields, found {}", tokens.len()),
                        ));
                    }
                    let e = id(line, &tokens[1], m, "edge")?;
                    if seen_subdiv[e] {
                        return Err(err(line, format!("edge {} subdivided twice", e + 1)));
                    }
                    seen_subdiv[e] = true;
                    counts[e] = tokens[2].parse().map_err(|_| {
                        err(
                            line,
                            format!("subdivision count must be an integer, got `{}`", tokens[2]),
                        )
                    })?;
                    if base.is_loop(e) && counts[e] > 0 {
                        return Err(err(
                            line,
                            format!("loop edge {} cannot be subdivided", e + 1),
                        ));
                    }
                }
                "map" => {
                    if tokens.len() < 2 {
                        return Err(err(line, "missing vertex".into()));
                    }
                    maps.push((line, &tokens[1..]));
                }
                other => return Err(err(line, format!("unknown directive `{other}`"))),
            }
        }
        let pattern = SubdividedPattern::new(base, counts)?;
        let n = maps.len();
        let mut sets: Vec<Option<Vec<usize>>> = vec![None; n];
        for (line, tokens) in maps {
            let v = id(line, &tokens[0], n, "vertex")?;
            if sets[v].is_some() {
                return Err(err(line, format!("vertex {} mapped twice", v + 1)));
            }
            let mut set = Vec::with_capacity(tokens.len() - 1);
            for tok in &tokens[1..] {
                set.push(parse_node(&pattern, tok).map_err(|m| err(line, m))?);
            }
            if set.is_empty() {
                return Err(err(line, format!("vertex {} has no nodes", v + 1)));
            }
            sets[v] = Some(set);
        }
        let sets = sets
            .into_iter()
            .map(|s| s.expect("every vertex mapped once"))
            .collect();
        Ok(HRepresentation::new(pattern, sets)?)
    }
}

fn parse_node(pattern: &SubdividedPattern, tok: &str) -> Result<usize, String> {
    let base = pattern.base();
    if let Some(h) = tok.strip_prefix("b:") {
        let h: usize = h.parse().map_err(|_| format!("bad branch node `{tok}`"))?;
        if h == 0 || h > base.node_count() {
            return Err(format!("branch node {h} outside 1..={}", base.node_count()));
        }
        return Ok(h - 1);
    }
    if let Some(rest) = tok.strip_prefix("s:") {
        let (e, i) = rest
            .split_once('.')
            .ok_or_else(|| format!("bad subdivision node `{tok}`"))?;
        let e: usize = e
            .parse()
            .map_err(|_| format!("bad subdivision node `{tok}`"))?;
        let i: usize = i
            .parse()
            .map_err(|_| format!("bad subdivision node `{tok}`"))?;
        if e == 0 || e > base.edge_count() {
            return Err(format!("edge {e} outside 1..={}", base.edge_count()));
        }
        return pattern
            .index(PatternNode::Sub {
                edge: e - 1,
                index: i,
            })
            .ok_or_else(|| {
                format!(
                    "undeclared subdivision node {tok}: edge {e} has {} internal nodes",
                    pattern.subdivisions()[e - 1]
                )
            });
    }
    Err(format!(
        "node `{tok}` must be `b:<node>` or `s:<edge>.<index>`"
    ))
}

pub fn emit_rep(r: &HRepresentation, pattern_path: &str) -> String {
    let pattern = r.pattern();
    let mut s = format!("r {pattern_path}\n");
    for (e, &t) in pattern.subdivisions().iter().enumerate() {
        if t > 0 {
            writeln!(s, "subdiv {} {}", e + 1, t).unwrap();
        }
    }
    for (v, set) in r.sets().iter().enumerate() {
        write!(s, "map {}", v + 1).unwrap();
        for &x in set {
            match pattern.node(x) {
                PatternNode::Branch(h) => write!(s, " b:{}", h + 1).unwrap(),
                PatternNode::Sub { edge, index } => write!(s, " s:{}.{}", edge + 1, index).unwrap(),
            }
        }
        s.push('\n');
    }
    s
}

/// Parses a lists file for `n` vertices with palette `1..=k`; vertices
/// without a line may use every color.
pub fn parse_lists(origin: &str, text: &str, n: usize, k: Color) -> CliResult<ColorLists> {
    let mut r = Reader::new(origin, text);
    let mut lists: Vec<Option<Vec<Color>>> = vec![None; n];
    while let Some(line) = r.next() {
        let head = line.tokens[0];
        let v = head
            .strip_suffix(':')
            .ok_or_else(|| r.error(line.number, format!("expected `<vertex>:`, got `{head}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| r.error(line.number, format!("bad vertex `{v}`")))?;
        if v == 0 || v > n {
            return Err(r.error(line.number, format!("vertex {v} outside 1..={n}")));
        }
        if lists[v - 1].is_some() {
            return Err(r.error(line.number, format!("vertex {v} listed twice")));
        }
        let mut colors = Vec::new();
        for idx in 1..line.tokens.len() {
            let c = r.number(&line, idx, "color")?;
            if c == 0 || c > k as usize {
                return Err(r.error(line.number, format!("color {c} outside 1..={k}")));
            }
            colors.push(c as Color);
        }
        if colors.is_empty() {
            return Err(r.error(line.number, format!("vertex {v} has an empty list")));
        }
        lists[v - 1] = Some(colors);
    }
    let lists = lists
        .into_iter()
        .map(|l| l.unwrap_or_else(|| (1..=k).collect()))
        .collect();
    Ok(ColorLists::new(k, lists)?)
}

pub fn emit_lists(lists: &ColorLists) -> String {
    let mut s = String::new();
    for v in 0..lists.len() {
        write!(s, "{}:", v + 1).unwrap();
        for c in lists.list(v) {
            write!(s, " {c}").unwrap();
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gr_round_trip() {
        let text = "c a path\np tw 3 2\n1 2\n2 3\n";
        let g = parse_gr("t.gr", text).unwrap();
        assert_eq!(g, SimpleGraph::path(3));
        assert_eq!(emit_gr(&g), "p tw 3 2\n1 2\n2 3\n");
    }

    #[test]
    fn gr_diagnostics() {
        let e = parse_gr("t.gr", "p tw 3 2\n1 2\n2 4\n").unwrap_err();
        assert_eq!(e.to_string(), "t.gr:3: vertex 4 outside 1..=3");
        let e = parse_gr("t.gr", "p tw 3 2\n1 2\n").unwrap_err();
        assert!(e.to_string().starts_with("t.gr:3: unexpected end of input"));
        let e = parse_gr("t.gr", "p tw 2 2\n1 2\n2 1\n").unwrap_err();
        assert_eq!(e.to_string(), "t.gr:3: repeated edge 2 1");
        assert!(parse_gr("t.gr", "p td 2 0\n").is_err());
    }

    #[test]
    fn td_round_trip() {
        let text = "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
        let td = parse_td("t.td", text).unwrap();
        td.validate(&SimpleGraph::path(3)).unwrap();
        assert_eq!(emit_td(&td, 3), text);
        assert!(parse_td("t.td", "s td 1 3 3\nb 1 1 2\n").is_err());
    }

    #[test]
    fn hgr_keeps_parallel_edges() {
        let text = "h 2 3\n1 2\n1 2\n2 2\n";
        let h = parse_hgr("t.hgr", text).unwrap();
        assert_eq!(h.edge_count(), 3);
        assert_eq!(emit_hgr(&h), text);
    }

    #[test]
    fn rep_round_trip_and_undeclared_node() {
        let text = "r k3.hgr\nsubdiv 1 2\nmap 1 b:1 s:1.1\nmap 2 b:2 s:1.1 s:1.2\n";
        let rep = parse_rep_header("t.rep", text).unwrap();
        let r = rep.build(Multigraph::complete(3)).unwrap();
        assert_eq!(r.set(0), &[0, 3]);
        assert_eq!(emit_rep(&r, "k3.hgr"), text);
        let bad = "r k3.hgr\nsubdiv 1 2\nmap 1 b:1 s:1.3\n";
        let e = parse_rep_header("t.rep", bad)
            .unwrap()
            .build(Multigraph::complete(3))
            .unwrap_err();
        assert_eq!(
            e.to_string(),
            "t.rep:3: undeclared subdivision node s:1.3: edge 1 has 2 internal nodes"
        );
    }

    #[test]
    fn lists_default_to_the_palette() {
        let l = parse_lists("l", "1: 1\n3: 2 1\n", 3, 2).unwrap();
        assert_eq!(emit_lists(&l), "1: 1\n2: 1 2\n3: 1 2\n");
        assert!(parse_lists("l", "1: 3\n", 3, 2).is_err());
    }
}
